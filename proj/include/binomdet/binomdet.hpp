// Copyright 2026 The binomdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "binomdet/binomial.hpp"
#include "binomdet/errors.hpp"
#include "binomdet/exact.hpp"
#include "binomdet/formulas.hpp"
#include "binomdet/indexsets.hpp"
#include "binomdet/interchange.hpp"
#include "binomdet/matrix.hpp"
#include "binomdet/nullspace.hpp"
#include "binomdet/oracle.hpp"
#include "binomdet/verify.hpp"
