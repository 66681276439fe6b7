// Copyright 2026 The symtest authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace symtest {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct NotUnitary : Error {
    using Error::Error;
};
struct ClosureExceeded : Error {
    using Error::Error;
};
struct NonRealProbability : Error {
    using Error::Error;
};
struct UnnormalizedState : Error {
    using Error::Error;
};
struct BadParameterCount : Error {
    using Error::Error;
};
struct BadPauliTerm : Error {
    using Error::Error;
};
struct ExplicitMatrixUnsupported : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};

/// Global absolute tolerance for Hermiticity/unitarity checks.
double& global_tolerance();

}  // namespace symtest
