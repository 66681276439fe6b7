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

#include <cstdint>
#include <string>
#include <vector>

#include "symtest/group.hpp"
#include "symtest/hamiltonian.hpp"

namespace symtest {

enum class Method { trace, choi, series, circuit, shots, variational };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct VariationalConfig {
    int layers = 3;
    int restarts = 20;
    int max_iters = 500;
};

/// A validated run description: Hamiltonian, group generators (realized and
/// unitarity-checked at parse time), time grid, and method selection.
struct RunConfig {
    HamiltonianSpec hamiltonian;
    std::vector<ComplexMatrix> generators;
    std::size_t group_max_order = kDefaultMaxOrder;
    double group_tol = kDefaultClosureTol;
    std::vector<double> times;
    std::vector<Method> methods;
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    int series_order = 12;
    VariationalConfig variational;
    std::string output_path;
    std::string output_format = "csv";  // csv | json

    GroupRep build_group() const {
        return close_generators(generators, hamiltonian.dim(), group_max_order, group_tol);
    }
};

/// Parses and validates a JSON config document. Throws ParseError for
/// malformed JSON, ValidationError naming the failing invariant otherwise.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

}  // namespace symtest
