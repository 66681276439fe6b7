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

#include <optional>
#include <string>
#include <vector>

#include "symtest/config.hpp"
#include "symtest/symcore.hpp"

namespace symtest {

/// One evaluated time point. Fields for methods that were not requested stay
/// empty and serialize as empty CSV cells.
struct SweepRow {
    double t = 0.0;
    double tau = 0.0;
    std::optional<double> p_trace;
    std::optional<double> p_choi;
    std::optional<double> p_series;
    std::optional<double> series_remainder;
    std::optional<double> p_circuit;
    std::optional<double> shot_estimate;
    std::optional<double> shot_stderr;
    double commutator_norm = 0.0;
    std::string verdict;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool consistent = true;
    std::vector<std::string> diagnostics;  // one line per violated cross-check
};

inline constexpr double kCrossMethodTol = 1e-9;

/// Evaluates every requested method at every time point. Points are
/// independent; the OpenMP variant partitions them across threads (rows come
/// back in t-order regardless). Per-point shot seeds derive from the config
/// seed and the point index, so both variants produce identical results.
SweepResult run_sweep(const RunConfig& config);
SweepResult run_sweep_serial(const RunConfig& config);

/// CSV per the output contract: full fixed header, %.12e numbers, empty
/// cells for absent methods, LF line endings.
std::string sweep_to_csv(const SweepResult& result);
std::string sweep_to_json(const SweepResult& result);

}  // namespace symtest
