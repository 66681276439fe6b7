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

// Compares the serial reference sweep against the OpenMP sweep on a fixed
// asymmetric workload and verifies they produce identical rows.

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symtest/simulator.hpp"
#include "symtest/sweep.hpp"

using namespace symtest;

namespace {

RunConfig make_workload(int points) {
    RunConfig config;
    config.hamiltonian = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    config.generators = {realize_gate({"CNOT", {0, 1}, {}}, 2),
                         realize_gate({"SWAP", {0, 1}, {}}, 2)};
    for (int k = 0; k < points; ++k) {
        config.times.push_back(0.05 + 2.0 * k / double(points - 1));
    }
    config.methods = {Method::trace, Method::choi, Method::series, Method::circuit,
                      Method::shots};
    config.shots = 200000;
    config.seed = 42;
    config.series_order = 14;
    return config;
}

template <typename F>
double time_seconds(F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

double max_row_diff(const SweepResult& a, const SweepResult& b) {
    double worst = 0.0;
    auto cmp = [&](const std::optional<double>& x, const std::optional<double>& y) {
        if (x && y) worst = std::max(worst, std::abs(*x - *y));
    };
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        cmp(a.rows[i].p_trace, b.rows[i].p_trace);
        cmp(a.rows[i].p_choi, b.rows[i].p_choi);
        cmp(a.rows[i].p_series, b.rows[i].p_series);
        cmp(a.rows[i].p_circuit, b.rows[i].p_circuit);
        cmp(a.rows[i].shot_estimate, b.rows[i].shot_estimate);
    }
    return worst;
}

}  // namespace

int main() {
    const RunConfig config = make_workload(240);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    SweepResult serial_result, parallel_result;
    const double warm = time_seconds([&] { serial_result = run_sweep_serial(config); });
    const double serial = time_seconds([&] { serial_result = run_sweep_serial(config); });
    const double parallel = time_seconds([&] { parallel_result = run_sweep(config); });

    std::printf("warmup:   %8.3f s\n", warm);
    std::printf("serial:   %8.3f s\n", serial);
    std::printf("parallel: %8.3f s\n", parallel);
    std::printf("speedup:  %8.2fx\n", serial / parallel);

    const double diff = max_row_diff(serial_result, parallel_result);
    std::printf("max row difference: %.3e\n", diff);
    if (diff != 0.0) {
        std::printf("FAIL: serial and parallel sweeps disagree\n");
        return 1;
    }
    std::printf("OK: serial and parallel sweeps identical\n");
    return 0;
}
