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
#include <vector>

#include "symtest/group.hpp"
#include "symtest/hamiltonian.hpp"

namespace symtest {

/// Hardware-efficient layered ansatz: per layer, one Y rotation and one Z
/// rotation on every qubit, then a ring of CZ entanglers (omitted for a
/// single qubit; a single CZ for two). Parameter count = 2 * qubits * layers.
struct Ansatz {
    int qubits = 1;
    int layers = 1;
    std::vector<double> theta;  // radians, [layer][qubit][ry, rz] order
};

/// Statevector prepared from |0...0> through the layered circuit.
ComplexVector ansatz_prepare(const Ansatz& ansatz);

struct OptimizerConfig {
    int max_iters = 500;
    double grad_step = 1e-5;   // central finite-difference step
    double init_rate = 0.25;   // starting ascent rate, halved by backtracking
    double tol = 1e-7;         // gradient infinity-norm stopping threshold
};

struct VariationalResult {
    double final_value = 0.0;
    int iterations = 0;
    std::vector<double> trace;  // objective after each accepted step
    std::vector<double> theta_final;
    double oracle_optimum = 0.0;  // SVD value of the twirled evolution
    double gap = 0.0;             // oracle_optimum - final_value
};

/// Gradient ascent on the acceptance probability of the ansatz state, with
/// central finite-difference gradients and backtracking line search (the
/// rate is halved until the objective does not decrease), so the objective
/// trace is non-decreasing. Non-convergence is reported, never thrown.
VariationalResult optimize_acceptance(const HamiltonianSpec& h, const GroupRep& rep, double t,
                                      Ansatz start, const OptimizerConfig& config = {});

/// Runs `restarts` independent optimizations from uniform-random starts in
/// [0, 2π), restart r seeded with derive_subseed(seed, r), and returns the
/// best. Restarts run concurrently; each is deterministic for its sub-seed.
VariationalResult optimize_with_restarts(const HamiltonianSpec& h, const GroupRep& rep, double t,
                                         int qubits, int layers, int restarts,
                                         std::uint64_t seed,
                                         const OptimizerConfig& config = {});

}  // namespace symtest
