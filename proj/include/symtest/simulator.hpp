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

#include "symtest/group.hpp"
#include "symtest/hamiltonian.hpp"

namespace symtest {

// Exact statevector simulation of the two symmetry-test circuits. The
// control register is a single qudit of dimension |G| prepared directly in
// the uniform superposition, so non-power-of-two group orders need no gate
// decomposition. Acceptance projects the control onto that superposition.
//
// In choi mode the system register is doubled and carries the maximally
// entangled state; the depth-halving decomposition of the evolution used on
// hardware is an optimization with no effect on exact amplitudes and is not
// modeled.

enum class CircuitMode { choi, mixed };

struct CircuitInput {
    enum class Kind { maximally_mixed, basis, state };
    Kind kind = Kind::maximally_mixed;
    Eigen::Index basis_index = 0;  // for Kind::basis
    ComplexVector psi;             // for Kind::state, unit norm

    static CircuitInput maximally_mixed() { return {}; }
    static CircuitInput basis(Eigen::Index x) {
        CircuitInput in;
        in.kind = Kind::basis;
        in.basis_index = x;
        return in;
    }
    static CircuitInput state(ComplexVector psi) {
        CircuitInput in;
        in.kind = Kind::state;
        in.psi = std::move(psi);
        return in;
    }
};

struct CircuitInstance {
    CircuitMode mode = CircuitMode::mixed;
    HamiltonianSpec hamiltonian;
    GroupRep rep;
    double t = 0.0;
    CircuitInput input;
};

/// Exact acceptance probability of the circuit. Maximally mixed input is
/// evaluated by averaging over all d computational basis inputs.
double simulate_exact(const CircuitInstance& instance);

struct ShotRecord {
    std::uint64_t shots = 0;
    std::uint64_t accepts = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kShotChunks = 64;

/// Finite-shot estimation for the maximally mixed input: each shot draws a
/// uniform basis state and a Bernoulli outcome at that state's exact accept
/// probability. Shots are split over kShotChunks fixed chunks with sub-seeds
/// from derive_subseed, so the result is bit-identical for a given seed
/// regardless of thread count. Parallelized over chunks.
ShotRecord sample_shots(const CircuitInstance& instance, std::uint64_t shots,
                        std::uint64_t seed);

/// Single-threaded reference walking the same chunk schedule; must agree
/// with sample_shots bit for bit.
ShotRecord sample_shots_serial(const CircuitInstance& instance, std::uint64_t shots,
                               std::uint64_t seed);

}  // namespace symtest
