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

#include <string>
#include <vector>

#include "symtest/numerics.hpp"

namespace symtest {

/// A generator: either a named gate with qubit indices or an explicit
/// unitary matrix. Named gates: I, X, Y, Z, H, S (one qubit index) and
/// CNOT, SWAP, CZ (two qubit indices).
struct GateSpec {
    std::string gate;          // empty when an explicit matrix is given
    std::vector<int> qubits;   // target indices, qubit 0 = leftmost factor
    ComplexMatrix matrix;      // explicit unitary (used when gate is empty)
};

/// Embeds a gate into the full 2^n-dimensional space. Qubit 0 is the most
/// significant tensor factor, so Z on qubit 0 of two equals Z ⊗ I.
ComplexMatrix realize_gate(const GateSpec& spec, int n_qubits);

/// A finite group of d x d unitaries, identity first, closed under
/// multiplication entrywise within closure_tol (phase-sensitive).
/// phase_consistent records whether closure held with exact phases; when it
/// does, the group projector is idempotent.
struct GroupRep {
    Eigen::Index dim = 0;
    std::vector<ComplexMatrix> elements;
    double closure_tol = 1e-8;
    bool phase_consistent = true;

    std::size_t order() const { return elements.size(); }
};

inline constexpr double kDefaultClosureTol = 1e-8;
inline constexpr std::size_t kDefaultMaxOrder = 4096;

/// Breadth-first multiplicative closure of the generators plus the identity.
/// Deduplication is by entrywise distance < tol, so elements differing only
/// by a phase are kept distinct. Deterministic element order. Throws
/// ClosureExceeded past max_order distinct elements, NotUnitary for a bad
/// generator.
GroupRep close_generators(const std::vector<ComplexMatrix>& generators, Eigen::Index dim,
                          std::size_t max_order = kDefaultMaxOrder,
                          double tol = kDefaultClosureTol);

/// (1/|G|) Σ_g conj(U(g)) ⊗ U(g) on the doubled d² space.
ComplexMatrix group_projector(const GroupRep& rep);

/// (1/|G|) Σ_g U(g) X U†(g).
ComplexMatrix twirl(const GroupRep& rep, const ComplexMatrix& x);

}  // namespace symtest
