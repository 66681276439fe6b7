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

// Test-only helpers: seeded random inputs, the two worked-example groups,
// and an independent matrix-exponential oracle (Taylor series with scaling
// and squaring, sharing no code with the eigendecomposition path it checks).

#pragma once

#include <cmath>

#include "symtest/group.hpp"
#include "symtest/hamiltonian.hpp"
#include "symtest/rng.hpp"

namespace symtest::testing {

inline double gaussian(SplitMix64& rng) {
    // Box-Muller; one draw per call is plenty for test data.
    double u = rng.next_double();
    while (u == 0.0) u = rng.next_double();
    const double v = rng.next_double();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

inline ComplexMatrix random_matrix(Eigen::Index dim, SplitMix64& rng) {
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            m(i, j) = Complex(gaussian(rng), gaussian(rng));
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(Eigen::Index dim, SplitMix64& rng) {
    ComplexMatrix m = random_matrix(dim, rng);
    return (m + m.adjoint()) / 2.0;
}

inline ComplexVector random_state(Eigen::Index dim, SplitMix64& rng) {
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(gaussian(rng), gaussian(rng));
    return v / v.norm();
}

/// Random 2-qubit Pauli-sum Hamiltonian rescaled so the spectral norm is at
/// most `max_norm` (and nonzero).
inline HamiltonianSpec random_pauli_hamiltonian(SplitMix64& rng, double max_norm = 2.0) {
    static const char* kWords[] = {"XI", "YI", "ZI", "IX", "IY", "IZ",
                                   "XX", "YY", "ZZ", "XZ", "ZX", "XY"};
    std::vector<PauliTerm> terms;
    for (const char* w : kWords) {
        if (rng.next_double() < 0.5) continue;
        terms.push_back({gaussian(rng), w});
    }
    if (terms.empty()) terms.push_back({1.0, "ZI"});
    HamiltonianSpec draft = HamiltonianSpec::from_terms(2, terms);
    const double norm = draft.spectral_norm();
    if (norm > max_norm) {
        for (auto& term : terms) term.coefficient *= max_norm / norm;
        return HamiltonianSpec::from_terms(2, std::move(terms));
    }
    return draft;
}

inline GroupRep z2z2_group() {
    return close_generators({realize_gate({"Z", {0}, {}}, 2), realize_gate({"Z", {1}, {}}, 2)},
                            4);
}

inline GroupRep d3_group() {
    return close_generators(
        {realize_gate({"CNOT", {0, 1}, {}}, 2), realize_gate({"SWAP", {0, 1}, {}}, 2)}, 4);
}

inline GroupRep trivial_group(Eigen::Index dim) { return close_generators({}, dim); }

/// Independent e^{-iHt} oracle: 24-term Taylor series after halving the
/// argument until its norm is small, then repeated squaring.
inline ComplexMatrix taylor_expm_oracle(const ComplexMatrix& h, double t) {
    ComplexMatrix a = Complex(0.0, -t) * h;
    int squarings = 0;
    while (a.cwiseAbs().maxCoeff() * a.rows() > 0.25) {
        a /= 2.0;
        ++squarings;
    }
    ComplexMatrix result = ComplexMatrix::Identity(a.rows(), a.cols());
    ComplexMatrix power = result;
    double factorial = 1.0;
    for (int k = 1; k <= 24; ++k) {
        power = power * a;
        factorial *= k;
        result += power / factorial;
    }
    for (int k = 0; k < squarings; ++k) result = result * result;
    return result;
}

}  // namespace symtest::testing
