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

#include <memory>
#include <string>
#include <vector>

#include "symtest/numerics.hpp"

namespace symtest {

/// One weighted Pauli word, e.g. {-0.5, "ZI"}. Real coefficients only, so
/// every sum of terms is Hermitian by construction.
struct PauliTerm {
    double coefficient = 0.0;
    std::string word;
};

/// Parses the text form "<coeff> * <WORD>", e.g. "-0.5 * ZI".
PauliTerm parse_pauli_term(const std::string& text);

/// Tensor-product realization of a single Pauli word.
ComplexMatrix pauli_word_matrix(const std::string& word);

/// A Hamiltonian on n qubits, held either as a weighted Pauli-word sum or as
/// an explicit Hermitian matrix (exactly one of the two). The realized matrix
/// and its eigendecomposition are cached lazily; copies share the cache.
class HamiltonianSpec {
   public:
    /// Empty placeholder; every accessor other than the trivial getters
    /// requires a spec built by one of the factories below.
    HamiltonianSpec() = default;

    static HamiltonianSpec from_terms(int qubits, std::vector<PauliTerm> terms,
                                      std::string label = "");
    static HamiltonianSpec from_matrix(ComplexMatrix matrix, std::string label = "");

    int qubits() const { return qubits_; }
    Eigen::Index dim() const { return Eigen::Index(1) << qubits_; }
    bool has_terms() const { return has_terms_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    const std::string& label() const { return label_; }

    /// Realized d x d Hermitian matrix.
    const ComplexMatrix& matrix() const;

    /// Exact e^{-iHt} from the cached eigendecomposition. Thread-safe: the
    /// spectrum is computed once under a single-writer initialization.
    ComplexMatrix evolution(double t) const;

    /// Largest |eigenvalue| = spectral norm of a Hermitian matrix.
    double spectral_norm() const;

   private:
    struct Cache;
    const Cache& cache() const;

    int qubits_ = 0;
    bool has_terms_ = false;
    std::vector<PauliTerm> terms_;
    std::string label_;
    std::shared_ptr<Cache> cache_;
};

/// Σ_k c_k (P_{k,1} ⊗ ... ⊗ P_{k,n}) for a term-form spec.
ComplexMatrix pauli_sum_to_matrix(const HamiltonianSpec& spec);

/// Two-spin NMR Hamiltonian ω1 S_1z + ω2 S_2z + 2πJ S_1z S_2z in the
/// convention where S_z has eigenvalue -1/2 on |0>, as a Pauli-term spec:
/// -(ω1/2) ZI - (ω2/2) IZ + (πJ/2) ZZ. Angular frequencies, ħ = 1.
HamiltonianSpec build_nmr_hamiltonian(double omega1, double omega2, double j);

/// Closed-form diagonal of the same Hamiltonian, written with
/// ω_avg = (ω1+ω2)/2 and Δω = ω2-ω1. Kept as an independent realization for
/// cross-checking the Pauli form.
ComplexMatrix nmr_diagonal_matrix(double omega1, double omega2, double j);

/// First-order product-formula plan: r repetitions of the ordered product of
/// per-term exponentials.
struct TrotterPlan {
    int steps = 1;
};

/// (Π_i e^{-iH_i t/r})^r with the product taken in declared term order,
/// leftmost factor first. Throws ExplicitMatrixUnsupported for matrix-form
/// specs (no term decomposition to split).
ComplexMatrix trotter_evolution(const HamiltonianSpec& spec, double t, const TrotterPlan& plan);

/// Spectral-norm distance between the product formula and the exact
/// evolution.
double trotter_error(const HamiltonianSpec& spec, double t, const TrotterPlan& plan);

}  // namespace symtest
