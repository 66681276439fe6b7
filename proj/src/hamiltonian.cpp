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

#include "symtest/hamiltonian.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

namespace symtest {

namespace {

ComplexMatrix single_pauli(char p) {
    ComplexMatrix m(2, 2);
    switch (p) {
        case 'I':
            m << 1, 0, 0, 1;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            throw BadPauliTerm(std::string("unknown Pauli letter '") + p + "'");
    }
    return m;
}

}  // namespace

PauliTerm parse_pauli_term(const std::string& text) {
    std::istringstream in(text);
    double coeff = 0.0;
    std::string star, word;
    if (!(in >> coeff >> star >> word) || star != "*") {
        throw BadPauliTerm("expected \"<coeff> * <WORD>\", got \"" + text + "\"");
    }
    std::string trailing;
    if (in >> trailing) {
        throw BadPauliTerm("trailing content in term \"" + text + "\"");
    }
    if (!std::isfinite(coeff)) {
        throw BadPauliTerm("non-finite coefficient in \"" + text + "\"");
    }
    for (char c : word) {
        single_pauli(c);  // validates the alphabet
    }
    return PauliTerm{coeff, word};
}

ComplexMatrix pauli_word_matrix(const std::string& word) {
    if (word.empty()) throw BadPauliTerm("empty Pauli word");
    ComplexMatrix m = single_pauli(word[0]);
    for (std::size_t k = 1; k < word.size(); ++k) {
        m = kron(m, single_pauli(word[k]));
    }
    return m;
}

struct HamiltonianSpec::Cache {
    ComplexMatrix matrix;
    Eigen::VectorXd eigenvalues;
    ComplexMatrix eigenvectors;
    std::once_flag spectrum_once;
    bool spectrum_ready = false;

    void ensure_spectrum() {
        std::call_once(spectrum_once, [this] {
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix);
            if (es.info() != Eigen::Success) {
                throw Error("HamiltonianSpec: eigendecomposition failed");
            }
            eigenvalues = es.eigenvalues();
            eigenvectors = es.eigenvectors();
            spectrum_ready = true;
        });
        if (!spectrum_ready) {
            throw Error("HamiltonianSpec: eigendecomposition failed");
        }
    }
};

HamiltonianSpec HamiltonianSpec::from_terms(int qubits, std::vector<PauliTerm> terms,
                                            std::string label) {
    if (qubits < 1) throw ValidationError("qubit count must be positive");
    for (const auto& term : terms) {
        if (static_cast<int>(term.word.size()) != qubits) {
            throw BadPauliTerm("word \"" + term.word + "\" does not have length " +
                               std::to_string(qubits));
        }
        if (!std::isfinite(term.coefficient)) {
            throw BadPauliTerm("non-finite coefficient on \"" + term.word + "\"");
        }
    }
    HamiltonianSpec spec;
    spec.qubits_ = qubits;
    spec.has_terms_ = true;
    spec.terms_ = std::move(terms);
    spec.label_ = std::move(label);
    spec.cache_ = std::make_shared<Cache>();
    spec.cache_->matrix = pauli_sum_to_matrix(spec);
    return spec;
}

HamiltonianSpec HamiltonianSpec::from_matrix(ComplexMatrix matrix, std::string label) {
    if (matrix.rows() != matrix.cols() || matrix.rows() < 2) {
        throw ValidationError("explicit Hamiltonian must be square with dim >= 2");
    }
    int qubits = 0;
    for (Eigen::Index d = matrix.rows(); d > 1; d >>= 1) {
        if (d & 1) throw ValidationError("explicit Hamiltonian dimension must be a power of two");
        ++qubits;
    }
    if (!is_hermitian(matrix, global_tolerance())) {
        throw NotHermitian("explicit Hamiltonian is not Hermitian");
    }
    HamiltonianSpec spec;
    spec.qubits_ = qubits;
    spec.has_terms_ = false;
    spec.label_ = std::move(label);
    spec.cache_ = std::make_shared<Cache>();
    spec.cache_->matrix = std::move(matrix);
    return spec;
}

const HamiltonianSpec::Cache& HamiltonianSpec::cache() const {
    if (!cache_) throw Error("HamiltonianSpec: uninitialized");
    return *cache_;
}

const ComplexMatrix& HamiltonianSpec::matrix() const { return cache().matrix; }

ComplexMatrix HamiltonianSpec::evolution(double t) const {
    auto& c = const_cast<Cache&>(cache());
    c.ensure_spectrum();
    ComplexVector phases(c.eigenvalues.size());
    for (Eigen::Index k = 0; k < c.eigenvalues.size(); ++k) {
        phases(k) = std::polar(1.0, -c.eigenvalues(k) * t);
    }
    return c.eigenvectors * phases.asDiagonal() * c.eigenvectors.adjoint();
}

double HamiltonianSpec::spectral_norm() const {
    auto& c = const_cast<Cache&>(cache());
    c.ensure_spectrum();
    return c.eigenvalues.cwiseAbs().maxCoeff();
}

ComplexMatrix pauli_sum_to_matrix(const HamiltonianSpec& spec) {
    if (!spec.has_terms()) {
        throw ExplicitMatrixUnsupported("pauli_sum_to_matrix needs a term-form spec");
    }
    const Eigen::Index d = spec.dim();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& term : spec.terms()) {
        sum += term.coefficient * pauli_word_matrix(term.word);
    }
    return sum;
}

HamiltonianSpec build_nmr_hamiltonian(double omega1, double omega2, double j) {
    const double pi = std::numbers::pi;
    std::vector<PauliTerm> terms = {
        {-omega1 / 2.0, "ZI"},
        {-omega2 / 2.0, "IZ"},
        {pi * j / 2.0, "ZZ"},
    };
    return HamiltonianSpec::from_terms(2, std::move(terms), "nmr");
}

ComplexMatrix nmr_diagonal_matrix(double omega1, double omega2, double j) {
    const double pi = std::numbers::pi;
    const double omega_avg = 0.5 * (omega1 + omega2);
    const double delta_omega = omega2 - omega1;
    ComplexMatrix h = ComplexMatrix::Zero(4, 4);
    h(0, 0) = -omega_avg + pi * j / 2.0;
    h(1, 1) = (delta_omega - pi * j) / 2.0;
    h(2, 2) = -(delta_omega + pi * j) / 2.0;
    h(3, 3) = omega_avg + pi * j / 2.0;
    return h;
}

ComplexMatrix trotter_evolution(const HamiltonianSpec& spec, double t, const TrotterPlan& plan) {
    if (!spec.has_terms()) {
        throw ExplicitMatrixUnsupported("trotter_evolution needs a term decomposition");
    }
    if (plan.steps < 1) throw ValidationError("trotter steps must be >= 1");
    const Eigen::Index d = spec.dim();
    ComplexMatrix step = ComplexMatrix::Identity(d, d);
    for (const auto& term : spec.terms()) {
        ComplexMatrix h_i = term.coefficient * pauli_word_matrix(term.word);
        step = step * expm_hermitian_evolution(h_i, t / plan.steps);
    }
    ComplexMatrix result = ComplexMatrix::Identity(d, d);
    for (int r = 0; r < plan.steps; ++r) {
        result = result * step;
    }
    return result;
}

double trotter_error(const HamiltonianSpec& spec, double t, const TrotterPlan& plan) {
    return spectral_norm(trotter_evolution(spec, t, plan) - spec.evolution(t));
}

}  // namespace symtest
