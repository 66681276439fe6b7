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

#include "symtest/group.hpp"

#include <cmath>
#include <numbers>

namespace symtest {

namespace {

ComplexMatrix named_single_qubit_gate(const std::string& name) {
    ComplexMatrix m(2, 2);
    if (name == "I") {
        m << 1, 0, 0, 1;
    } else if (name == "X") {
        m << 0, 1, 1, 0;
    } else if (name == "Y") {
        m << 0, Complex(0, -1), Complex(0, 1), 0;
    } else if (name == "Z") {
        m << 1, 0, 0, -1;
    } else if (name == "H") {
        const double s = 1.0 / std::numbers::sqrt2;
        m << s, s, s, -s;
    } else if (name == "S") {
        m << 1, 0, 0, Complex(0, 1);
    } else {
        throw ValidationError("unknown gate \"" + name + "\"");
    }
    return m;
}

int bit_of(Eigen::Index basis, int qubit, int n_qubits) {
    return static_cast<int>((basis >> (n_qubits - 1 - qubit)) & 1);
}

Eigen::Index flip_bit(Eigen::Index basis, int qubit, int n_qubits) {
    return basis ^ (Eigen::Index(1) << (n_qubits - 1 - qubit));
}

void check_qubit_index(int q, int n_qubits) {
    if (q < 0 || q >= n_qubits) {
        throw ValidationError("qubit index " + std::to_string(q) + " out of range for " +
                              std::to_string(n_qubits) + " qubits");
    }
}

}  // namespace

ComplexMatrix realize_gate(const GateSpec& spec, int n_qubits) {
    const Eigen::Index d = Eigen::Index(1) << n_qubits;

    if (spec.gate.empty()) {
        if (spec.matrix.rows() != d || spec.matrix.cols() != d) {
            throw DimensionMismatch("explicit generator has dimension " +
                                    std::to_string(spec.matrix.rows()) + ", expected " +
                                    std::to_string(d));
        }
        if (!is_unitary(spec.matrix, global_tolerance())) {
            throw NotUnitary("explicit generator is not unitary");
        }
        return spec.matrix;
    }

    if (spec.gate == "CNOT" || spec.gate == "SWAP" || spec.gate == "CZ") {
        if (spec.qubits.size() != 2 || spec.qubits[0] == spec.qubits[1]) {
            throw ValidationError(spec.gate + " needs two distinct qubit indices");
        }
        const int a = spec.qubits[0];
        const int b = spec.qubits[1];
        check_qubit_index(a, n_qubits);
        check_qubit_index(b, n_qubits);
        ComplexMatrix m = ComplexMatrix::Zero(d, d);
        for (Eigen::Index basis = 0; basis < d; ++basis) {
            if (spec.gate == "CNOT") {
                Eigen::Index out = bit_of(basis, a, n_qubits) ? flip_bit(basis, b, n_qubits)
                                                              : basis;
                m(out, basis) = 1.0;
            } else if (spec.gate == "SWAP") {
                Eigen::Index out = basis;
                if (bit_of(basis, a, n_qubits) != bit_of(basis, b, n_qubits)) {
                    out = flip_bit(flip_bit(basis, a, n_qubits), b, n_qubits);
                }
                m(out, basis) = 1.0;
            } else {  // CZ
                const bool both = bit_of(basis, a, n_qubits) && bit_of(basis, b, n_qubits);
                m(basis, basis) = both ? -1.0 : 1.0;
            }
        }
        return m;
    }

    // Single-qubit named gate embedded by Kronecker factors.
    if (spec.qubits.size() != 1) {
        throw ValidationError(spec.gate + " needs exactly one qubit index");
    }
    check_qubit_index(spec.qubits[0], n_qubits);
    ComplexMatrix gate = named_single_qubit_gate(spec.gate);
    ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    ComplexMatrix m(1, 1);
    m(0, 0) = 1.0;
    for (int q = 0; q < n_qubits; ++q) {
        m = kron(m, q == spec.qubits[0] ? gate : id2);
    }
    return m;
}

GroupRep close_generators(const std::vector<ComplexMatrix>& generators, Eigen::Index dim,
                          std::size_t max_order, double tol) {
    for (const auto& g : generators) {
        if (g.rows() != dim || g.cols() != dim) {
            throw DimensionMismatch("generator dimension does not match");
        }
        if (!is_unitary(g, global_tolerance())) {
            throw NotUnitary("generator is not unitary");
        }
    }

    // Align an operator's global phase so the largest-magnitude entry is
    // real positive; used by the up-to-phase fallback below.
    auto phase_aligned = [](const ComplexMatrix& m) {
        Eigen::Index row = 0, col = 0;
        m.cwiseAbs().maxCoeff(&row, &col);
        Complex pivot = m(row, col);
        return ComplexMatrix(m * (std::abs(pivot) / pivot));
    };

    auto bfs_closure = [&](bool up_to_phase) {
        GroupRep rep;
        rep.dim = dim;
        rep.closure_tol = tol;
        rep.phase_consistent = !up_to_phase;
        rep.elements.push_back(ComplexMatrix::Identity(dim, dim));

        auto seen = [&](const ComplexMatrix& m) {
            for (const auto& e : rep.elements) {
                double dist = up_to_phase ? max_abs_diff(phase_aligned(e), phase_aligned(m))
                                          : max_abs_diff(e, m);
                if (dist < tol) return true;
            }
            return false;
        };

        // Breadth-first: multiply every frontier element by every generator.
        std::size_t frontier_begin = 0;
        while (frontier_begin < rep.elements.size()) {
            const std::size_t frontier_end = rep.elements.size();
            for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
                for (const auto& g : generators) {
                    ComplexMatrix product = rep.elements[i] * g;
                    if (!seen(product)) {
                        if (rep.elements.size() >= max_order) {
                            throw ClosureExceeded("closure exceeds max_order = " +
                                                  std::to_string(max_order));
                        }
                        rep.elements.push_back(std::move(product));
                    }
                }
            }
            frontier_begin = frontier_end;
        }
        return rep;
    };

    // Phase-sensitive closure first; the averaged operators form a group and
    // the projector is idempotent exactly when this succeeds. If phases do
    // not close, fall back to up-to-phase deduplication and flag the rep.
    try {
        return bfs_closure(false);
    } catch (const ClosureExceeded&) {
        return bfs_closure(true);
    }
}

ComplexMatrix group_projector(const GroupRep& rep) {
    const Eigen::Index d = rep.dim;
    ComplexMatrix sum = ComplexMatrix::Zero(d * d, d * d);
    for (const auto& u : rep.elements) {
        sum += kron(u.conjugate(), u);
    }
    return sum / static_cast<double>(rep.order());
}

ComplexMatrix twirl(const GroupRep& rep, const ComplexMatrix& x) {
    if (x.rows() != rep.dim || x.cols() != rep.dim) {
        throw DimensionMismatch("twirl: operand dimension does not match the representation");
    }
    ComplexMatrix sum = ComplexMatrix::Zero(rep.dim, rep.dim);
    for (const auto& u : rep.elements) {
        sum += u * x * u.adjoint();
    }
    return sum / static_cast<double>(rep.order());
}

}  // namespace symtest
