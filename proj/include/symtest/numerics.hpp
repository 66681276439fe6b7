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

#include <Eigen/Dense>
#include <complex>

#include "symtest/errors.hpp"

namespace symtest {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest entrywise absolute difference, the metric used by every
/// closeness check in this library.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol);
bool is_unitary(const ComplexMatrix& a, double tol);

/// Kronecker product, row-major block convention: (A ⊗ B).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// e^{-iHt} for Hermitian H via full eigendecomposition. Exact unitarity up
/// to roundoff; the spectrum is recomputed on every call (callers that sweep
/// over t should go through HamiltonianSpec::evolution, which caches it).
/// Throws NotHermitian if max|H - H†| exceeds the global tolerance.
ComplexMatrix expm_hermitian_evolution(const ComplexMatrix& h, double t);

/// Iterated commutator [H,[H,...[H,U]...]] with n applications of H.
/// n = 0 returns U unchanged.
ComplexMatrix nested_commutator(const ComplexMatrix& h, const ComplexMatrix& u, int n);

/// Hilbert-Schmidt norm sqrt(Tr[A†A]).
double hs_norm(const ComplexMatrix& a);

/// Largest singular value (induced 2-norm), computed by SVD.
double spectral_norm(const ComplexMatrix& a);

}  // namespace symtest
