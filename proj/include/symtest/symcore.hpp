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
#include <utility>
#include <vector>

#include "symtest/group.hpp"
#include "symtest/hamiltonian.hpp"

namespace symtest {

// Acceptance probability of the symmetry test: equals 1 exactly when
// e^{-iHt} commutes with every U(g). Three independent computation routes
// are provided (trace formula, Choi-state projection, even-power series);
// they must agree and are cross-checked throughout the test suite.

inline constexpr int kDefaultSeriesOrder = 12;
inline constexpr double kSymmetricVerdictThreshold = 1e-10;
inline constexpr double kAsymmetricVerdictThreshold = 1e-6;

struct SeriesResult {
    double value = 0.0;
    double remainder = 0.0;  // 2 x |first omitted term|
    int order = 0;
};

struct OptimalResult {
    double value = 0.0;
    ComplexVector state;  // maximizing input state (right singular vector)
};

struct BoundSet {
    double optimal_exact = 0.0;
    double bound_unitary_commutators = 0.0;
    double bound_small_t = 0.0;
    bool small_t_valid = false;  // requires tau = ||H|| t < 1
    double bound_nested = 0.0;
    int nested_order = 0;
};

struct SymmetryReport {
    double t = 0.0;
    double tau = 0.0;  // ||H||_inf * t
    double p_trace = 0.0;
    double p_choi = 0.0;
    SeriesResult series;
    double commutator_norm = 0.0;  // (1/(d|G|)) Σ_g ||[U(g),H]||₂²
    std::vector<std::pair<int, double>> per_element_norms;
    std::string verdict;  // symmetric | asymmetric | inconclusive
};

/// (1/(d|G|)) Σ_g Re Tr[U†(g) e^{iHt} U(g) e^{-iHt}]. The imaginary residue
/// must stay below 1e-8 (NonRealProbability otherwise).
double acceptance_probability_trace(const HamiltonianSpec& h, const GroupRep& rep, double t);

/// Tr[Π^G Φ^t] with Φ^t the evolved maximally entangled state on d².
double acceptance_probability_choi(const HamiltonianSpec& h, const GroupRep& rep, double t);

/// Unit-trace maximally entangled density operator (1/d) Σ_ij |ii><jj|.
ComplexMatrix maximally_entangled_state(Eigen::Index d);

/// Choi operator of the evolution: (I ⊗ e^{-iHt}) Φ (I ⊗ e^{iHt}).
ComplexMatrix evolved_choi_state(const HamiltonianSpec& h, double t);

/// Partial sum of Σ_n (-1)^n t^{2n}/(2n)! (1/(d|G|)) Σ_g ||[(H)^n,U(g)]||₂²
/// through n = N. Exact in the limit N → ∞ for every real t.
SeriesResult acceptance_probability_series(const HamiltonianSpec& h, const GroupRep& rep,
                                           double t, int order = kDefaultSeriesOrder);

/// Normalized commutator norm C = (1/(d|G|)) Σ_g ||[U(g),H]||₂².
double commutator_norm(const HamiltonianSpec& h, const GroupRep& rep);

/// {1 - t²C/2, C}: the leading-order approximation and its coefficient.
std::pair<double, double> second_order_acceptance(const HamiltonianSpec& h, const GroupRep& rep,
                                                  double t);

/// ||T_G(e^{-iHt}) |ψ>||₂² for a normalized input state.
double fixed_state_acceptance(const HamiltonianSpec& h, const GroupRep& rep, double t,
                              const ComplexVector& psi);

/// ||T_G(e^{-iHt})||∞² and the maximizing state, by SVD.
OptimalResult optimal_acceptance_exact(const HamiltonianSpec& h, const GroupRep& rep, double t);

/// The exact optimum together with its three lower bounds (spectral-norm
/// commutators of the evolution, the small-t commutator form with a -4τ²
/// slack, and the squared nested-commutator series form, clamped to 0 once
/// its series sum passes 1).
BoundSet variational_lower_bounds(const HamiltonianSpec& h, const GroupRep& rep, double t,
                                  int nested_order = kDefaultSeriesOrder);

/// {Tr[ΠΦ] = 1, Φ = ΠΦΠ} at tolerance 1e-9; the two are equivalent and the
/// booleans must agree.
std::pair<bool, bool> gentle_measurement_check(const HamiltonianSpec& h, const GroupRep& rep,
                                               double t);

/// Full report for one (H, G, t) instance: both analytic routes, the series,
/// commutator norms per element, and the symmetry verdict.
SymmetryReport make_symmetry_report(const HamiltonianSpec& h, const GroupRep& rep, double t,
                                    int series_order = kDefaultSeriesOrder);

}  // namespace symtest
