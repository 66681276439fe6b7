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

#include <doctest.h>

#include <cmath>

#include "symtest/symcore.hpp"
#include "test_support.hpp"

using namespace symtest;
using namespace symtest::testing;

// Frozen value of the trace formula for the worked asymmetric example
// (NMR(1, 2, 0.1) against the CNOT/SWAP group at t = 1), computed by an
// independent dense-matrix oracle before this module was built.
static constexpr double kAsymmetricP1 = 0.519560663598325;
static constexpr double kAsymmetricC = 1.347057946695944;

TEST_CASE("trace route is 1 for the symmetric worked example at any t") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    GroupRep rep = z2z2_group();
    for (double t : {0.0, 0.3, 1.0, 5.5, -2.0}) {
        CHECK(acceptance_probability_trace(nmr, rep, t) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("trace route is 1 at t = 0 for any instance") {
    SplitMix64 rng(7);
    GroupRep rep = d3_group();
    for (int trial = 0; trial < 3; ++trial) {
        HamiltonianSpec h = random_pauli_hamiltonian(rng);
        CHECK(acceptance_probability_trace(h, rep, 0.0) == doctest::Approx(1.0));
    }
}

TEST_CASE("trace route reproduces the frozen asymmetric oracle value") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    double p = acceptance_probability_trace(nmr, d3_group(), 1.0);
    CHECK(std::abs(p - kAsymmetricP1) < 1e-9);
    CHECK(p < 1.0);
}

TEST_CASE("choi route is 1 under the trivial group for any evolution") {
    SplitMix64 rng(8);
    GroupRep trivial = trivial_group(4);
    for (int trial = 0; trial < 3; ++trial) {
        HamiltonianSpec h = random_pauli_hamiltonian(rng);
        double t = 3.0 * (rng.next_double() - 0.5);
        CHECK(acceptance_probability_choi(h, trivial, t) == doctest::Approx(1.0));
    }
}

TEST_CASE("choi and trace routes agree on random instances") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        HamiltonianSpec h = random_pauli_hamiltonian(rng);
        const GroupRep rep = trial % 2 ? d3_group() : z2z2_group();
        double t = 3.0 * (rng.next_double() - 0.5);
        CHECK(std::abs(acceptance_probability_trace(h, rep, t) -
                       acceptance_probability_choi(h, rep, t)) < 1e-9);
    }
}

TEST_CASE("series order 0 is exactly 1") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    SeriesResult s = acceptance_probability_series(nmr, d3_group(), 0.8, 0);
    CHECK(s.value == 1.0);
}

TEST_CASE("series is 1 at any order for the symmetric pair") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    for (int order : {1, 4, 12}) {
        SeriesResult s = acceptance_probability_series(nmr, z2z2_group(), 1.7, order);
        CHECK(s.value == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(s.remainder < 1e-12);
    }
}

TEST_CASE("series at order 10 matches the trace route") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    GroupRep rep = d3_group();
    SeriesResult s = acceptance_probability_series(nmr, rep, 0.3, 10);
    CHECK(std::abs(s.value - acceptance_probability_trace(nmr, rep, 0.3)) < 1e-8);
}

TEST_CASE("series truncation error stays within the reported remainder") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    GroupRep rep = d3_group();
    double exact = acceptance_probability_trace(nmr, rep, 0.5);
    for (int order : {2, 4, 6, 8}) {
        SeriesResult s = acceptance_probability_series(nmr, rep, 0.5, order);
        CHECK(std::abs(s.value - exact) <= s.remainder);
    }
}

TEST_CASE("second-order pair for a symmetric instance") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    auto [p, c] = second_order_acceptance(nmr, z2z2_group(), 1.2);
    CHECK(p == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c < 1e-12);
}

TEST_CASE("second-order pair at t = 0 keeps the commutator norm") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    auto [p, c] = second_order_acceptance(nmr, d3_group(), 0.0);
    CHECK(p == 1.0);
    CHECK(c == doctest::Approx(kAsymmetricC).epsilon(1e-12));
}

TEST_CASE("second-order remainder scales as t^4") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    GroupRep rep = d3_group();
    double previous_ratio = 0.0;
    for (double t : {0.02, 0.04, 0.08}) {
        auto [approx, c] = second_order_acceptance(nmr, rep, t);
        double ratio =
            std::abs(acceptance_probability_trace(nmr, rep, t) - approx) / (t * t * t * t);
        if (previous_ratio != 0.0) {
            CHECK(ratio / previous_ratio < 2.0);
            CHECK(ratio / previous_ratio > 0.5);
        }
        previous_ratio = ratio;
    }
}

TEST_CASE("fixed-state acceptance is 1 for symmetric instances and t = 0") {
    SplitMix64 rng(10);
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    for (int trial = 0; trial < 5; ++trial) {
        ComplexVector psi = random_state(4, rng);
        CHECK(fixed_state_acceptance(nmr, z2z2_group(), 1.4, psi) ==
              doctest::Approx(1.0).epsilon(1e-10));
        CHECK(fixed_state_acceptance(nmr, d3_group(), 0.0, psi) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("fixed-state acceptance rejects unnormalized input") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = 0.5;
    CHECK_THROWS_AS(fixed_state_acceptance(nmr, d3_group(), 1.0, psi), UnnormalizedState);
}

TEST_CASE("basis-state average of the fixed-state route equals the trace route") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    GroupRep rep = d3_group();
    double sum = 0.0;
    for (Eigen::Index x = 0; x < 4; ++x) {
        ComplexVector basis = ComplexVector::Zero(4);
        basis(x) = 1.0;
        sum += fixed_state_acceptance(nmr, rep, 1.0, basis);
    }
    CHECK(std::abs(sum / 4.0 - acceptance_probability_trace(nmr, rep, 1.0)) < 1e-10);
}

TEST_CASE("exact optimum is 1 for symmetric instances and the trivial group") {
    SplitMix64 rng(11);
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    CHECK(optimal_acceptance_exact(nmr, z2z2_group(), 2.3).value ==
          doctest::Approx(1.0).epsilon(1e-10));
    HamiltonianSpec h = random_pauli_hamiltonian(rng);
    CHECK(optimal_acceptance_exact(h, trivial_group(4), 1.1).value ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("exact optimum dominates the fixed-state value on random states") {
    SplitMix64 rng(12);
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    GroupRep rep = d3_group();
    OptimalResult best = optimal_acceptance_exact(nmr, rep, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        CHECK(best.value + 1e-9 >=
              fixed_state_acceptance(nmr, rep, 1.0, random_state(4, rng)));
    }
    // The returned maximizer achieves the optimum.
    CHECK(fixed_state_acceptance(nmr, rep, 1.0, best.state) ==
          doctest::Approx(best.value).epsilon(1e-9));
}

TEST_CASE("lower bounds for the symmetric pair") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    double t = 0.2;
    BoundSet bounds = variational_lower_bounds(nmr, z2z2_group(), t);
    double tau = nmr.spectral_norm() * t;
    CHECK(bounds.optimal_exact == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(bounds.bound_unitary_commutators == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(bounds.bound_nested == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(bounds.bound_small_t == doctest::Approx(1.0 - 4.0 * tau * tau).epsilon(1e-10));
    CHECK(bounds.small_t_valid);
}

TEST_CASE("lower bounds at t = 0") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    BoundSet bounds = variational_lower_bounds(nmr, d3_group(), 0.0);
    CHECK(bounds.bound_unitary_commutators == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bounds.bound_nested == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("every valid lower bound sits below the exact optimum") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    BoundSet bounds = variational_lower_bounds(nmr, d3_group(), 0.2, 12);
    CHECK(bounds.optimal_exact + 1e-9 >= bounds.bound_unitary_commutators);
    CHECK(bounds.optimal_exact + 1e-9 >= bounds.bound_nested);
    if (bounds.small_t_valid) {
        CHECK(bounds.optimal_exact + 1e-9 >= bounds.bound_small_t);
    }
}

TEST_CASE("gentle-measurement booleans") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    auto symmetric = gentle_measurement_check(nmr, z2z2_group(), 1.0);
    CHECK(symmetric.first);
    CHECK(symmetric.second);
    auto asymmetric = gentle_measurement_check(nmr, d3_group(), 1.0);
    CHECK_FALSE(asymmetric.first);
    CHECK_FALSE(asymmetric.second);
    auto zero_t = gentle_measurement_check(nmr, d3_group(), 0.0);
    CHECK(zero_t.first);
    CHECK(zero_t.second);
}

TEST_CASE("gentle-measurement booleans agree on random instances") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        HamiltonianSpec h = random_pauli_hamiltonian(rng);
        const GroupRep rep = trial % 2 ? d3_group() : z2z2_group();
        auto [p_one, fixed] = gentle_measurement_check(h, rep, rng.next_double());
        CHECK(p_one == fixed);
    }
}

TEST_CASE("acceptance probability is even in t") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        HamiltonianSpec h = random_pauli_hamiltonian(rng);
        const GroupRep rep = trial % 2 ? d3_group() : z2z2_group();
        double t = 2.0 * rng.next_double();
        CHECK(std::abs(acceptance_probability_trace(h, rep, t) -
                       acceptance_probability_trace(h, rep, -t)) < 1e-12);
    }
}

TEST_CASE("probabilities stay inside [0, 1] up to roundoff") {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 10; ++trial) {
        HamiltonianSpec h = random_pauli_hamiltonian(rng);
        const GroupRep rep = trial % 2 ? d3_group() : z2z2_group();
        double p = acceptance_probability_trace(h, rep, 3.0 * rng.next_double());
        CHECK(p > -1e-9);
        CHECK(p < 1.0 + 1e-9);
    }
}

TEST_CASE("twirled variance of H is nonnegative on random states") {
    // <T(H^2) - T(H)^2>_psi >= 0 for every state.
    SplitMix64 rng(16);
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);
    for (const GroupRep& rep : {z2z2_group(), d3_group()}) {
        const ComplexMatrix& h = nmr.matrix();
        ComplexMatrix gap = twirl(rep, h * h) - twirl(rep, h) * twirl(rep, h);
        for (int trial = 0; trial < 100; ++trial) {
            ComplexVector psi = random_state(4, rng);
            CHECK((psi.adjoint() * gap * psi)(0).real() >= -1e-12);
        }
    }
}

TEST_CASE("symmetry report carries consistent fields and verdicts") {
    HamiltonianSpec nmr = build_nmr_hamiltonian(1.0, 2.0, 0.1);

    SymmetryReport symmetric = make_symmetry_report(nmr, z2z2_group(), 1.0);
    CHECK(symmetric.verdict == "symmetric");
    CHECK(symmetric.commutator_norm < 1e-10);
    CHECK(symmetric.p_trace == doctest::Approx(1.0).epsilon(1e-10));

    SymmetryReport asymmetric = make_symmetry_report(nmr, d3_group(), 1.0);
    CHECK(asymmetric.verdict == "asymmetric");
    CHECK(asymmetric.commutator_norm == doctest::Approx(kAsymmetricC).epsilon(1e-12));
    CHECK(asymmetric.per_element_norms.size() == 6);
    CHECK(std::abs(asymmetric.p_trace - asymmetric.p_choi) < 1e-9);
    CHECK(asymmetric.tau == doctest::Approx(nmr.spectral_norm()).epsilon(1e-12));

    // symmetric verdict <=> P_acc = 1 at several sampled times.
    for (double t : {0.4, 0.9, 1.7, 2.6, 4.1}) {
        CHECK(std::abs(acceptance_probability_trace(nmr, z2z2_group(), t) - 1.0) < 1e-9);
        CHECK(std::abs(acceptance_probability_trace(nmr, d3_group(), t) - 1.0) > 1e-9);
    }
}

TEST_CASE("dimension mismatches are rejected") {
    HamiltonianSpec h1 = HamiltonianSpec::from_terms(1, {{1.0, "Z"}});
    CHECK_THROWS_AS(acceptance_probability_trace(h1, d3_group(), 1.0), DimensionMismatch);
}
