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

#include "symtest/symcore.hpp"

#include <cmath>

namespace symtest {

namespace {

void check_dims(const HamiltonianSpec& h, const GroupRep& rep) {
    if (h.dim() != rep.dim) {
        throw DimensionMismatch("Hamiltonian dimension " + std::to_string(h.dim()) +
                                " does not match representation dimension " +
                                std::to_string(rep.dim));
    }
}

}  // namespace

double acceptance_probability_trace(const HamiltonianSpec& h, const GroupRep& rep, double t) {
    check_dims(h, rep);
    const ComplexMatrix forward = h.evolution(t);
    const ComplexMatrix backward = forward.adjoint();  // e^{+iHt}
    Complex sum = 0.0;
    for (const auto& u : rep.elements) {
        sum += (u.adjoint() * backward * u * forward).trace();
    }
    const double denom = static_cast<double>(h.dim()) * static_cast<double>(rep.order());
    const Complex p = sum / denom;
    if (std::abs(p.imag()) > 1e-8) {
        throw NonRealProbability("trace-route probability has imaginary residue " +
                                 std::to_string(p.imag()));
    }
    return p.real();
}

ComplexMatrix maximally_entangled_state(Eigen::Index d) {
    ComplexVector phi = ComplexVector::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        phi(i * d + i) = 1.0;
    }
    phi /= std::sqrt(static_cast<double>(d));
    return phi * phi.adjoint();
}

ComplexMatrix evolved_choi_state(const HamiltonianSpec& h, double t) {
    const Eigen::Index d = h.dim();
    ComplexMatrix side = kron(ComplexMatrix::Identity(d, d), h.evolution(t));
    return side * maximally_entangled_state(d) * side.adjoint();
}

double acceptance_probability_choi(const HamiltonianSpec& h, const GroupRep& rep, double t) {
    check_dims(h, rep);
    const Complex p = (group_projector(rep) * evolved_choi_state(h, t)).trace();
    if (std::abs(p.imag()) > 1e-8) {
        throw NonRealProbability("Choi-route probability has imaginary residue " +
                                 std::to_string(p.imag()));
    }
    return p.real();
}

SeriesResult acceptance_probability_series(const HamiltonianSpec& h, const GroupRep& rep,
                                           double t, int order) {
    check_dims(h, rep);
    if (order < 0) throw ValidationError("series order must be >= 0");
    const double denom = static_cast<double>(h.dim()) * static_cast<double>(rep.order());
    const ComplexMatrix& hm = h.matrix();

    // One running nested commutator per group element; coefficient n costs
    // one further commutator each.
    std::vector<ComplexMatrix> nested(rep.elements.begin(), rep.elements.end());
    auto coefficient = [&](int n) {
        double c = 0.0;
        for (auto& cm : nested) {
            if (n > 0) cm = hm * cm - cm * hm;
            const double norm = hs_norm(cm);
            c += norm * norm;
        }
        return c / denom;
    };

    SeriesResult out;
    out.order = order;
    double t_power = 1.0;       // t^{2n}
    double factorial = 1.0;     // (2n)!
    double sign = 1.0;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            t_power *= t * t;
            factorial *= (2.0 * n - 1.0) * (2.0 * n);
            sign = -sign;
        }
        out.value += sign * t_power / factorial * coefficient(n);
    }
    // Remainder estimate from the first omitted term, doubled.
    const int n = order + 1;
    const double next = t_power * t * t / (factorial * (2.0 * n - 1.0) * (2.0 * n)) *
                        coefficient(n);
    out.remainder = 2.0 * std::abs(next);
    return out;
}

double commutator_norm(const HamiltonianSpec& h, const GroupRep& rep) {
    check_dims(h, rep);
    const ComplexMatrix& hm = h.matrix();
    double sum = 0.0;
    for (const auto& u : rep.elements) {
        const double norm = hs_norm(u * hm - hm * u);
        sum += norm * norm;
    }
    return sum / (static_cast<double>(h.dim()) * static_cast<double>(rep.order()));
}

std::pair<double, double> second_order_acceptance(const HamiltonianSpec& h, const GroupRep& rep,
                                                  double t) {
    const double c = commutator_norm(h, rep);
    return {1.0 - t * t * c / 2.0, c};
}

double fixed_state_acceptance(const HamiltonianSpec& h, const GroupRep& rep, double t,
                              const ComplexVector& psi) {
    check_dims(h, rep);
    if (psi.size() != h.dim()) {
        throw DimensionMismatch("input state dimension does not match");
    }
    if (std::abs(psi.norm() - 1.0) > global_tolerance()) {
        throw UnnormalizedState("input state norm deviates from 1 by " +
                                std::to_string(std::abs(psi.norm() - 1.0)));
    }
    return (twirl(rep, h.evolution(t)) * psi).squaredNorm();
}

OptimalResult optimal_acceptance_exact(const HamiltonianSpec& h, const GroupRep& rep, double t) {
    check_dims(h, rep);
    Eigen::JacobiSVD<ComplexMatrix> svd(twirl(rep, h.evolution(t)), Eigen::ComputeThinV);
    OptimalResult out;
    const double sigma = svd.singularValues()(0);
    out.value = sigma * sigma;
    out.state = svd.matrixV().col(0);
    return out;
}

BoundSet variational_lower_bounds(const HamiltonianSpec& h, const GroupRep& rep, double t,
                                  int nested_order) {
    check_dims(h, rep);
    const double order_g = static_cast<double>(rep.order());
    const ComplexMatrix& hm = h.matrix();
    const ComplexMatrix evo = h.evolution(t);
    const double tau = h.spectral_norm() * std::abs(t);

    BoundSet out;
    out.optimal_exact = optimal_acceptance_exact(h, rep, t).value;
    out.nested_order = nested_order;

    double sum_evo = 0.0;
    double sum_h = 0.0;
    for (const auto& u : rep.elements) {
        sum_evo += spectral_norm(u * evo - evo * u);
        sum_h += spectral_norm(u * hm - hm * u);
    }
    out.bound_unitary_commutators = 1.0 - 2.0 / order_g * sum_evo;
    out.bound_small_t = 1.0 - 2.0 * std::abs(t) / order_g * sum_h - 4.0 * tau * tau;
    out.small_t_valid = tau < 1.0;

    // (1 - Σ_{n>=1} t^n/n! (1/|G|) Σ_g ||[(H)^n,U(g)]||∞)²
    std::vector<ComplexMatrix> nested(rep.elements.begin(), rep.elements.end());
    double t_power = 1.0;
    double factorial = 1.0;
    double series = 0.0;
    for (int n = 1; n <= nested_order; ++n) {
        t_power *= std::abs(t);
        factorial *= n;
        double norm_sum = 0.0;
        for (auto& cm : nested) {
            cm = hm * cm - cm * hm;
            norm_sum += spectral_norm(cm);
        }
        series += t_power / factorial * norm_sum / order_g;
    }
    // The squared form only binds while the series sum stays below 1; past
    // that the bound degenerates to the trivial 0.
    const double base = std::max(0.0, 1.0 - series);
    out.bound_nested = base * base;

    // Ordering contract: the optimum dominates every valid bound.
    const double slack = 1e-9;
    if (out.optimal_exact + slack < out.bound_unitary_commutators ||
        (out.small_t_valid && out.optimal_exact + slack < out.bound_small_t) ||
        out.optimal_exact + slack < out.bound_nested) {
        throw Error("lower bound exceeds the exact optimum; numerical contract violated");
    }
    return out;
}

std::pair<bool, bool> gentle_measurement_check(const HamiltonianSpec& h, const GroupRep& rep,
                                               double t) {
    check_dims(h, rep);
    const double tol = 1e-9;
    const ComplexMatrix projector = group_projector(rep);
    const ComplexMatrix choi = evolved_choi_state(h, t);
    const bool p_is_one = std::abs((projector * choi).trace().real() - 1.0) < tol;
    const bool fixed = max_abs_diff(choi, projector * choi * projector) < tol;
    return {p_is_one, fixed};
}

SymmetryReport make_symmetry_report(const HamiltonianSpec& h, const GroupRep& rep, double t,
                                    int series_order) {
    check_dims(h, rep);
    SymmetryReport report;
    report.t = t;
    report.tau = h.spectral_norm() * std::abs(t);
    report.p_trace = acceptance_probability_trace(h, rep, t);
    report.p_choi = acceptance_probability_choi(h, rep, t);
    report.series = acceptance_probability_series(h, rep, t, series_order);

    const ComplexMatrix& hm = h.matrix();
    const double denom = static_cast<double>(h.dim()) * static_cast<double>(rep.order());
    double c = 0.0;
    for (std::size_t g = 0; g < rep.elements.size(); ++g) {
        const double norm = hs_norm(rep.elements[g] * hm - hm * rep.elements[g]);
        report.per_element_norms.emplace_back(static_cast<int>(g), norm * norm);
        c += norm * norm;
    }
    report.commutator_norm = c / denom;

    if (report.commutator_norm < kSymmetricVerdictThreshold) {
        report.verdict = "symmetric";
    } else if (report.commutator_norm > kAsymmetricVerdictThreshold) {
        report.verdict = "asymmetric";
    } else {
        report.verdict = "inconclusive";
    }
    return report;
}

}  // namespace symtest
