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

#include "symtest/variational.hpp"

#include <cmath>
#include <numbers>

#include "symtest/rng.hpp"
#include "symtest/symcore.hpp"

namespace symtest {

namespace {

int bit_of(Eigen::Index basis, int qubit, int n) {
    return static_cast<int>((basis >> (n - 1 - qubit)) & 1);
}

/// Applies a 2x2 gate to one qubit of the statevector in place.
void apply_single_qubit(ComplexVector& state, const ComplexMatrix& gate, int qubit, int n) {
    const Eigen::Index stride = Eigen::Index(1) << (n - 1 - qubit);
    for (Eigen::Index base = 0; base < state.size(); ++base) {
        if (bit_of(base, qubit, n) == 0) {
            const Complex a = state(base);
            const Complex b = state(base + stride);
            state(base) = gate(0, 0) * a + gate(0, 1) * b;
            state(base + stride) = gate(1, 0) * a + gate(1, 1) * b;
        }
    }
}

void apply_cz(ComplexVector& state, int a, int b, int n) {
    for (Eigen::Index basis = 0; basis < state.size(); ++basis) {
        if (bit_of(basis, a, n) && bit_of(basis, b, n)) state(basis) = -state(basis);
    }
}

ComplexMatrix rotation_y(double theta) {
    ComplexMatrix m(2, 2);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    m << c, -s, s, c;
    return m;
}

ComplexMatrix rotation_z(double theta) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -theta / 2.0);
    m(1, 1) = std::polar(1.0, theta / 2.0);
    return m;
}

}  // namespace

ComplexVector ansatz_prepare(const Ansatz& ansatz) {
    const int n = ansatz.qubits;
    const int layers = ansatz.layers;
    if (n < 1 || layers < 1) throw ValidationError("ansatz needs qubits >= 1 and layers >= 1");
    if (static_cast<int>(ansatz.theta.size()) != 2 * n * layers) {
        throw BadParameterCount("expected " + std::to_string(2 * n * layers) +
                                " parameters, got " + std::to_string(ansatz.theta.size()));
    }

    ComplexVector state = ComplexVector::Zero(Eigen::Index(1) << n);
    state(0) = 1.0;
    std::size_t p = 0;
    for (int layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < n; ++q) {
            apply_single_qubit(state, rotation_y(ansatz.theta[p++]), q, n);
            apply_single_qubit(state, rotation_z(ansatz.theta[p++]), q, n);
        }
        if (n == 2) {
            apply_cz(state, 0, 1, n);
        } else if (n > 2) {
            for (int q = 0; q < n; ++q) apply_cz(state, q, (q + 1) % n, n);
        }
    }
    return state;
}

VariationalResult optimize_acceptance(const HamiltonianSpec& h, const GroupRep& rep, double t,
                                      Ansatz start, const OptimizerConfig& config) {
    const ComplexMatrix twirled = twirl(rep, h.evolution(t));

    Ansatz work = std::move(start);
    auto objective = [&](const std::vector<double>& theta) {
        work.theta = theta;
        return (twirled * ansatz_prepare(work)).squaredNorm();
    };

    std::vector<double> theta = work.theta;
    const std::size_t dim = theta.size();
    double value = objective(theta);

    VariationalResult result;
    result.trace.push_back(value);

    std::vector<double> grad(dim);
    std::vector<double> trial(dim);
    int iter = 0;
    for (; iter < config.max_iters; ++iter) {
        // Central finite differences.
        double grad_inf = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            trial = theta;
            trial[k] = theta[k] + config.grad_step;
            const double up = objective(trial);
            trial[k] = theta[k] - config.grad_step;
            const double down = objective(trial);
            grad[k] = (up - down) / (2.0 * config.grad_step);
            grad_inf = std::max(grad_inf, std::abs(grad[k]));
        }
        if (grad_inf < config.tol) break;

        // Backtracking: halve the rate until the step does not decrease the
        // objective; give up after enough halvings.
        double rate = config.init_rate;
        bool accepted = false;
        for (int half = 0; half < 40; ++half) {
            for (std::size_t k = 0; k < dim; ++k) trial[k] = theta[k] + rate * grad[k];
            const double trial_value = objective(trial);
            if (trial_value >= value) {
                theta = trial;
                value = trial_value;
                accepted = true;
                break;
            }
            rate /= 2.0;
        }
        result.trace.push_back(value);
        if (!accepted) break;  // stuck; report what we have
    }

    result.final_value = value;
    result.iterations = iter;
    result.theta_final = theta;
    result.oracle_optimum = optimal_acceptance_exact(h, rep, t).value;
    result.gap = result.oracle_optimum - result.final_value;
    return result;
}

VariationalResult optimize_with_restarts(const HamiltonianSpec& h, const GroupRep& rep, double t,
                                         int qubits, int layers, int restarts,
                                         std::uint64_t seed, const OptimizerConfig& config) {
    if (restarts < 1) throw ValidationError("restarts must be >= 1");
    const int param_count = 2 * qubits * layers;
    const double two_pi = 2.0 * std::numbers::pi;

    std::vector<VariationalResult> results(static_cast<std::size_t>(restarts));
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r) {
        SplitMix64 rng(derive_subseed(seed, static_cast<std::uint64_t>(r)));
        Ansatz start{qubits, layers, {}};
        start.theta.resize(static_cast<std::size_t>(param_count));
        for (auto& p : start.theta) p = rng.next_double() * two_pi;
        results[static_cast<std::size_t>(r)] = optimize_acceptance(h, rep, t, start, config);
    }

    std::size_t best = 0;
    for (std::size_t r = 1; r < results.size(); ++r) {
        if (results[r].final_value > results[best].final_value) best = r;
    }
    return results[best];
}

}  // namespace symtest
