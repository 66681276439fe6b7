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

#include "symtest/simulator.hpp"

#include <cmath>
#include <vector>

#include "symtest/rng.hpp"

namespace symtest {

namespace {

void check_norm_preserved(const std::vector<ComplexVector>& blocks, double weight) {
    double total = 0.0;
    for (const auto& b : blocks) total += b.squaredNorm();
    if (std::abs(total * weight - 1.0) > 1e-10) {
        throw Error("statevector norm drifted to " + std::to_string(total * weight));
    }
}

/// Acceptance probability for one pure system input. The statevector is held
/// as |G| system-sized blocks (one per control level), each carrying an
/// implicit 1/sqrt(|G|) weight.
double run_pure(const CircuitInstance& inst, const ComplexVector& system_in) {
    const std::size_t order = inst.rep.order();
    const double weight = 1.0 / static_cast<double>(order);

    std::vector<ComplexVector> blocks(order, system_in);
    check_norm_preserved(blocks, weight);

    if (inst.mode == CircuitMode::mixed) {
        // controlled U†(g), then the evolution, then controlled U(g):
        // block_g ends as U(g) e^{-iHt} U†(g) |psi>.
        for (std::size_t g = 0; g < order; ++g) {
            blocks[g] = inst.rep.elements[g].adjoint() * blocks[g];
        }
        check_norm_preserved(blocks, weight);
        const ComplexMatrix evo = inst.hamiltonian.evolution(inst.t);
        for (auto& b : blocks) b = evo * b;
        check_norm_preserved(blocks, weight);
        for (std::size_t g = 0; g < order; ++g) {
            blocks[g] = inst.rep.elements[g] * blocks[g];
        }
        check_norm_preserved(blocks, weight);
    } else {
        // Doubled register: evolve the second factor, then apply the
        // controlled conj(U(g)) ⊗ U(g).
        const Eigen::Index d = inst.rep.dim;
        const ComplexMatrix evo =
            kron(ComplexMatrix::Identity(d, d), inst.hamiltonian.evolution(inst.t));
        for (auto& b : blocks) b = evo * b;
        check_norm_preserved(blocks, weight);
        for (std::size_t g = 0; g < order; ++g) {
            const ComplexMatrix& u = inst.rep.elements[g];
            blocks[g] = kron(u.conjugate(), u) * blocks[g];
        }
        check_norm_preserved(blocks, weight);
    }

    // Project the control qudit onto the uniform superposition.
    ComplexVector accept = ComplexVector::Zero(blocks[0].size());
    for (const auto& b : blocks) accept += b;
    return accept.squaredNorm() * weight * weight;
}

ComplexVector basis_state(Eigen::Index dim, Eigen::Index x) {
    ComplexVector v = ComplexVector::Zero(dim);
    v(x) = 1.0;
    return v;
}

ComplexVector entangled_input(Eigen::Index d) {
    ComplexVector phi = ComplexVector::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) phi(i * d + i) = 1.0;
    return phi / std::sqrt(static_cast<double>(d));
}

}  // namespace

double simulate_exact(const CircuitInstance& inst) {
    if (inst.hamiltonian.dim() != inst.rep.dim) {
        throw DimensionMismatch("simulator: Hamiltonian and representation dimensions differ");
    }
    const Eigen::Index d = inst.rep.dim;

    if (inst.mode == CircuitMode::choi) {
        return run_pure(inst, entangled_input(d));
    }

    switch (inst.input.kind) {
        case CircuitInput::Kind::basis:
            if (inst.input.basis_index < 0 || inst.input.basis_index >= d) {
                throw DimensionMismatch("basis index out of range");
            }
            return run_pure(inst, basis_state(d, inst.input.basis_index));
        case CircuitInput::Kind::state:
            if (inst.input.psi.size() != d) {
                throw DimensionMismatch("input state dimension does not match");
            }
            if (std::abs(inst.input.psi.norm() - 1.0) > global_tolerance()) {
                throw UnnormalizedState("circuit input state is not normalized");
            }
            return run_pure(inst, inst.input.psi);
        case CircuitInput::Kind::maximally_mixed: {
            double sum = 0.0;
            for (Eigen::Index x = 0; x < d; ++x) {
                sum += run_pure(inst, basis_state(d, x));
            }
            return sum / static_cast<double>(d);
        }
    }
    throw Error("unreachable");
}

namespace {

ShotRecord sample_shots_impl(const CircuitInstance& inst, std::uint64_t shots,
                             std::uint64_t seed, bool parallel) {
    if (shots < 1) throw ValidationError("shots must be >= 1");
    const Eigen::Index d = inst.rep.dim;

    // Exact accept probability per basis input, computed once.
    std::vector<double> p_basis(static_cast<std::size_t>(d));
    CircuitInstance basis_inst = inst;
    for (Eigen::Index x = 0; x < d; ++x) {
        basis_inst.input = CircuitInput::basis(x);
        p_basis[static_cast<std::size_t>(x)] = simulate_exact(basis_inst);
    }

    const std::uint64_t chunks = std::min<std::uint64_t>(kShotChunks, shots);
    const std::uint64_t base = shots / chunks;
    const std::uint64_t extra = shots % chunks;

    std::uint64_t accepts = 0;
#pragma omp parallel for schedule(static) reduction(+ : accepts) if (parallel)
    for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
        const std::uint64_t n =
            base + (static_cast<std::uint64_t>(c) < extra ? 1 : 0);
        SplitMix64 rng(derive_subseed(seed, static_cast<std::uint64_t>(c)));
        std::uint64_t local = 0;
        for (std::uint64_t s = 0; s < n; ++s) {
            const std::uint64_t x = rng.next_below(static_cast<std::uint64_t>(d));
            if (rng.next_double() < p_basis[x]) ++local;
        }
        accepts += local;
    }

    ShotRecord rec;
    rec.shots = shots;
    rec.accepts = accepts;
    rec.seed = seed;
    rec.estimate = static_cast<double>(accepts) / static_cast<double>(shots);
    rec.std_error = std::sqrt(rec.estimate * (1.0 - rec.estimate) / static_cast<double>(shots));
    return rec;
}

}  // namespace

ShotRecord sample_shots(const CircuitInstance& inst, std::uint64_t shots, std::uint64_t seed) {
    return sample_shots_impl(inst, shots, seed, true);
}

ShotRecord sample_shots_serial(const CircuitInstance& inst, std::uint64_t shots,
                               std::uint64_t seed) {
    return sample_shots_impl(inst, shots, seed, false);
}

}  // namespace symtest
