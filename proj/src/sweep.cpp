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

#include "symtest/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "symtest/rng.hpp"
#include "symtest/simulator.hpp"

namespace symtest {

namespace {

bool wants(const RunConfig& config, Method m) {
    return std::find(config.methods.begin(), config.methods.end(), m) != config.methods.end();
}

SweepRow evaluate_point(const RunConfig& config, const GroupRep& rep, std::size_t index) {
    const double t = config.times[index];
    const HamiltonianSpec& h = config.hamiltonian;

    SweepRow row;
    row.t = t;
    row.tau = h.spectral_norm() * std::abs(t);
    row.commutator_norm = commutator_norm(h, rep);
    if (row.commutator_norm < kSymmetricVerdictThreshold) {
        row.verdict = "symmetric";
    } else if (row.commutator_norm > kAsymmetricVerdictThreshold) {
        row.verdict = "asymmetric";
    } else {
        row.verdict = "inconclusive";
    }

    if (wants(config, Method::trace)) {
        row.p_trace = acceptance_probability_trace(h, rep, t);
    }
    if (wants(config, Method::choi)) {
        row.p_choi = acceptance_probability_choi(h, rep, t);
    }
    if (wants(config, Method::series)) {
        const SeriesResult s = acceptance_probability_series(h, rep, t, config.series_order);
        row.p_series = s.value;
        row.series_remainder = s.remainder;
    }
    if (wants(config, Method::circuit) || wants(config, Method::shots)) {
        CircuitInstance inst{CircuitMode::mixed, h, rep, t, CircuitInput::maximally_mixed()};
        if (wants(config, Method::circuit)) {
            row.p_circuit = simulate_exact(inst);
        }
        if (wants(config, Method::shots)) {
            // Per-point seed so results do not depend on evaluation order.
            const ShotRecord rec =
                sample_shots(inst, config.shots, derive_subseed(config.seed, index));
            row.shot_estimate = rec.estimate;
            row.shot_stderr = rec.std_error;
        }
    }
    return row;
}

SweepResult finish(const RunConfig& config, std::vector<SweepRow> rows) {
    SweepResult result;
    result.rows = std::move(rows);

    // Cross-method consistency: the exact routes must agree pointwise.
    for (const auto& row : result.rows) {
        auto check = [&](const char* a, std::optional<double> va, const char* b,
                         std::optional<double> vb) {
            if (!va || !vb) return;
            const double diff = std::abs(*va - *vb);
            if (diff > kCrossMethodTol) {
                result.consistent = false;
                std::ostringstream msg;
                msg << "t=" << row.t << ": |" << a << " - " << b << "| = " << diff
                    << " exceeds " << kCrossMethodTol;
                result.diagnostics.push_back(msg.str());
            }
        };
        check("p_trace", row.p_trace, "p_choi", row.p_choi);
        check("p_trace", row.p_trace, "p_circuit", row.p_circuit);
        check("p_choi", row.p_choi, "p_circuit", row.p_circuit);
    }
    (void)config;
    return result;
}

}  // namespace

SweepResult run_sweep(const RunConfig& config) {
    const GroupRep rep = config.build_group();
    std::vector<SweepRow> rows(config.times.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(config.times.size()); ++i) {
        rows[static_cast<std::size_t>(i)] =
            evaluate_point(config, rep, static_cast<std::size_t>(i));
    }
    return finish(config, std::move(rows));
}

SweepResult run_sweep_serial(const RunConfig& config) {
    const GroupRep rep = config.build_group();
    std::vector<SweepRow> rows(config.times.size());
    for (std::size_t i = 0; i < config.times.size(); ++i) {
        rows[i] = evaluate_point(config, rep, i);
    }
    return finish(config, std::move(rows));
}

namespace {

std::string format_number(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.12e", v);
    return buffer;
}

std::string format_cell(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
}

}  // namespace

std::string sweep_to_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "t,p_trace,p_choi,p_series,series_remainder,p_circuit,shot_estimate,"
           "shot_stderr,commutator_norm_C,tau,verdict\n";
    for (const auto& row : result.rows) {
        out << format_number(row.t) << ',' << format_cell(row.p_trace) << ','
            << format_cell(row.p_choi) << ',' << format_cell(row.p_series) << ','
            << format_cell(row.series_remainder) << ',' << format_cell(row.p_circuit) << ','
            << format_cell(row.shot_estimate) << ',' << format_cell(row.shot_stderr) << ','
            << format_number(row.commutator_norm) << ',' << format_number(row.tau) << ','
            << row.verdict << '\n';
    }
    return out.str();
}

std::string sweep_to_json(const SweepResult& result) {
    nlohmann::json doc;
    doc["consistent"] = result.consistent;
    doc["diagnostics"] = result.diagnostics;
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : result.rows) {
        nlohmann::json r;
        r["t"] = row.t;
        r["tau"] = row.tau;
        auto set = [&](const char* key, const std::optional<double>& v) {
            if (v) r[key] = *v;
        };
        set("p_trace", row.p_trace);
        set("p_choi", row.p_choi);
        set("p_series", row.p_series);
        set("series_remainder", row.series_remainder);
        set("p_circuit", row.p_circuit);
        set("shot_estimate", row.shot_estimate);
        set("shot_stderr", row.shot_stderr);
        r["commutator_norm_C"] = row.commutator_norm;
        r["verdict"] = row.verdict;
        doc["rows"].push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

}  // namespace symtest
