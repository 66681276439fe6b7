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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "symtest/simulator.hpp"
#include "symtest/sweep.hpp"
#include "symtest/variational.hpp"

namespace {

using namespace symtest;
using nlohmann::json;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file \"" + path + "\"");
    out << text;
}

std::string format_number(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.12e", v);
    return buffer;
}

int cmd_group(const RunConfig& config, const std::string& out_path) {
    const GroupRep rep = config.build_group();
    json doc;
    doc["order"] = rep.order();
    doc["dim"] = rep.dim;
    doc["closure_tol"] = rep.closure_tol;
    doc["phase_consistent"] = rep.phase_consistent;
    write_output(doc.dump(2) + "\n", out_path);
    return 0;
}

int cmd_test(const RunConfig& config, const std::string& out_path) {
    const GroupRep rep = config.build_group();
    const double t = config.times.front();
    const SymmetryReport report =
        make_symmetry_report(config.hamiltonian, rep, t, config.series_order);
    json doc;
    doc["t"] = report.t;
    doc["tau"] = report.tau;
    doc["p_trace"] = report.p_trace;
    doc["p_choi"] = report.p_choi;
    doc["p_series"] = report.series.value;
    doc["series_remainder"] = report.series.remainder;
    doc["series_order"] = report.series.order;
    doc["commutator_norm_C"] = report.commutator_norm;
    doc["per_element_norms"] = json::array();
    for (const auto& [g, norm] : report.per_element_norms) {
        doc["per_element_norms"].push_back({{"g", g}, {"norm_sq", norm}});
    }
    doc["verdict"] = report.verdict;
    const auto [p_one, fixed] = gentle_measurement_check(config.hamiltonian, rep, t);
    doc["gentle_measurement"] = {{"p_is_one", p_one}, {"choi_fixed_by_projection", fixed}};
    write_output(doc.dump(2) + "\n", out_path);
    if (std::abs(report.p_trace - report.p_choi) > kCrossMethodTol) {
        std::cerr << "consistency violation: p_trace and p_choi disagree\n";
        return 2;
    }
    return 0;
}

int cmd_sweep(const RunConfig& config, const std::string& out_path,
              const std::string& format) {
    const SweepResult result = run_sweep(config);
    const std::string text = format == "json" ? sweep_to_json(result) : sweep_to_csv(result);
    write_output(text, out_path);
    if (!result.consistent) {
        std::cerr << "cross-method consistency violations:\n";
        for (const auto& line : result.diagnostics) std::cerr << "  " << line << "\n";
        return 2;
    }
    return 0;
}

int cmd_variational(const RunConfig& config, const std::string& out_path) {
    const GroupRep rep = config.build_group();
    json doc = json::array();
    for (double t : config.times) {
        OptimizerConfig opt;
        opt.max_iters = config.variational.max_iters;
        const VariationalResult result = optimize_with_restarts(
            config.hamiltonian, rep, t, config.hamiltonian.qubits(),
            config.variational.layers, config.variational.restarts, config.seed, opt);
        doc.push_back({{"t", t},
                       {"final_value", result.final_value},
                       {"oracle_optimum", result.oracle_optimum},
                       {"gap", result.gap},
                       {"iterations", result.iterations}});
    }
    write_output(doc.dump(2) + "\n", out_path);
    return 0;
}

int cmd_trotter(const RunConfig& config, const std::string& out_path) {
    const double t = config.times.front();
    std::string csv = "r,error\n";
    for (int r = 1; r <= 256; r *= 2) {
        const double err = trotter_error(config.hamiltonian, t, TrotterPlan{r});
        csv += std::to_string(r) + "," + format_number(err) + "\n";
    }
    write_output(csv, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian symmetry testing toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    int jobs = 0;
    std::optional<std::uint64_t> seed;

    app.add_option("--config", config_path, "JSON run configuration")->required();
    app.add_option("--jobs", jobs, "worker threads for sweep points (default: all cores)");
    app.add_option("--seed", seed, "64-bit seed overriding the config value");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--format", format, "sweep output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* sub_group = app.add_subcommand("group", "enumerate and validate the group");
    auto* sub_test = app.add_subcommand("test", "full symmetry report at the first time point");
    auto* sub_sweep = app.add_subcommand("sweep", "evaluate every method over the time grid");
    auto* sub_variational =
        app.add_subcommand("variational", "gradient-ascent acceptance maximization");
    auto* sub_trotter =
        app.add_subcommand("trotter",
                           "product-formula error vs step count at the first time point "
                           "(angular frequencies, hbar = 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        RunConfig config = load_config_file(config_path);
        if (seed) config.seed = *seed;
        if (!out_path.empty()) config.output_path = out_path;
        if (app.count("--format")) config.output_format = format;
#ifdef _OPENMP
        if (jobs > 0) omp_set_num_threads(jobs);
#endif
        if (sub_group->parsed()) return cmd_group(config, config.output_path);
        if (sub_test->parsed()) return cmd_test(config, config.output_path);
        if (sub_sweep->parsed()) {
            return cmd_sweep(config, config.output_path, config.output_format);
        }
        if (sub_variational->parsed()) return cmd_variational(config, config.output_path);
        if (sub_trotter->parsed()) return cmd_trotter(config, config.output_path);
    } catch (const ParseError& e) {
        std::cerr << "config parse error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "config validation error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
