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

#include "symtest/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace symtest {

using nlohmann::json;

std::string method_name(Method m) {
    switch (m) {
        case Method::trace: return "trace";
        case Method::choi: return "choi";
        case Method::series: return "series";
        case Method::circuit: return "circuit";
        case Method::shots: return "shots";
        case Method::variational: return "variational";
    }
    throw Error("unreachable");
}

Method method_from_name(const std::string& name) {
    for (Method m : {Method::trace, Method::choi, Method::series, Method::circuit,
                     Method::shots, Method::variational}) {
        if (method_name(m) == name) return m;
    }
    throw ValidationError("unknown method \"" + name + "\"");
}

namespace {

ComplexMatrix matrix_from_entries(const json& entries, const std::string& what) {
    if (!entries.is_array()) {
        throw ValidationError(what + ": entries must be an array of [re, im] pairs");
    }
    const std::size_t count = entries.size();
    const auto dim = static_cast<Eigen::Index>(std::llround(std::sqrt(double(count))));
    if (dim < 1 || static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) != count) {
        throw ValidationError(what + ": entry count " + std::to_string(count) +
                              " is not a perfect square");
    }
    ComplexMatrix m(dim, dim);
    for (std::size_t k = 0; k < count; ++k) {
        const json& pair = entries[k];
        if (!pair.is_array() || pair.size() != 2) {
            throw ValidationError(what + ": each entry must be [re, im]");
        }
        // Row-major order.
        m(static_cast<Eigen::Index>(k) / dim, static_cast<Eigen::Index>(k) % dim) =
            Complex(pair[0].get<double>(), pair[1].get<double>());
    }
    return m;
}

HamiltonianSpec parse_hamiltonian(const json& node) {
    if (!node.is_object() || !node.contains("type")) {
        throw ValidationError("hamiltonian: missing \"type\"");
    }
    const std::string type = node.at("type").get<std::string>();
    if (type == "nmr") {
        return build_nmr_hamiltonian(node.at("omega1").get<double>(),
                                     node.at("omega2").get<double>(),
                                     node.at("j").get<double>());
    }
    if (type == "pauli") {
        const int qubits = node.at("qubits").get<int>();
        std::vector<PauliTerm> terms;
        for (const auto& entry : node.at("terms")) {
            terms.push_back(parse_pauli_term(entry.get<std::string>()));
        }
        return HamiltonianSpec::from_terms(qubits, std::move(terms));
    }
    if (type == "matrix") {
        return HamiltonianSpec::from_matrix(matrix_from_entries(node.at("entries"),
                                                                "hamiltonian"));
    }
    throw ValidationError("hamiltonian: unknown type \"" + type + "\"");
}

std::vector<double> parse_times(const json& node) {
    std::vector<double> times;
    if (node.is_array()) {
        for (const auto& v : node) times.push_back(v.get<double>());
    } else if (node.is_object()) {
        const double start = node.at("start").get<double>();
        const double stop = node.at("stop").get<double>();
        const int count = node.at("count").get<int>();
        if (count < 1) throw ValidationError("times: count must be >= 1");
        for (int k = 0; k < count; ++k) {
            times.push_back(count == 1 ? start
                                       : start + (stop - start) * k / double(count - 1));
        }
    } else {
        throw ValidationError("times: expected an array or {start, stop, count}");
    }
    if (times.empty()) throw ValidationError("times: must be non-empty");
    return times;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }

    RunConfig config;
    try {
        config.hamiltonian = parse_hamiltonian(doc.at("hamiltonian"));

        const json& group = doc.at("group");
        const int n_qubits = config.hamiltonian.qubits();
        for (const auto& gen : group.at("generators")) {
            GateSpec spec;
            if (gen.contains("gate")) {
                spec.gate = gen.at("gate").get<std::string>();
                for (const auto& q : gen.at("qubits")) spec.qubits.push_back(q.get<int>());
            } else if (gen.contains("matrix")) {
                spec.matrix = matrix_from_entries(gen.at("matrix"), "generator");
            } else {
                throw ValidationError("generator: needs \"gate\" or \"matrix\"");
            }
            config.generators.push_back(realize_gate(spec, n_qubits));
        }
        if (group.contains("max_order")) {
            config.group_max_order = group.at("max_order").get<std::size_t>();
        }
        if (group.contains("tol")) config.group_tol = group.at("tol").get<double>();

        config.times = parse_times(doc.at("times"));

        for (const auto& m : doc.at("methods")) {
            config.methods.push_back(method_from_name(m.get<std::string>()));
        }
        if (config.methods.empty()) {
            throw ValidationError("methods: at least one method is required");
        }

        if (doc.contains("shots")) config.shots = doc.at("shots").get<std::uint64_t>();
        if (doc.contains("seed")) config.seed = doc.at("seed").get<std::uint64_t>();
        if (doc.contains("series_order")) {
            config.series_order = doc.at("series_order").get<int>();
            if (config.series_order < 0) throw ValidationError("series_order must be >= 0");
        }
        if (doc.contains("variational")) {
            const json& v = doc.at("variational");
            if (v.contains("layers")) config.variational.layers = v.at("layers").get<int>();
            if (v.contains("restarts")) {
                config.variational.restarts = v.at("restarts").get<int>();
            }
            if (v.contains("max_iters")) {
                config.variational.max_iters = v.at("max_iters").get<int>();
            }
        }
        if (doc.contains("output")) {
            const json& out = doc.at("output");
            if (out.contains("path")) config.output_path = out.at("path").get<std::string>();
            if (out.contains("format")) {
                config.output_format = out.at("format").get<std::string>();
                if (config.output_format != "csv" && config.output_format != "json") {
                    throw ValidationError("output.format must be \"csv\" or \"json\"");
                }
            }
        }
    } catch (const json::exception& e) {
        throw ValidationError(e.what());
    }
    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace symtest
