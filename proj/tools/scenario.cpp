/**
 * Copyright 2026 The homsym authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "scenario.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

namespace homsym::cli {

namespace {

using nlohmann::json;

std::string join_path(const std::string& base, const std::string& key) {
    return base.empty() ? key : base + "." + key;
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ConfigError(path + ": " + message);
}

const json& expect_object(const json& node, const std::string& path) {
    if (!node.is_object())
        fail(path, "expected an object");
    return node;
}

void reject_unknown_keys(const json& node, const std::string& path,
                         const std::set<std::string>& known) {
    for (const auto& [key, value] : node.items())
        if (!known.contains(key))
            fail(join_path(path, key), "unknown field");
}

int expect_int(const json& node, const std::string& path) {
    if (!node.is_number_integer())
        fail(path, "expected an integer");
    return node.get<int>();
}

double expect_double(const json& node, const std::string& path) {
    if (!node.is_number())
        fail(path, "expected a number");
    return node.get<double>();
}

std::string expect_string(const json& node, const std::string& path) {
    if (!node.is_string())
        fail(path, "expected a string");
    return node.get<std::string>();
}

Complex expect_complex(const json& node, const std::string& path) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
        fail(path, "expected a [re, im] pair");
    return {node[0].get<double>(), node[1].get<double>()};
}

std::vector<int> expect_int_array(const json& node, const std::string& path) {
    if (!node.is_array())
        fail(path, "expected an array of integers");
    std::vector<int> values;
    values.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i)
        values.push_back(expect_int(node[i], path + "[" + std::to_string(i) + "]"));
    return values;
}

std::vector<double> expect_double_array(const json& node, const std::string& path) {
    if (!node.is_array())
        fail(path, "expected an array of numbers");
    std::vector<double> values;
    values.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i)
        values.push_back(expect_double(node[i], path + "[" + std::to_string(i) + "]"));
    return values;
}

Eigen::MatrixXcd expect_complex_matrix(const json& node, const std::string& path) {
    if (!node.is_array() || node.empty())
        fail(path, "expected a non-empty array of rows");
    const std::size_t rows = node.size();
    Eigen::MatrixXcd m;
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = node[r];
        const std::string row_path = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != rows)
            fail(row_path, "expected a square matrix of [re, im] pairs");
        if (r == 0)
            m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(rows));
        for (std::size_t c = 0; c < rows; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                expect_complex(row[c], row_path + "[" + std::to_string(c) + "]");
    }
    return m;
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

FockState parse_state(const json& node, const ModeLayout& layout, const std::string& path);

FockState parse_builder_state(const json& node, const ModeLayout& layout,
                              const std::string& path) {
    const std::string builder = expect_string(node.at("builder"), join_path(path, "builder"));
    const json params = node.contains("params") ? node.at("params") : json::object();
    const std::string params_path = join_path(path, "params");
    expect_object(params, params_path);

    try {
        if (builder == "hom-biphoton") {
            reject_unknown_keys(params, params_path, {"internal_a", "internal_b"});
            const int a = params.contains("internal_a")
                              ? expect_int(params.at("internal_a"), params_path + ".internal_a")
                              : 0;
            const int b = params.contains("internal_b")
                              ? expect_int(params.at("internal_b"), params_path + ".internal_b")
                              : 0;
            std::vector<int> counts(static_cast<std::size_t>(layout.flat_size()), 0);
            counts[static_cast<std::size_t>(layout.flatten(0, a))] += 1;
            counts[static_cast<std::size_t>(layout.flatten(1, b))] += 1;
            return basis_state(layout, counts);
        }
        if (builder == "antisymmetric-biphoton") {
            reject_unknown_keys(params, params_path, {});
            if (layout.spatial != 2 || layout.internal < 2)
                fail(path, "antisymmetric-biphoton needs n = 2 and d >= 2");
            std::vector<int> ab(static_cast<std::size_t>(layout.flat_size()), 0);
            ab[static_cast<std::size_t>(layout.flatten(0, 0))] += 1;
            ab[static_cast<std::size_t>(layout.flatten(1, 1))] += 1;
            std::vector<int> ba(static_cast<std::size_t>(layout.flat_size()), 0);
            ba[static_cast<std::size_t>(layout.flatten(0, 1))] += 1;
            ba[static_cast<std::size_t>(layout.flatten(1, 0))] += 1;
            const double w = 1.0 / std::sqrt(2.0);
            return superpose({{Complex{w, 0.0}, basis_state(layout, ab)},
                              {Complex{-w, 0.0}, basis_state(layout, ba)}});
        }
        if (builder == "one-photon-per-mode") {
            reject_unknown_keys(params, params_path, {"internal"});
            const int internal = params.contains("internal")
                                     ? expect_int(params.at("internal"), params_path + ".internal")
                                     : 0;
            std::vector<int> counts(static_cast<std::size_t>(layout.flat_size()), 0);
            for (int s = 0; s < layout.spatial; ++s)
                counts[static_cast<std::size_t>(layout.flatten(s, internal))] = 1;
            return basis_state(layout, counts);
        }
        if (builder == "pre-dft-symmetrized") {
            if (!node.contains("base"))
                fail(join_path(path, "base"), "pre-dft-symmetrized needs a base state");
            const FockState base = parse_state(node.at("base"), layout, join_path(path, "base"));
            return symmetrize_by_predft(base);
        }
    } catch (const PreconditionError& error) {
        fail(path, error.what());
    }
    fail(join_path(path, "builder"), "unknown state builder '" + builder + "'");
}

FockState parse_state(const json& node, const ModeLayout& layout, const std::string& path) {
    expect_object(node, path);
    if (node.contains("builder")) {
        reject_unknown_keys(node, path, {"builder", "params", "base"});
        return parse_builder_state(node, layout, path);
    }
    if (!node.contains("terms"))
        fail(path, "state needs either 'builder' or 'terms'");
    reject_unknown_keys(node, path, {"terms"});
    const json& terms = node.at("terms");
    const std::string terms_path = join_path(path, "terms");
    if (!terms.is_array() || terms.empty())
        fail(terms_path, "expected a non-empty array of terms");
    FockState::AmplitudeMap map;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string term_path = terms_path + "[" + std::to_string(i) + "]";
        const json& term = expect_object(terms[i], term_path);
        reject_unknown_keys(term, term_path, {"amp", "counts"});
        if (!term.contains("amp") || !term.contains("counts"))
            fail(term_path, "each term needs 'amp' and 'counts'");
        const Complex amp = expect_complex(term.at("amp"), term_path + ".amp");
        const std::vector<int> counts =
            expect_int_array(term.at("counts"), term_path + ".counts");
        if (static_cast<int>(counts.size()) != layout.flat_size())
            fail(term_path + ".counts", "expected " + std::to_string(layout.flat_size()) +
                                            " entries for layout " + layout.describe());
        try {
            map[OccupationVector(counts)] += amp;
        } catch (const PreconditionError& error) {
            fail(term_path + ".counts", error.what());
        }
    }
    try {
        // Explicit term lists are normalized before use; every downstream
        // identity assumes unit norm.
        return FockState(layout, std::move(map)).normalized();
    } catch (const PreconditionError& error) {
        fail(terms_path, error.what());
    }
}

MixedState parse_mixture(const json& node, const ModeLayout& layout, const std::string& path) {
    if (!node.is_array() || node.empty())
        fail(path, "expected a non-empty array of {weight, state} components");
    std::vector<MixedState::Component> components;
    for (std::size_t i = 0; i < node.size(); ++i) {
        const std::string comp_path = path + "[" + std::to_string(i) + "]";
        const json& comp = expect_object(node[i], comp_path);
        reject_unknown_keys(comp, comp_path, {"weight", "state"});
        if (!comp.contains("weight") || !comp.contains("state"))
            fail(comp_path, "each component needs 'weight' and 'state'");
        components.push_back(
            {expect_double(comp.at("weight"), comp_path + ".weight"),
             parse_state(comp.at("state"), layout, comp_path + ".state")});
    }
    try {
        return MixedState(layout, std::move(components));
    } catch (const PreconditionError& error) {
        fail(path, error.what());
    }
}

ModeUnitary parse_interferometer(const json& node, const ModeLayout& layout,
                                 const std::string& path) {
    expect_object(node, path);
    try {
        if (node.contains("matrix")) {
            reject_unknown_keys(node, path, {"matrix", "spatial_only"});
            const Eigen::MatrixXcd m =
                expect_complex_matrix(node.at("matrix"), join_path(path, "matrix"));
            const bool spatial_only =
                node.contains("spatial_only") && node.at("spatial_only").is_boolean()
                    ? node.at("spatial_only").get<bool>()
                    : false;
            if (m.rows() == layout.spatial && layout.internal > 1)
                return ModeUnitary::from_spatial(layout, m);
            return ModeUnitary::from_full(layout, m, spatial_only);
        }
        reject_unknown_keys(node, path, {"builder", "params"});
        const std::string builder = expect_string(node.at("builder"), join_path(path, "builder"));
        const json params = node.contains("params") ? node.at("params") : json::object();
        const std::string params_path = join_path(path, "params");
        if (builder == "dft")
            return dft_unitary(layout);
        if (builder == "bs") {
            reject_unknown_keys(params, params_path, {"theta", "phi", "tau"});
            auto angle = [&](const char* name) {
                return params.contains(name)
                           ? expect_double(params.at(name), join_path(params_path, name))
                           : 0.0;
            };
            return bs_unitary(layout, angle("theta"), angle("phi"), angle("tau"));
        }
        if (builder == "permutation") {
            reject_unknown_keys(params, params_path, {"sigma"});
            if (!params.contains("sigma"))
                fail(params_path + ".sigma", "permutation needs sigma");
            return permutation_unitary(
                layout, expect_int_array(params.at("sigma"), params_path + ".sigma"));
        }
        if (builder == "cyclic")
            return cyclic_permutation_unitary(layout);
        if (builder == "diag-phase")
            return diagonal_phase_unitary(layout);
        if (builder == "identity")
            return identity_unitary(layout);
        fail(join_path(path, "builder"), "unknown interferometer builder '" + builder + "'");
    } catch (const PreconditionError& error) {
        fail(path, error.what());
    }
}

OneBodyGenerator parse_generator(const json& node, const ModeLayout& layout,
                                 const std::string& path) {
    expect_object(node, path);
    try {
        if (node.contains("matrix")) {
            reject_unknown_keys(node, path, {"matrix"});
            return OneBodyGenerator(
                layout, expect_complex_matrix(node.at("matrix"), join_path(path, "matrix")));
        }
        reject_unknown_keys(node, path, {"builder", "params"});
        const std::string builder = expect_string(node.at("builder"), join_path(path, "builder"));
        const json params = node.contains("params") ? node.at("params") : json::object();
        const std::string params_path = join_path(path, "params");
        if (builder == "mode-phase") {
            reject_unknown_keys(params, params_path, {"weights"});
            return mode_phase_generator(
                layout, expect_double_array(params.at("weights"), params_path + ".weights"));
        }
        if (builder == "collective-delay") {
            reject_unknown_keys(params, params_path, {"weights"});
            return collective_delay_generator(
                layout, expect_double_array(params.at("weights"), params_path + ".weights"));
        }
        if (builder == "alternating-delay") {
            reject_unknown_keys(params, params_path, {"weights"});
            return alternating_delay_generator(
                layout, expect_double_array(params.at("weights"), params_path + ".weights"));
        }
        if (builder == "number") {
            reject_unknown_keys(params, params_path, {"mode"});
            return number_generator(layout,
                                    expect_int(params.at("mode"), params_path + ".mode"));
        }
        fail(join_path(path, "builder"), "unknown generator builder '" + builder + "'");
    } catch (const PreconditionError& error) {
        fail(path, error.what());
    }
}

TaskParams parse_task_params(const json& node, const ModeLayout& layout,
                             const std::string& path) {
    TaskParams params;
    expect_object(node, path);
    reject_unknown_keys(node, path,
                        {"residue", "kappa_max", "points", "samples", "seed", "keep_internal",
                         "kappa0", "levels"});
    if (node.contains("residue")) {
        params.residue = expect_int(node.at("residue"), join_path(path, "residue"));
        if (params.residue < 0 || params.residue >= layout.spatial)
            fail(join_path(path, "residue"), "residue outside [0, n)");
    }
    if (node.contains("kappa_max")) {
        params.kappa_max = expect_double(node.at("kappa_max"), join_path(path, "kappa_max"));
        if (params.kappa_max <= 0.0)
            fail(join_path(path, "kappa_max"), "kappa_max must be positive");
    }
    if (node.contains("points")) {
        params.points = expect_int(node.at("points"), join_path(path, "points"));
        if (params.points < 1)
            fail(join_path(path, "points"), "points must be at least 1");
    }
    if (node.contains("samples")) {
        params.samples = expect_int(node.at("samples"), join_path(path, "samples"));
        if (params.samples < 0)
            fail(join_path(path, "samples"), "samples must be non-negative");
    }
    if (node.contains("seed")) {
        if (!node.at("seed").is_number_unsigned() && !node.at("seed").is_number_integer())
            fail(join_path(path, "seed"), "expected an unsigned integer");
        params.seed = node.at("seed").get<std::uint64_t>();
    }
    if (node.contains("keep_internal")) {
        if (!node.at("keep_internal").is_boolean())
            fail(join_path(path, "keep_internal"), "expected a boolean");
        params.keep_internal = node.at("keep_internal").get<bool>();
    }
    if (node.contains("kappa0")) {
        params.kappa0 = expect_double(node.at("kappa0"), join_path(path, "kappa0"));
        if (params.kappa0 <= 0.0)
            fail(join_path(path, "kappa0"), "kappa0 must be positive");
    }
    if (node.contains("levels")) {
        params.levels = expect_int(node.at("levels"), join_path(path, "levels"));
        if (params.levels < 1 || params.levels > 10)
            fail(join_path(path, "levels"), "levels must be in [1, 10]");
    }
    return params;
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

void write_file(const std::string& out_dir, const std::string& name,
                const std::string& contents) {
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path path = std::filesystem::path(out_dir) / name;
    std::ofstream stream(path, std::ios::binary);
    if (!stream)
        throw PreconditionError("cannot open output file " + path.string());
    stream << contents;
}

json tolerance_metadata() {
    return json{{"amplitude_prune", tol::amplitude_prune},
                {"norm_check", tol::norm_check},
                {"unitarity", tol::unitarity},
                {"hermiticity", tol::hermiticity},
                {"identity_check", tol::identity_check},
                {"state_precondition", tol::state_precondition},
                {"variance_match", tol::variance_match},
                {"fi_relative", tol::fi_relative},
                {"sld_cutoff", tol::sld_cutoff}};
}

json base_record(const Scenario& scenario, const std::string& task) {
    return json{{"config", scenario.echo},
                {"task", task},
                {"tolerances", tolerance_metadata()},
                {"tool", json{{"name", tool_name}, {"version", tool_version}}}};
}

const ModeUnitary& interferometer_or_dft(const Scenario& scenario, ModeUnitary& storage) {
    if (scenario.interferometer)
        return *scenario.interferometer;
    storage = dft_unitary(scenario.layout);
    return storage;
}

std::string spatial_csv_header(int n) {
    std::string header;
    for (int s = 0; s < n; ++s)
        header += "m" + std::to_string(s) + ",";
    return header;
}

std::string probe_symmetry_name(ProbeSymmetry symmetry) {
    switch (symmetry) {
        case ProbeSymmetry::PlusEigenstate: return "plus-eigenstate";
        case ProbeSymmetry::MinusEigenstate: return "minus-eigenstate";
        case ProbeSymmetry::ProjectorNull: return "projector-null";
        default: return "none";
    }
}

int run_symmetry(const Scenario& scenario, const std::string& out_dir) {
    json record = base_record(scenario, "symmetry");
    json results;
    const int n = scenario.layout.spatial;

    std::vector<double> weights;
    if (scenario.state) {
        const SymmetryReport report = symmetry_report(*scenario.state);
        weights = report.residue_weights;
        results["expectation"] = complex_to_json(report.expectation);
        results["symmetric_weight"] = report.symmetric_weight;
        results["antisymmetric_weight"] = report.antisymmetric_weight;
        results["residue_weights"] = report.residue_weights;
        results["state"] = state_to_json(*scenario.state);
        if (n == 2) {
            const auto [sym, anti] = decompose_exchange(*scenario.state);
            results["exchange_decomposition"] =
                json{{"symmetric_weight", sym.norm_sq()}, {"antisymmetric_weight", anti.norm_sq()}};
        }
    } else {
        const Complex trace =
            mixed_symmetry_measure(*scenario.mixture, cyclic_shift_permutation(n));
        results["expectation"] = complex_to_json(trace);
        weights.assign(static_cast<std::size_t>(n), 0.0);
        for (const auto& [weight, component] : scenario.mixture->components()) {
            const auto component_weights = residue_weights(component);
            for (int j = 0; j < n; ++j)
                weights[static_cast<std::size_t>(j)] +=
                    weight * component_weights[static_cast<std::size_t>(j)];
        }
        results["residue_weights"] = weights;
        results["symmetric_weight"] = weights[0];
        results["antisymmetric_weight"] = n % 2 == 0 ? weights[static_cast<std::size_t>(n / 2)] : 0.0;
    }
    record["results"] = results;

    std::string csv = "residue,weight\n";
    for (int j = 0; j < n; ++j)
        csv += std::to_string(j) + "," + format_double(weights[static_cast<std::size_t>(j)]) + "\n";
    write_file(out_dir, "residues.csv", csv);
    write_file(out_dir, "result.json", record.dump(2) + "\n");
    return 0;
}

int run_detect(const Scenario& scenario, const std::string& out_dir) {
    json record = base_record(scenario, "detect");
    json results;
    const int n = scenario.layout.spatial;

    ModeUnitary storage = identity_unitary(scenario.layout);
    const ModeUnitary& interferometer = interferometer_or_dft(scenario, storage);
    results["interferometer"] = unitary_to_json(interferometer);

    const OutcomeDistribution dist =
        scenario.state
            ? output_distribution(*scenario.state, interferometer, scenario.params.keep_internal)
            : output_distribution(*scenario.mixture, interferometer,
                                  scenario.params.keep_internal);

    json outcome_rows = json::array();
    std::string csv = spatial_csv_header(n) + "probability\n";
    for (const auto& [counts, p] : dist.probabilities) {
        json row{{"counts", counts}, {"probability", p}};
        outcome_rows.push_back(row);
        for (int s = 0; s < n; ++s)
            csv += std::to_string(counts[static_cast<std::size_t>(s)]) + ",";
        csv += format_double(p) + "\n";
    }
    results["distribution"] = outcome_rows;
    if (dist.internal_resolved) {
        json detailed = json::array();
        for (const auto& [key, p] : *dist.internal_resolved)
            detailed.push_back(json{{"counts", key.counts()}, {"probability", p}});
        results["internal_resolved"] = detailed;
    }

    const std::vector<double> residues =
        scenario.state ? residue_sum_distribution(*scenario.state, interferometer)
                       : residue_sum_distribution(*scenario.mixture, interferometer);
    // Both sign conventions: P[sum k m_k = r] and the projector-aligned
    // P[sum k m_k = -j], which equals <Pi_j> behind the DFT.
    results["residue_sum_distribution"] = residues;
    json hit(json::value_t::array);
    for (int j = 0; j < n; ++j)
        hit.push_back(residues[static_cast<std::size_t>((n - j) % n)]);
    results["residue_hit_probabilities"] = hit;
    results["selected_residue"] = scenario.params.residue;
    results["selected_residue_probability"] =
        residues[static_cast<std::size_t>((n - scenario.params.residue) % n)];

    if (scenario.state && n == 2 && photon_number_sector(*scenario.state) == 2)
        results["coincidence_probability"] = coincidence_probability(*scenario.state);
    if (scenario.state && n == 2)
        results["parity_even_probability"] = parity_even_probability(*scenario.state);

    if (scenario.params.samples > 0) {
        const auto histogram =
            sample_outcomes(dist, scenario.params.samples, scenario.params.seed);
        json sampled = json::array();
        std::string sample_csv = spatial_csv_header(n) + "count,frequency\n";
        for (const auto& [counts, hits] : histogram) {
            sampled.push_back(json{{"counts", counts}, {"count", hits}});
            for (int s = 0; s < n; ++s)
                sample_csv += std::to_string(counts[static_cast<std::size_t>(s)]) + ",";
            sample_csv += std::to_string(hits) + "," +
                          format_double(static_cast<double>(hits) /
                                        static_cast<double>(scenario.params.samples)) +
                          "\n";
        }
        results["samples"] = json{{"count", scenario.params.samples},
                                  {"seed", scenario.params.seed},
                                  {"histogram", sampled}};
        write_file(out_dir, "samples.csv", sample_csv);
    }

    record["results"] = results;
    write_file(out_dir, "distribution.csv", csv);
    write_file(out_dir, "result.json", record.dump(2) + "\n");
    return 0;
}

int run_fisher(const Scenario& scenario, const std::string& out_dir) {
    if (!scenario.generator)
        throw ConfigError("generator: the fisher task needs a generator");
    json record = base_record(scenario, "fisher");
    json results;

    ModeUnitary storage = identity_unitary(scenario.layout);
    const ModeUnitary& interferometer = interferometer_or_dft(scenario, storage);

    const EstimationProtocol protocol =
        scenario.state ? EstimationProtocol(*scenario.state, *scenario.generator, interferometer,
                                            scenario.params.residue)
                       : EstimationProtocol(*scenario.mixture, *scenario.generator,
                                            interferometer, scenario.params.residue);
    results["probe_symmetry"] = probe_symmetry_name(protocol.probe_symmetry());
    results["residue"] = scenario.params.residue;

    if (scenario.state) {
        results["qfi"] = qfi(*scenario.state, *scenario.generator);
    } else {
        const auto sector = photon_number_sector(*scenario.mixture);
        if (sector) {
            const oracle::DenseSectorBasis basis(scenario.layout, *sector);
            results["qfi"] = oracle::mixed_qfi_sld(
                oracle::density_matrix(basis, *scenario.mixture),
                oracle::embed_generator(basis, *scenario.generator));
        } else {
            results["qfi"] = nullptr;
        }
    }

    auto attach = [&results](const char* key, auto&& compute) {
        try {
            results[key] = compute();
        } catch (const PreconditionError& error) {
            results[key] = nullptr;
            results[std::string(key) + "_unavailable"] = error.what();
        }
    };
    if (scenario.state) {
        attach("fisher_limit_commutator", [&] { return fisher_limit_commutator(protocol); });
        attach("fisher_symmetry_adapted", [&] { return fisher_symmetry_adapted(protocol); });
    } else {
        attach("fisher_mixed", [&] { return fisher_mixed(protocol); });
    }
    attach("fisher_kappa_zero", [&] {
        return fisher_kappa_zero(protocol, scenario.params.kappa0, scenario.params.levels);
    });

    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(scenario.params.points));
    for (int i = 1; i <= scenario.params.points; ++i)
        grid.push_back(scenario.params.kappa_max * i / scenario.params.points);
    const auto sweep = fisher_two_outcome(protocol, grid);

    std::string csv = "kappa,p_hit,fisher\n";
    json sweep_rows = json::array();
    for (const auto& point : sweep) {
        csv += format_double(point.kappa) + "," + format_double(point.p_hit) + "," +
               format_double(point.fisher) + "\n";
        sweep_rows.push_back(
            json{{"kappa", point.kappa}, {"p_hit", point.p_hit}, {"fisher", point.fisher}});
    }
    results["sweep"] = sweep_rows;

    record["results"] = results;
    write_file(out_dir, "fisher_sweep.csv", csv);
    write_file(out_dir, "result.json", record.dump(2) + "\n");
    return 0;
}

int run_verify_impl(const json& config_echo, const std::string& out_dir) {
    const verify::Report report = verify::run_all();
    json checks = json::array();
    for (const auto& check : report.checks) {
        std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name;
        if (!check.passed)
            std::cout << " -- " << check.detail;
        std::cout << "\n";
        checks.push_back(
            json{{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
    }
    std::cout << report.checks.size() - static_cast<std::size_t>(report.failures()) << "/"
              << report.checks.size() << " checks passed\n";

    json record{{"config", config_echo},
                {"task", "verify"},
                {"tolerances", tolerance_metadata()},
                {"tool", json{{"name", tool_name}, {"version", tool_version}}},
                {"results", json{{"checks", checks}, {"failures", report.failures()}}}};
    write_file(out_dir, "result.json", record.dump(2) + "\n");
    return report.all_passed() ? 0 : 4;
}

} // namespace

Scenario parse_scenario(const json& config) {
    expect_object(config, "config");
    reject_unknown_keys(config, "",
                        {"layout", "state", "mixture", "interferometer", "generator", "task",
                         "task_params"});
    if (!config.contains("layout"))
        fail("layout", "missing");
    const json& layout_node = expect_object(config.at("layout"), "layout");
    reject_unknown_keys(layout_node, "layout", {"spatial", "internal"});
    if (!layout_node.contains("spatial"))
        fail("layout.spatial", "missing");
    const int spatial = expect_int(layout_node.at("spatial"), "layout.spatial");
    const int internal = layout_node.contains("internal")
                             ? expect_int(layout_node.at("internal"), "layout.internal")
                             : 1;
    Scenario scenario;
    try {
        scenario.layout = make_layout(spatial, internal);
    } catch (const PreconditionError& error) {
        fail("layout", error.what());
    }

    if (config.contains("state") && config.contains("mixture"))
        fail("state", "give either 'state' or 'mixture', not both");
    if (config.contains("state"))
        scenario.state = parse_state(config.at("state"), scenario.layout, "state");
    else if (config.contains("mixture"))
        scenario.mixture = parse_mixture(config.at("mixture"), scenario.layout, "mixture");

    if (config.contains("interferometer"))
        scenario.interferometer =
            parse_interferometer(config.at("interferometer"), scenario.layout, "interferometer");
    if (config.contains("generator"))
        scenario.generator = parse_generator(config.at("generator"), scenario.layout, "generator");

    if (config.contains("task")) {
        scenario.declared_task = expect_string(config.at("task"), "task");
        if (scenario.declared_task != "symmetry" && scenario.declared_task != "detect" &&
            scenario.declared_task != "fisher" && scenario.declared_task != "verify")
            fail("task", "unknown task '" + scenario.declared_task + "'");
    }
    if (config.contains("task_params"))
        scenario.params = parse_task_params(config.at("task_params"), scenario.layout,
                                            "task_params");

    scenario.echo = config;
    scenario.echo["layout"] = json{{"spatial", spatial}, {"internal", internal}};
    return scenario;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream)
        throw ConfigError("config: cannot read file '" + path + "'");
    json config;
    try {
        stream >> config;
    } catch (const json::parse_error& error) {
        throw ConfigError(std::string("config: ") + error.what());
    }
    return parse_scenario(config);
}

nlohmann::json state_to_json(const FockState& state) {
    json terms = json::array();
    for (const auto& [key, amp] : state.amplitudes())
        terms.push_back(json{{"amp", complex_to_json(amp)}, {"counts", key.counts()}});
    return json{{"layout", json{{"spatial", state.layout().spatial},
                                {"internal", state.layout().internal}}},
                {"terms", terms}};
}

nlohmann::json unitary_to_json(const ModeUnitary& u) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < u.matrix().rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < u.matrix().cols(); ++c)
            row.push_back(complex_to_json(u.matrix()(r, c)));
        rows.push_back(row);
    }
    return json{{"matrix", rows}, {"spatial_only", u.spatial_only()}};
}

int run_task(const Scenario& scenario, const std::string& task, const std::string& out_dir) {
    if (!scenario.declared_task.empty() && scenario.declared_task != task)
        throw ConfigError("task: config declares '" + scenario.declared_task +
                          "' but the '" + task + "' subcommand was invoked");
    if (task == "verify")
        return run_verify_impl(scenario.echo, out_dir);
    if (!scenario.state && !scenario.mixture)
        throw ConfigError("state: the '" + task + "' task needs a 'state' or 'mixture'");
    if (task == "symmetry")
        return run_symmetry(scenario, out_dir);
    if (task == "detect")
        return run_detect(scenario, out_dir);
    if (task == "fisher")
        return run_fisher(scenario, out_dir);
    throw ConfigError("task: unknown task '" + task + "'");
}

int run_verify(const std::string& out_dir) {
    return run_verify_impl(json::object(), out_dir);
}

std::string config_schema() {
    return R"(homsym scenario configuration (JSON), version 0.1.0
=====================================================

Top-level object:
  layout           required  {"spatial": n >= 1, "internal": d >= 1 (default 1)}
                             Flat mode index = spatial * d + internal.
  state            optional  pure input state (see State below)
  mixture          optional  [{"weight": p, "state": State}, ...]; weights sum to 1
                             (give either state or mixture, not both)
  interferometer   optional  mode unitary (see Unitary below); default: DFT
  generator        optional  one-body Hermitian generator; required by `fisher`
  task             optional  "symmetry" | "detect" | "fisher" | "verify";
                             must match the subcommand when both are given
  task_params      optional  see Task parameters

State (one of):
  {"builder": "hom-biphoton", "params": {"internal_a": 0, "internal_b": 0}}
      one photon in port 0 and one in port 1, in the given internal modes
  {"builder": "antisymmetric-biphoton"}
      (|0,a 1,b> - |0,b 1,a>)/sqrt2 with internals a = 0, b = 1; needs d >= 2
  {"builder": "one-photon-per-mode", "params": {"internal": 0}}
      one photon in every port, common internal mode
  {"builder": "pre-dft-symmetrized", "base": State}
      base state (definite sum k*m_k mod n) sent through the DFT
  {"terms": [{"amp": [re, im], "counts": [c_0, ..., c_{n*d-1}]}, ...]}
      explicit amplitude map; normalized before use

Unitary (one of):
  {"builder": "dft"}                        n-port discrete Fourier transform
  {"builder": "bs", "params": {"theta": 0, "phi": 0, "tau": 0}}
      general balanced beam splitter (n = 2); (0,0,0) is the Hadamard form
  {"builder": "permutation", "params": {"sigma": [..]}}   port relabeling
  {"builder": "cyclic"}                     cyclic shift j -> j-1 (mod n)
  {"builder": "diag-phase"}                 diag(omega^0, ..., omega^{n-1})
  {"builder": "identity"}
  {"matrix": [[[re, im], ...], ...], "spatial_only": false}
      explicit unitary; n x n matrices are lifted port-wise when d > 1,
      (n*d) x (n*d) matrices are taken as given

Generator (one of):
  {"builder": "mode-phase", "params": {"weights": [w_0, ..., w_{n-1}]}}
      diagonal, weight w_s on every internal mode of port s
  {"builder": "collective-delay", "params": {"weights": [w_0, ..., w_{d-1}]}}
      every port carries the same internal spectrum (shift-symmetric)
  {"builder": "alternating-delay", "params": {"weights": [w_0, ..., w_{d-1}]}}
      port s weighted by (-1)^s (shift-antisymmetric for even n)
  {"builder": "number", "params": {"mode": s}}    photon number of port s
  {"matrix": [[[re, im], ...], ...]}              explicit Hermitian matrix

Task parameters (all optional):
  residue        int in [0, n), default 0; outcome rule is the event
                 sum_k k*m_k = -residue (mod n)
  kappa_max      double > 0, default 0.1; `fisher` sweeps kappa_max*i/points
  points         int >= 1, default 21; sweep length (and CSV row count)
  samples        int >= 0, default 0; `detect` draws this many outcomes
  seed           uint64, default 0; sampling seed
  keep_internal  bool, default false; keep internal-resolved outcomes
  kappa0         double > 0, default 0.08; Richardson base point
  levels         int in [1, 10], default 4; Richardson levels

Outputs (per run, written to --out):
  result.json    full record: config echo, task results, tolerances, tool info
  symmetry       residues.csv  (residue, weight)
  detect         distribution.csv (m_0..m_{n-1}, probability); samples.csv
                 when sampling
  fisher         fisher_sweep.csv (kappa, p_hit, fisher)

Exit status: 0 success, 2 configuration error, 3 precondition violation,
4 numerical-identity failure (including failed `verify` checks).
)";
}

} // namespace homsym::cli
