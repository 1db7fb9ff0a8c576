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

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "scenario.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<int> residue;
};

void add_common(CLI::App* cmd, CommonOptions& options, bool config_required) {
    auto* config = cmd->add_option("--config", options.config_path, "Scenario config (JSON)");
    if (config_required)
        config->required();
    cmd->add_option("--out", options.out_dir, "Output directory (default: .)");
    cmd->add_option("--seed", options.seed, "Seed for sampling mode");
    cmd->add_option("--residue", options.residue, "Outcome residue j; hit = sum k*m_k = -j (mod n)");
}

int dispatch(const std::string& task, const CommonOptions& options,
             const std::optional<double>& kappa_max, const std::optional<int>& points,
             const std::optional<std::int64_t>& samples) {
    homsym::cli::Scenario scenario = homsym::cli::load_scenario_file(options.config_path);
    if (options.seed)
        scenario.params.seed = *options.seed;
    if (options.residue) {
        if (*options.residue < 0 || *options.residue >= scenario.layout.spatial)
            throw homsym::cli::ConfigError("--residue: residue outside [0, n)");
        scenario.params.residue = *options.residue;
    }
    if (kappa_max) {
        if (*kappa_max <= 0.0)
            throw homsym::cli::ConfigError("--kappa-max: must be positive");
        scenario.params.kappa_max = *kappa_max;
    }
    if (points) {
        if (*points < 1)
            throw homsym::cli::ConfigError("--points: must be at least 1");
        scenario.params.points = *points;
    }
    if (samples) {
        if (*samples < 0)
            throw homsym::cli::ConfigError("--samples: must be non-negative");
        scenario.params.samples = *samples;
    }
    return homsym::cli::run_task(scenario, task, options.out_dir);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multimode Fock-space interferometry: symmetry expectations, "
                 "photon-number-resolved output statistics and Fisher information"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    CommonOptions symmetry_options;
    auto* symmetry_cmd =
        app.add_subcommand("symmetry", "Symmetry expectations and residue weights of a state");
    add_common(symmetry_cmd, symmetry_options, true);

    CommonOptions detect_options;
    std::optional<std::int64_t> detect_samples;
    auto* detect_cmd = app.add_subcommand(
        "detect", "Photon-number-resolving outcome distribution behind an interferometer");
    add_common(detect_cmd, detect_options, true);
    detect_cmd->add_option("--samples", detect_samples, "Draw seeded samples from the distribution");

    CommonOptions fisher_options;
    std::optional<double> fisher_kappa_max;
    std::optional<int> fisher_points;
    auto* fisher_cmd = app.add_subcommand(
        "fisher", "Fisher information of the two-outcome residue protocol");
    add_common(fisher_cmd, fisher_options, true);
    fisher_cmd->add_option("--kappa-max", fisher_kappa_max, "Largest kappa of the sweep grid");
    fisher_cmd->add_option("--points", fisher_points, "Number of sweep grid points");

    CommonOptions verify_options;
    auto* verify_cmd = app.add_subcommand(
        "verify", "Run the full oracle-equivalence suite; nonzero exit on any failure");
    add_common(verify_cmd, verify_options, false);

    auto* schema_cmd = app.add_subcommand("schema", "Print the scenario config schema");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        if (error.get_exit_code() == 0)
            return app.exit(error);  // --help / --version
        app.exit(error);
        return 2;
    }

    try {
        if (schema_cmd->parsed()) {
            std::cout << homsym::cli::config_schema();
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (verify_options.config_path.empty())
                return homsym::cli::run_verify(verify_options.out_dir);
            homsym::cli::Scenario scenario =
                homsym::cli::load_scenario_file(verify_options.config_path);
            return homsym::cli::run_task(scenario, "verify", verify_options.out_dir);
        }
        if (symmetry_cmd->parsed())
            return dispatch("symmetry", symmetry_options, std::nullopt, std::nullopt,
                            std::nullopt);
        if (detect_cmd->parsed())
            return dispatch("detect", detect_options, std::nullopt, std::nullopt, detect_samples);
        if (fisher_cmd->parsed())
            return dispatch("fisher", fisher_options, fisher_kappa_max, fisher_points,
                            std::nullopt);
    } catch (const homsym::cli::ConfigError& error) {
        std::cerr << "config error: " << error.what() << "\n";
        return 2;
    } catch (const homsym::PreconditionError& error) {
        std::cerr << "precondition violated: " << error.what() << "\n";
        return 3;
    } catch (const homsym::IdentityError& error) {
        std::cerr << "numerical identity failed: " << error.what() << "\n";
        return 4;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 2;
}
