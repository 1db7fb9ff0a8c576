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

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "homsym/homsym.hpp"

namespace homsym::cli {

/// Malformed or inconsistent scenario configuration; messages carry the
/// offending field path. Maps to exit status 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct TaskParams {
    int residue = 0;
    double kappa_max = 0.1;
    int points = 21;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    bool keep_internal = false;
    double kappa0 = 0.08;   // Richardson base point
    int levels = 4;         // Richardson levels
};

/// A fully validated in-memory scenario: every state, matrix and parameter
/// already constructed, so the tasks below cannot fail on malformed input.
struct Scenario {
    ModeLayout layout;
    std::optional<FockState> state;
    std::optional<MixedState> mixture;
    std::optional<ModeUnitary> interferometer;  // defaults to the DFT
    std::optional<OneBodyGenerator> generator;
    std::string declared_task;  // optional "task" field from the config
    TaskParams params;
    nlohmann::json echo;  // parsed config with defaults materialized
};

Scenario parse_scenario(const nlohmann::json& config);
Scenario load_scenario_file(const std::string& path);

/// Deterministic, byte-stable description of the config format.
std::string config_schema();

nlohmann::json state_to_json(const FockState& state);
nlohmann::json unitary_to_json(const ModeUnitary& u);

/// Execute one task ("symmetry", "detect", "fisher", "verify") and write
/// result.json plus the task's CSV files under out_dir. Returns the process
/// exit status.
int run_task(const Scenario& scenario, const std::string& task, const std::string& out_dir);

/// Exit status for a verify run without a scenario.
int run_verify(const std::string& out_dir);

inline constexpr const char* tool_name = "homsym";
inline constexpr const char* tool_version = "0.1.0";

} // namespace homsym::cli
