// Copyright 2026 The equivar Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Command implementations behind the `equivar` tool. Each command writes
 * to the given streams and returns a process exit code, so tests can call
 * them directly.
 *
 * Run configuration is sectioned key = value text:
 *
 *     [experiment]
 *     name = d4
 *     [train]
 *     seed = 3
 *     epochs = 150
 *     [output]
 *     dir = runs/d4-3
 *
 * Unknown sections or keys are rejected.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equivar/experiments.hpp"
#include "equivar/learner.hpp"

namespace equivar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Environment variable naming the default output root.
inline constexpr const char *kOutputEnv = "EQUIVAR_OUTPUT_DIR";

struct RunConfig {
    std::string experiment;
    ExperimentOptions options;
    TrainConfig train;
    std::optional<std::filesystem::path> output_dir;
    bool loss_csv{true};
    bool params_csv{true};
    bool summary_json{true};
};

/// Parses and validates; throws ConfigError with a line number on failure.
RunConfig parse_run_config(std::string_view text);

/// Explicit dir, else $EQUIVAR_OUTPUT_DIR (or "runs") / "<name>-seed<seed>".
std::filesystem::path resolve_output_dir(const RunConfig &config);

/// Final row of params.csv, or "final_params" of a summary.json.
std::vector<double> read_params_file(const std::filesystem::path &path);

int cmd_run(const std::filesystem::path &config_path, std::ostream &out,
            std::ostream &err);

int cmd_check(const std::string &experiment, const std::filesystem::path &params_path,
              std::ostream &out, std::ostream &err,
              const ExperimentOptions &options = {});

int cmd_twirl(const std::string &group, const std::string &pauli, std::ostream &out,
              std::ostream &err);

int cmd_list(std::ostream &out);

} // namespace equivar::cli
