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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char **argv) {
    CLI::App app{"equivar: symmetric circuits and learned equivariant embeddings"};
    app.require_subcommand(1);

    std::string config;
    auto *run = app.add_subcommand("run", "train an experiment from a config file");
    run->add_option("config", config, "sectioned key = value file")->required();

    std::string experiment;
    std::string params;
    std::string group = "c2";
    auto *check = app.add_subcommand("check", "invariance report for trained parameters");
    check->add_option("experiment", experiment)->required();
    check->add_option("params", params, "params.csv or summary.json")->required();
    check->add_option("--group", group, "intertwiner group (c2 or c2c2)");

    std::string twirl_group;
    std::string pauli;
    auto *twirl = app.add_subcommand("twirl", "group average of a Pauli string");
    twirl->add_option("group", twirl_group, "c2, c2c2, d4 or s6")->required();
    twirl->add_option("pauli", pauli, "e.g. ZIII")->required();

    auto *list = app.add_subcommand("list", "list built-in experiments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return equivar::cli::kExitConfig;
    }

    if (run->parsed()) {
        return equivar::cli::cmd_run(config, std::cout, std::cerr);
    }
    if (check->parsed()) {
        equivar::ExperimentOptions options;
        options.intertwiner_group = group;
        return equivar::cli::cmd_check(experiment, params, std::cout, std::cerr, options);
    }
    if (twirl->parsed()) {
        return equivar::cli::cmd_twirl(twirl_group, pauli, std::cout, std::cerr);
    }
    if (list->parsed()) {
        return equivar::cli::cmd_list(std::cout);
    }
    return equivar::cli::kExitFailure;
}
