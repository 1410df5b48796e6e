// Copyright 2026 The qwitness authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qwitness command-line front end.
//
//   qwitness scan   --config run.cfg [--seed N] [--out PATH] [--h H]
//                   [--threshold T]
//   qwitness check  --suite NAME [--n COUNT] [--seed N]
//   qwitness search --config run.cfg [--budget COUNT] [--seed N] [--h H]
//   qwitness version

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qwitness/runner.hpp"
#include "qwitness/version.hpp"

namespace {

struct CommonOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<double> h;
    std::optional<double> threshold;
};

qwitness::RunConfig load_with_overrides(const std::string& path,
                                        const CommonOverrides& over) {
    qwitness::RunConfig config = qwitness::load_config(path);
    if (over.seed) config.seed = *over.seed;
    if (over.out) config.out = *over.out;
    if (over.h) config.h = *over.h;
    if (over.threshold) config.threshold = *over.threshold;
    if (!(config.h > 0.0)) {
        throw qwitness::ConfigError("h must be positive");
    }
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contractivity witnesses for system-environment dynamics"};
    // --h is a domain flag (finite-difference step), so help is --help only
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    std::string config_path;
    CommonOverrides over;

    CLI::App* scan = app.add_subcommand("scan", "run a witness time scan, emit CSV");
    scan->set_help_flag("--help", "print help");
    scan->add_option("--config", config_path, "run configuration file")->required();
    scan->add_option("--seed", over.seed, "override [run] seed");
    scan->add_option("--out", over.out, "override [run] out");
    scan->add_option("--h", over.h, "override finite-difference step");
    scan->add_option("--threshold", over.threshold, "override detection threshold");

    std::string suite = "all";
    int n = 200;
    std::uint64_t check_seed = 0;
    CLI::App* check = app.add_subcommand("check", "run batch property suites");
    check->set_help_flag("--help", "print help");
    check->add_option("--suite", suite,
                      "contractivity | m-negativity | inequality | laine-bound | all");
    check->add_option("--n", n, "instances per suite");
    check->add_option("--seed", check_seed, "ensemble seed");

    int budget = 0;
    CLI::App* search = app.add_subcommand("search", "maximize N over preparation pairs");
    search->set_help_flag("--help", "print help");
    search->add_option("--config", config_path, "run configuration file")->required();
    search->add_option("--budget", budget, "evaluation budget (overrides [run] budget)");
    search->add_option("--seed", over.seed, "override [run] seed");
    search->add_option("--h", over.h, "override finite-difference step");

    CLI::App* version = app.add_subcommand("version", "print the version");

    CLI11_PARSE(app, argc, argv);

    try {
        if (version->parsed()) {
            std::cout << "qwitness " << qwitness::kVersion << "\n";
            return qwitness::kExitOk;
        }
        if (scan->parsed()) {
            const qwitness::RunConfig config = load_with_overrides(config_path, over);
            return qwitness::cmd_scan(config, std::cerr);
        }
        if (check->parsed()) {
            return qwitness::cmd_check(suite, n, check_seed, std::cout, std::cerr);
        }
        if (search->parsed()) {
            const qwitness::RunConfig config = load_with_overrides(config_path, over);
            const int effective = search->count("--budget") > 0 ? budget : config.budget;
            return qwitness::cmd_search(config, effective, std::cout, std::cerr);
        }
    } catch (const qwitness::Error& e) {
        std::cerr << e.what() << "\n";
        return qwitness::kExitUsage;
    }
    return qwitness::kExitUsage;
}
