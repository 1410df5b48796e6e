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

// Command implementations behind the CLI: scan (witness grid -> CSV),
// check (batch property suites), search (preparation-pair maximization).
// Exit codes: 0 success, 1 usage/config/validation failure, 2 a physics
// inequality was violated (bug signal).

#pragma once

#include <iosfwd>
#include <functional>
#include <string>
#include <vector>

#include "qwitness/config.hpp"
#include "qwitness/models.hpp"
#include "qwitness/witness.hpp"

namespace qwitness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

// Instantiate the model a config describes (loads files for custom models).
ModelInstance build_model(const ModelSpec& spec);

PreparationProcedure build_preparation(const PreparationSpec& spec, Index d_system);

// Uniform n_points grid over [t_start, t_end].
std::vector<double> make_grid(double t_start, double t_end, int n_points);

// CSV with header t,D,N_fd,N_analytic,M,C,slack,degenerate; 12 significant
// digits, "NA" for analytic values withheld at degeneracies.
std::string format_csv(const ScanResult& scan);

// Run the configured scan; on success the CSV is written to config.out.
int cmd_scan(const RunConfig& config, std::ostream& err);

// Fault-injection hooks for the check suites (tests only; the CLI never
// installs any).
struct CheckHooks {
    std::function<void(PreparedPair&)> mutate_pair;
};

struct SuiteOutcome {
    std::string name;
    int total = 0;
    int failed = 0;
    double worst_margin = 0.0;  // smallest margin seen; >= 0 means pass
};

// suite in {contractivity, m-negativity, inequality, laine-bound, all}.
std::vector<SuiteOutcome> run_check_suite(const std::string& suite, int n,
                                          std::uint64_t seed,
                                          const CheckHooks& hooks = {});

int cmd_check(const std::string& suite, int n, std::uint64_t seed, std::ostream& out,
              std::ostream& err, const CheckHooks& hooks = {});

int cmd_search(const RunConfig& config, int budget, std::ostream& out, std::ostream& err);

}  // namespace qwitness
