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

// Run configuration: INI-style sections of key = value pairs, '#'
// comments. Unknown sections or keys are hard errors — a silently ignored
// key would invalidate a physics run.
//
//   [model]         name = dephasing | random | custom
//                   dephasing: g, a, rs, re
//                   random:    ds, de, rank, model_seed
//                   custom:    state_file, hamiltonian_file
//   [preparation1]  type = identity | unitary | pin
//   [preparation2]  unitary: axis = x y z, angle = theta (or matrix_file)
//                   pin:     bloch = x y z (or matrix_file)
//   [grid]          t_start, t_end, n_points
//   [run]           h, threshold, seed, out, budget (all optional)

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "qwitness/matrix.hpp"
#include "qwitness/witness.hpp"

namespace qwitness {

struct ModelSpec {
    std::string name;
    // dephasing
    double g = 1.0;
    double a = 0.0;
    Eigen::Vector3d r_system{0, 0, 0};
    Eigen::Vector3d r_environment{0, 0, 0};
    // random
    Index d_system = 2;
    Index d_environment = 2;
    Index rank = 4;
    std::uint64_t model_seed = 0;
    // custom
    std::filesystem::path state_file;
    std::filesystem::path hamiltonian_file;
};

struct PreparationSpec {
    enum class Type { identity, unitary, pin };
    Type type = Type::identity;
    Eigen::Vector3d axis{1, 0, 0};
    double angle = 0.0;
    std::optional<Eigen::Vector3d> bloch;          // pin target
    std::filesystem::path matrix_file;             // explicit payload
};

struct RunConfig {
    ModelSpec model;
    PreparationSpec prep1;
    PreparationSpec prep2;
    double t_start = 0.0;
    double t_end = 0.0;
    int n_points = 1;
    double h = kDefaultFdStep;
    double threshold = kDefaultDetectionThreshold;
    std::uint64_t seed = 0;
    std::filesystem::path out = "scan.csv";
    int budget = 1000;
};

RunConfig parse_config(std::istream& in, const std::string& origin = "<stream>");
RunConfig load_config(const std::filesystem::path& path);

}  // namespace qwitness
