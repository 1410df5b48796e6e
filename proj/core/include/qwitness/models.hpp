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

// Named, parameterized SE models and seeded random instances that exercise
// every witness regime.

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qwitness/dynamics.hpp"

namespace qwitness {

struct ModelInstance {
    std::string name;
    Index d_system;
    Index d_environment;
    BipartiteState rho_se0;  // joint state at time 0
    HamiltonianSchedule sched;
    std::map<std::string, double> params;
};

// The maximally entangled two-qubit state (|00> + |11>)/sqrt(2).
BipartiteState bell_pair();

// Two-qubit dephasing model: H = (g/2) sigma_z (x) sigma_z, constant, and
// rho_SE(0) = (1 - a) rho(r_S) (x) rho(r_E) + a |Phi+><Phi+|. a = 0 is an
// uncorrelated product state; a = 1 is the Bell state.
ModelInstance model_dephasing(double g, double a, const Eigen::Vector3d& r_system,
                              const Eigen::Vector3d& r_environment);

// Random full-support joint state of the given rank with a Gaussian
// Hermitian coupling; deterministic for a fixed seed.
ModelInstance model_random(Index d_system, Index d_environment, Index rank,
                           std::uint64_t seed);

// Same schedule, initial state replaced by the product of its marginals
// (chi = 0 control group).
ModelInstance model_uncorrelated_control(const ModelInstance& base);

}  // namespace qwitness
