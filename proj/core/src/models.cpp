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

#include "qwitness/models.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qwitness/random.hpp"

namespace qwitness {

BipartiteState bell_pair() {
    Eigen::Vector4cd ket = Eigen::Vector4cd::Zero();
    ket(0) = ket(3) = 1.0 / std::sqrt(2.0);
    return BipartiteState(ket * ket.adjoint(), 2, 2);
}

ModelInstance model_dephasing(double g, double a, const Eigen::Vector3d& r_system,
                              const Eigen::Vector3d& r_environment) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw ContractError("model_dephasing: mixing parameter a must lie in [0, 1]");
    }
    const DensityMatrix rho_s = qubit_from_bloch(r_system);
    const DensityMatrix rho_e = qubit_from_bloch(r_environment);

    ComplexMatrix joint = (1.0 - a) * tensor_product(rho_s.matrix(), rho_e.matrix()) +
                          a * bell_pair().matrix();
    ComplexMatrix hamiltonian = 0.5 * g * tensor_product(sigma_z(), sigma_z());

    ModelInstance model{
        "dephasing", 2, 2, BipartiteState(std::move(joint), 2, 2),
        HamiltonianSchedule::constant(2, 2, std::move(hamiltonian)),
        {{"g", g}, {"a", a},
         {"rs_x", r_system.x()}, {"rs_y", r_system.y()}, {"rs_z", r_system.z()},
         {"re_x", r_environment.x()}, {"re_y", r_environment.y()},
         {"re_z", r_environment.z()}}};
    return model;
}

ModelInstance model_random(Index d_system, Index d_environment, Index rank,
                           std::uint64_t seed) {
    if (d_system * d_environment > kDefaultMaxDim) {
        throw SizeError("model_random: dS*dE exceeds the maximum dimension");
    }
    if (rank < 1) {
        throw ContractError("model_random: rank must be >= 1");
    }
    Rng rng = sub_rng(seed, 0);
    BipartiteState rho0 = random_bipartite(d_system, d_environment, rank, rng);
    ComplexMatrix hamiltonian = random_hermitian(d_system * d_environment, rng);
    ModelInstance model{"random", d_system, d_environment, std::move(rho0),
                        HamiltonianSchedule::constant(d_system, d_environment,
                                                      std::move(hamiltonian)),
                        {{"rank", static_cast<double>(rank)},
                         {"seed", static_cast<double>(seed)}}};
    return model;
}

ModelInstance model_uncorrelated_control(const ModelInstance& base) {
    const ComplexMatrix product =
        tensor_product(base.rho_se0.reduced_system().matrix(),
                       base.rho_se0.reduced_environment().matrix());
    ModelInstance control{base.name + "-uncorrelated", base.d_system, base.d_environment,
                          BipartiteState(product, base.d_system, base.d_environment),
                          base.sched, base.params};
    return control;
}

}  // namespace qwitness
