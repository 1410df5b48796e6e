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

#include "qwitness/random.hpp"

#include <cmath>
#include <numbers>

namespace qwitness {

Rng sub_rng(std::uint64_t seed, std::uint64_t index) {
    // splitmix-style mix so per-instance streams do not overlap trivially
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return Rng(z ^ (z >> 31));
}

double uniform_canonical(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(Rng& rng) {
    // Box-Muller, cosine branch only; u1 kept away from 0
    const double u1 = 1.0 - uniform_canonical(rng);
    const double u2 = uniform_canonical(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ComplexMatrix random_gaussian_matrix(Index rows, Index cols, Rng& rng) {
    ComplexMatrix g(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            const double re = gaussian(rng);
            const double im = gaussian(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

ComplexMatrix random_hermitian(Index dim, Rng& rng) {
    const ComplexMatrix g = random_gaussian_matrix(dim, dim, rng);
    return 0.5 * (g + g.adjoint());
}

DensityMatrix random_density(Index dim, Index rank, Rng& rng) {
    if (rank < 1) {
        throw ContractError("random_density: rank must be >= 1");
    }
    const ComplexMatrix g = random_gaussian_matrix(dim, rank, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = hermitize(rho);  // remove roundoff asymmetry from the product
    return DensityMatrix(std::move(rho));
}

BipartiteState random_bipartite(Index d_system, Index d_environment, Index rank, Rng& rng) {
    DensityMatrix joint = random_density(d_system * d_environment, rank, rng);
    return BipartiteState(joint.matrix(), d_system, d_environment);
}

BipartiteState random_product(Index d_system, Index d_environment, Rng& rng) {
    const DensityMatrix rho_s = random_density(d_system, d_system, rng);
    const DensityMatrix rho_e = random_density(d_environment, d_environment, rng);
    return BipartiteState(tensor_product(rho_s.matrix(), rho_e.matrix()), d_system,
                          d_environment);
}

Eigen::Vector3d random_unit_axis(Rng& rng) {
    Eigen::Vector3d v;
    do {
        v = Eigen::Vector3d(gaussian(rng), gaussian(rng), gaussian(rng));
    } while (v.norm() < 1e-12);
    return v.normalized();
}

}  // namespace qwitness
