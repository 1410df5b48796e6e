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

// Seeded random ensembles used by the catalog, the check suites and the
// tests. Draws are generated from mt19937_64 raws directly (no
// std::*_distribution) so a seed produces the same stream on every
// standard library.

#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "qwitness/state.hpp"

namespace qwitness {

using Rng = std::mt19937_64;

// Independent stream for instance `index` of a suite seeded with `seed`.
Rng sub_rng(std::uint64_t seed, std::uint64_t index);

// Uniform in [0, 1) with 53-bit resolution.
double uniform_canonical(Rng& rng);

// Standard normal via Box-Muller on uniform_canonical draws.
double gaussian(Rng& rng);

// Entries with independent standard-Gaussian real and imaginary parts.
ComplexMatrix random_gaussian_matrix(Index rows, Index cols, Rng& rng);

// (G + G')/2 with G square standard-Gaussian.
ComplexMatrix random_hermitian(Index dim, Rng& rng);

// G G' / tr(G G') for a dim x rank Gaussian G; full support for
// rank >= dim, pure for rank = 1.
DensityMatrix random_density(Index dim, Index rank, Rng& rng);

BipartiteState random_bipartite(Index d_system, Index d_environment, Index rank, Rng& rng);

// Product of two independent random full-rank states.
BipartiteState random_product(Index d_system, Index d_environment, Rng& rng);

// Uniform direction on the unit sphere.
Eigen::Vector3d random_unit_axis(Rng& rng);

}  // namespace qwitness
