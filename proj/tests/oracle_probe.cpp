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

// One-off probe that prints the frozen reference numbers used by the test
// suites: the exhaustive 4-angle preparation-grid maximum for the Bell
// dephasing model, and the seed-42 regression goldens. Not registered
// with ctest; run by hand when a frozen value needs to be regenerated.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "qwitness/models.hpp"
#include "qwitness/random.hpp"
#include "qwitness/witness.hpp"

using namespace qwitness;

namespace {

// Bloch vector of the evolved reduced branch for one rotation preparation
// on the Bell state, computed with oracle arithmetic only.
Eigen::Vector3d branch_bloch(const oracle::Matrix& bell, const oracle::Matrix& u,
                             double axis_incl, double angle) {
    const oracle::Matrix eye = oracle::Matrix::Identity(2, 2);
    oracle::Matrix gen(2, 2);
    const double ax = std::sin(axis_incl);
    const double az = std::cos(axis_incl);
    gen << az, ax, ax, -az;  // ax * sigma_x + az * sigma_z
    const oracle::Matrix v =
        std::cos(angle / 2) * eye - oracle::Complex(0, 1) * std::sin(angle / 2) * gen;
    const oracle::Matrix lifted = oracle::kron(v, eye);
    const oracle::Matrix evolved =
        u * (lifted * bell * lifted.adjoint()) * u.adjoint();
    const oracle::Matrix red = oracle::ptrace_env(evolved, 2, 2);
    return {2.0 * red(0, 1).real(), -2.0 * red(0, 1).imag(),
            (red(0, 0) - red(1, 1)).real()};
}

void probe_search_grid() {
    const double h = 1e-5;
    Eigen::Vector4cd ket = Eigen::Vector4cd::Zero();
    ket(0) = ket(3) = 1.0 / std::sqrt(2.0);
    const oracle::Matrix bell = ket * ket.adjoint();
    const oracle::Matrix u = oracle::dephasing_propagator(1.0, h);

    // axis inclination 0..179 deg, rotation angle 0..359 deg, 1 deg steps
    std::vector<Eigen::Vector3d> points;
    points.reserve(180 * 360);
    for (int a = 0; a < 180; ++a) {
        for (int t = 0; t < 360; ++t) {
            points.push_back(branch_bloch(bell, u, a * std::numbers::pi / 180.0,
                                          t * std::numbers::pi / 180.0));
        }
    }
    double best_sq = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            best_sq = std::max(best_sq, (points[i] - points[j]).squaredNorm());
        }
    }
    // N = D(h)/h with D = |w1 - w2| / 2 and D(0) = 0 on the Bell state
    std::printf("search grid oracle max N = %.12f\n", std::sqrt(best_sq) / (2.0 * h));
}

void probe_goldens() {
    const ModelInstance model = model_random(2, 2, 4, 42);
    Rng rng = sub_rng(42, 1);
    const PreparationProcedure p1 = PreparationProcedure::rotation(
        random_unit_axis(rng), 2 * std::numbers::pi * uniform_canonical(rng));
    const PreparationProcedure p2 = PreparationProcedure::rotation(
        random_unit_axis(rng), 2 * std::numbers::pi * uniform_canonical(rng));
    const PreparedPair pair = prepare_pair(p1, p2, model.rho_se0);
    const WitnessReport r = inequality_report(pair, model.sched, 0.0, 1e-5);
    std::printf("#define GOLDEN_D %.15g\n", r.d);
    std::printf("#define GOLDEN_N_FD %.15g\n", r.n_fd);
    std::printf("#define GOLDEN_N_AN %.15g\n", r.n_analytic.value());
    std::printf("#define GOLDEN_M_AN %.15g\n", r.m_analytic.value());
    std::printf("#define GOLDEN_M_FD %.15g\n", r.m_fd);
    std::printf("#define GOLDEN_C %.15g\n", r.c);
    std::printf("slack = %.15g degenerate = %d\n", r.slack.value(), int(r.degenerate));
}

}  // namespace

int main() {
    probe_goldens();
    probe_search_grid();
    return 0;
}
