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

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qwitness/models.hpp"
#include "qwitness/preparation.hpp"
#include "qwitness/random.hpp"
#include "test_support.hpp"

using namespace qwitness;
using test::check_matrix_near;

namespace {

PreparationProcedure random_rotation(Rng& rng) {
    return PreparationProcedure::rotation(random_unit_axis(rng),
                                          2.0 * std::numbers::pi * uniform_canonical(rng));
}

}  // namespace

TEST_SUITE("preparation") {

TEST_CASE("trace preservation is enforced at construction") {
    CHECK_NOTHROW(PreparationProcedure::unitary(sigma_x()));
    CHECK_THROWS_AS(PreparationProcedure::unitary(0.5 * sigma_x()),
                    TracePreservationError);

    // a lone projector is not trace preserving
    std::vector<ComplexMatrix> bad = {test::diag({1.0, 0.0})};
    CHECK_THROWS_AS(PreparationProcedure::kraus(bad), TracePreservationError);

    // dephasing Kraus pair is
    std::vector<ComplexMatrix> good = {test::diag({1.0, 0.0}), test::diag({0.0, 1.0})};
    CHECK_NOTHROW(PreparationProcedure::kraus(good));

    // pin to a mixed target still sums to the identity
    CHECK_NOTHROW(PreparationProcedure::pin(qubit_from_bloch({0.3, 0.1, -0.5})));
}

TEST_CASE("identity preparation leaves the state untouched") {
    Rng rng = sub_rng(51, 0);
    const BipartiteState rho = random_bipartite(2, 2, 4, rng);
    check_matrix_near(
        apply_preparation(PreparationProcedure::identity(2), rho).matrix(), rho.matrix(),
        1e-14);
}

TEST_CASE("pin factorizes any joint state") {
    Rng rng = sub_rng(52, 0);
    const BipartiteState rho = random_bipartite(2, 2, 4, rng);
    const DensityMatrix ket0 = qubit_from_bloch({0, 0, 1});
    const BipartiteState pinned =
        apply_preparation(PreparationProcedure::pin(ket0), rho);
    check_matrix_near(pinned.matrix(),
                      tensor_product(ket0.matrix(), rho.reduced_environment().matrix()),
                      1e-12);

    // mixed pin target factorizes the same way
    const DensityMatrix mixed = qubit_from_bloch({0.2, -0.3, 0.4});
    const BipartiteState pinned_mixed =
        apply_preparation(PreparationProcedure::pin(mixed), rho);
    check_matrix_near(pinned_mixed.matrix(),
                      tensor_product(mixed.matrix(), rho.reduced_environment().matrix()),
                      1e-12);
}

TEST_CASE("unitary preparation conjugates the Bell state") {
    Rng rng = sub_rng(53, 0);
    const ComplexMatrix v = expm_skew(random_hermitian(2, rng), 0.8);
    const BipartiteState bell = bell_pair();
    const ComplexMatrix lifted = tensor_product(v, ComplexMatrix::Identity(2, 2));
    check_matrix_near(
        apply_preparation(PreparationProcedure::unitary(v), bell).matrix(),
        lifted * bell.matrix() * lifted.adjoint(), 1e-13);
}

TEST_CASE("apply_preparation rejects dimension mismatches") {
    Rng rng = sub_rng(54, 0);
    const BipartiteState rho = random_bipartite(3, 2, 6, rng);
    CHECK_THROWS_AS(apply_preparation(PreparationProcedure::unitary(sigma_x()), rho),
                    DimensionError);
}

TEST_CASE("prepare_pair on an uncorrelated input gives mu1 = mu2 = 0") {
    Rng rng = sub_rng(55, 0);
    const BipartiteState product = random_product(2, 2, rng);
    const PreparedPair pair =
        prepare_pair(random_rotation(rng), random_rotation(rng), product);
    CHECK(max_abs(pair.mu1.matrix()) <= 1e-10);
    CHECK(max_abs(pair.mu2.matrix()) <= 1e-10);
}

TEST_CASE("pin preparations erase correlations even on correlated input") {
    const PreparedPair pair =
        prepare_pair(PreparationProcedure::pin(qubit_from_bloch({0, 0, 1})),
                     PreparationProcedure::pin(qubit_from_bloch({1, 0, 0})), bell_pair());
    CHECK(max_abs(pair.mu1.matrix()) <= 1e-12);
    CHECK(max_abs(pair.mu2.matrix()) <= 1e-12);
}

TEST_CASE("unitary preparations (I, sigma_x flip) on the classical mixture") {
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = rho(3, 3) = 0.5;
    const PreparedPair pair = prepare_pair(PreparationProcedure::identity(2),
                                           PreparationProcedure::unitary(sigma_x()),
                                           BipartiteState(rho, 2, 2));
    // branch 1 keeps the residual of the mixture, branch 2 is the
    // sigma_x-conjugated copy; both against the direct formula
    check_matrix_near(pair.mu1.matrix(), test::diag({0.25, -0.25, -0.25, 0.25}), 1e-14);
    check_matrix_near(pair.mu2.matrix(), test::diag({-0.25, 0.25, 0.25, -0.25}), 1e-14);
    const ComplexMatrix flip = tensor_product(sigma_x(), ComplexMatrix::Identity(2, 2));
    check_matrix_near(pair.mu2.matrix(), flip * pair.mu1.matrix() * flip, 1e-14);

    // direct formula mu_j = rho_j - rho_j_S (x) rho_E
    const ComplexMatrix direct1 =
        pair.rho1_se.matrix() -
        oracle::kron(oracle::ptrace_env(pair.rho1_se.matrix(), 2, 2),
                     oracle::ptrace_sys(pair.rho1_se.matrix(), 2, 2));
    check_matrix_near(pair.mu1.matrix(), direct1, 1e-13);
}

TEST_CASE("mu partial traces vanish for 100 random TP preparations on correlated states") {
    Rng rng = sub_rng(56, 0);
    for (int i = 0; i < 100; ++i) {
        const BipartiteState rho = random_bipartite(2, 2, 4, rng);
        const PreparedPair pair =
            prepare_pair(random_rotation(rng), random_rotation(rng), rho);
        CHECK(max_abs(oracle::ptrace_env(pair.mu1.matrix(), 2, 2)) <= 1e-10);
        CHECK(max_abs(oracle::ptrace_sys(pair.mu1.matrix(), 2, 2)) <= 1e-10);
        CHECK(max_abs(oracle::ptrace_env(pair.mu2.matrix(), 2, 2)) <= 1e-10);
        CHECK(max_abs(oracle::ptrace_sys(pair.mu2.matrix(), 2, 2)) <= 1e-10);
    }
}

TEST_CASE("the environment marginal survives any TP preparation") {
    Rng rng = sub_rng(57, 0);
    for (int i = 0; i < 100; ++i) {
        const BipartiteState rho = random_bipartite(2, 2, 4, rng);
        // mix unitaries and pins
        const PreparationProcedure prep =
            (i % 3 == 0) ? PreparationProcedure::pin(random_density(2, 2, rng))
                         : random_rotation(rng);
        const BipartiteState out = apply_preparation(prep, rho);
        check_matrix_near(out.reduced_environment().matrix(),
                          rho.reduced_environment().matrix(), 1e-10);
    }
}

TEST_CASE("unitary preparations conjugate chi into mu") {
    Rng rng = sub_rng(58, 0);
    for (int i = 0; i < 100; ++i) {
        const BipartiteState rho = random_bipartite(2, 2, 4, rng);
        const ComplexMatrix v = expm_skew(random_hermitian(2, rng), 1.3);
        const ComplexMatrix lifted = tensor_product(v, ComplexMatrix::Identity(2, 2));
        const BipartiteState out =
            apply_preparation(PreparationProcedure::unitary(v), rho);
        const ComplexMatrix chi = correlation_matrix(rho).matrix();
        check_matrix_near(correlation_matrix(out).matrix(),
                          lifted * chi * lifted.adjoint(), 1e-10);
    }
}

TEST_CASE("prepared pair reconstructs rho_j = rho_j_S (x) rho_E + mu_j") {
    Rng rng = sub_rng(59, 0);
    const BipartiteState rho = random_bipartite(2, 2, 4, rng);
    const PreparedPair pair =
        prepare_pair(random_rotation(rng), random_rotation(rng), rho);
    check_matrix_near(
        pair.rho1_se.matrix(),
        tensor_product(pair.rho1_s.matrix(), pair.rho_e.matrix()) + pair.mu1.matrix(),
        1e-10);
    check_matrix_near(
        pair.rho2_se.matrix(),
        tensor_product(pair.rho2_s.matrix(), pair.rho_e.matrix()) + pair.mu2.matrix(),
        1e-10);
}

TEST_CASE("rotation preparations remember their axis-angle parameters") {
    const PreparationProcedure prep =
        PreparationProcedure::rotation({1, 0, 0}, std::numbers::pi / 2);
    REQUIRE(prep.rotation_params().has_value());
    CHECK(prep.rotation_params()->angle == doctest::Approx(std::numbers::pi / 2));
    // the half-angle convention: rotation by pi about x is -i sigma_x
    const PreparationProcedure flip = PreparationProcedure::rotation({1, 0, 0},
                                                                     std::numbers::pi);
    check_matrix_near(flip.kraus_ops().front(), Complex(0, -1) * sigma_x(), 1e-15);
}

}  // TEST_SUITE
