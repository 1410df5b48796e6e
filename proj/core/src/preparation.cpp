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

#include "qwitness/preparation.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qwitness {

PreparationProcedure::PreparationProcedure(Kind kind, std::vector<ComplexMatrix> ops)
    : kind_(kind), ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw ValidationError("PreparationProcedure: empty Kraus set");
    }
    const Index d = ops_.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const ComplexMatrix& op : ops_) {
        if (op.rows() != d || op.cols() != d) {
            throw DimensionError("PreparationProcedure: Kraus operators must share dimensions");
        }
        sum += op.adjoint() * op;
    }
    const double defect = max_abs(sum - ComplexMatrix::Identity(d, d));
    if (defect > tol::hermitian) {
        throw TracePreservationError(
            "PreparationProcedure: sum A_k' A_k deviates from identity by " +
            std::to_string(defect));
    }
}

PreparationProcedure PreparationProcedure::unitary(ComplexMatrix v) {
    std::vector<ComplexMatrix> ops;
    ops.push_back(std::move(v));
    return PreparationProcedure(Kind::unitary, std::move(ops));
}

PreparationProcedure PreparationProcedure::rotation(const Eigen::Vector3d& axis, double angle) {
    const double norm = axis.norm();
    if (norm < 1e-12) {
        throw ValidationError("PreparationProcedure::rotation: zero axis");
    }
    const Eigen::Vector3d n = axis / norm;
    const ComplexMatrix gen = n.x() * sigma_x() + n.y() * sigma_y() + n.z() * sigma_z();
    ComplexMatrix v = std::cos(angle / 2) * ComplexMatrix::Identity(2, 2) -
                      Complex(0, 1) * std::sin(angle / 2) * gen;
    PreparationProcedure prep = unitary(std::move(v));
    prep.rotation_ = AxisAngle{n, angle};
    return prep;
}

PreparationProcedure PreparationProcedure::pin(const DensityMatrix& target) {
    // spectral Kraus set A_{k,l} = sqrt(w_k) |v_k><l|
    const Index d = target.dim();
    const EigResult eig = hermitian_eig(target.matrix());
    std::vector<ComplexMatrix> ops;
    for (Index k = 0; k < d; ++k) {
        const double w = eig.values(k);
        if (w <= 1e-14) continue;  // skip the kernel of the target
        for (Index l = 0; l < d; ++l) {
            ComplexMatrix op = ComplexMatrix::Zero(d, d);
            op.col(l) = std::sqrt(w) * eig.vectors.col(k);
            ops.push_back(std::move(op));
        }
    }
    return PreparationProcedure(Kind::pin, std::move(ops));
}

PreparationProcedure PreparationProcedure::kraus(std::vector<ComplexMatrix> ops) {
    return PreparationProcedure(Kind::kraus, std::move(ops));
}

PreparationProcedure PreparationProcedure::identity(Index dim) {
    return unitary(ComplexMatrix::Identity(dim, dim));
}

BipartiteState apply_preparation(const PreparationProcedure& prep,
                                 const BipartiteState& rho_se) {
    if (prep.dim() != rho_se.d_system()) {
        throw DimensionError("apply_preparation: preparation acts on dim " +
                             std::to_string(prep.dim()) + ", system has dim " +
                             std::to_string(rho_se.d_system()));
    }
    const ComplexMatrix eye_e =
        ComplexMatrix::Identity(rho_se.d_environment(), rho_se.d_environment());
    ComplexMatrix out = ComplexMatrix::Zero(rho_se.dim(), rho_se.dim());
    for (const ComplexMatrix& op : prep.kraus_ops()) {
        const ComplexMatrix lifted = tensor_product(op, eye_e);
        out += lifted * rho_se.matrix() * lifted.adjoint();
    }
    return BipartiteState(hermitize(out), rho_se.d_system(), rho_se.d_environment());
}

PreparedPair prepare_pair(const PreparationProcedure& p1, const PreparationProcedure& p2,
                          const BipartiteState& rho_se) {
    BipartiteState rho1 = apply_preparation(p1, rho_se);
    BipartiteState rho2 = apply_preparation(p2, rho_se);

    // TP preparations cannot move the environment marginal; enforce it.
    const double marginal_gap = max_abs(rho1.reduced_environment().matrix() -
                                        rho2.reduced_environment().matrix());
    if (marginal_gap > 1e-9) {
        throw ContractError("prepare_pair: environment marginals differ by " +
                            std::to_string(marginal_gap));
    }

    // mu_j from the prepared state's own marginals
    const auto mu_of = [](const BipartiteState& rho) {
        return correlation_matrix(rho);
    };
    CorrelationMatrix mu1 = mu_of(rho1);
    CorrelationMatrix mu2 = mu_of(rho2);

    DensityMatrix rho_e = rho1.reduced_environment();
    DensityMatrix rho1_s = rho1.reduced_system();
    DensityMatrix rho2_s = rho2.reduced_system();
    return PreparedPair{std::move(rho1), std::move(rho2), std::move(mu1), std::move(mu2),
                        std::move(rho_e), std::move(rho1_s), std::move(rho2_s)};
}

}  // namespace qwitness
