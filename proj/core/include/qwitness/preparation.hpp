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

// Trace-preserving CP preparation procedures acting on the system factor
// of a joint SE state, and extraction of the post-preparation correlation
// residuals mu_j. Only trace-preserving preparations are admitted: that is
// what keeps the environment marginal preparation-independent.

#pragma once

#include <optional>
#include <vector>

#include "qwitness/state.hpp"

namespace qwitness {

struct AxisAngle {
    Eigen::Vector3d axis;  // unit vector
    double angle;
};

class PreparationProcedure {
public:
    enum class Kind { unitary, pin, kraus };

    // V . V' with V unitary on the system.
    static PreparationProcedure unitary(ComplexMatrix v);

    // Qubit rotation exp(-i angle (axis . sigma) / 2); remembers the
    // axis-angle parameters for reporting.
    static PreparationProcedure rotation(const Eigen::Vector3d& axis, double angle);

    // rho -> target tr(rho): replaces the system state outright.
    static PreparationProcedure pin(const DensityMatrix& target);

    // Explicit Kraus set {A_k}; must satisfy sum A_k' A_k = I.
    static PreparationProcedure kraus(std::vector<ComplexMatrix> ops);

    static PreparationProcedure identity(Index dim);

    Kind kind() const { return kind_; }
    Index dim() const { return ops_.front().rows(); }
    const std::vector<ComplexMatrix>& kraus_ops() const { return ops_; }
    const std::optional<AxisAngle>& rotation_params() const { return rotation_; }

private:
    PreparationProcedure(Kind kind, std::vector<ComplexMatrix> ops);

    Kind kind_;
    std::vector<ComplexMatrix> ops_;
    std::optional<AxisAngle> rotation_;
};

// (P (x) I_E)(rho_SE); leaves Tr_S unchanged.
BipartiteState apply_preparation(const PreparationProcedure& prep,
                                 const BipartiteState& rho_se);

// Both branches of a witness evaluation: the prepared states, their
// reductions, the shared environment marginal, and the residuals
// mu_j = rho_j_SE - rho_j_S (x) rho_E.
struct PreparedPair {
    BipartiteState rho1_se;
    BipartiteState rho2_se;
    CorrelationMatrix mu1;
    CorrelationMatrix mu2;
    DensityMatrix rho_e;
    DensityMatrix rho1_s;
    DensityMatrix rho2_s;
};

PreparedPair prepare_pair(const PreparationProcedure& p1, const PreparationProcedure& p2,
                          const BipartiteState& rho_se);

}  // namespace qwitness
