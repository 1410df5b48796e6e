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

// Validated quantum states: density matrices, bipartite system-environment
// states, and the correlation matrix chi = rho_SE - rho_S (x) rho_E.
// Validation is strict and explicit; nothing is normalized silently.

#pragma once

#include <Eigen/Dense>

#include "qwitness/matrix.hpp"

namespace qwitness {

// Hermitian, unit-trace, positive-semidefinite matrix (all up to the
// tolerances in tol::). Construction throws on violation.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return m_; }
    Index dim() const { return m_.rows(); }
    double purity() const { return (m_ * m_).trace().real(); }

private:
    ComplexMatrix m_;
};

// rho = (I + r . sigma)/2 for a Bloch vector with |r| <= 1.
DensityMatrix qubit_from_bloch(const Eigen::Vector3d& r);

// Joint SE state with recorded factor dimensions. Both reductions are
// computed at construction and validated as density matrices.
class BipartiteState {
public:
    BipartiteState(ComplexMatrix m, Index d_system, Index d_environment);

    const ComplexMatrix& matrix() const { return joint_.matrix(); }
    const DensityMatrix& joint() const { return joint_; }
    const DensityMatrix& reduced_system() const { return reduced_s_; }
    const DensityMatrix& reduced_environment() const { return reduced_e_; }
    Index d_system() const { return d_system_; }
    Index d_environment() const { return d_environment_; }
    Index dim() const { return joint_.dim(); }

private:
    static void check_dims(const ComplexMatrix& m, Index d_system, Index d_environment);

    Index d_system_;
    Index d_environment_;
    DensityMatrix joint_;
    DensityMatrix reduced_s_;
    DensityMatrix reduced_e_;
};

// Hermitian, globally traceless matrix whose partial traces over either
// factor vanish. Houses both chi (pre-preparation) and the mu_j residuals.
class CorrelationMatrix {
public:
    CorrelationMatrix(ComplexMatrix m, Index d_system, Index d_environment);

    const ComplexMatrix& matrix() const { return m_; }
    Index d_system() const { return d_system_; }
    Index d_environment() const { return d_environment_; }

private:
    Index d_system_;
    Index d_environment_;
    ComplexMatrix m_;
};

// chi = rho_SE - (Tr_E rho_SE) (x) (Tr_S rho_SE).
CorrelationMatrix correlation_matrix(const BipartiteState& rho_se);

// D = ||rho1 - rho2|| / 2, in [0, 1].
double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

}  // namespace qwitness
