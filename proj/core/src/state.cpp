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

#include "qwitness/state.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qwitness {

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw DimensionError("DensityMatrix: matrix must be square and non-empty");
    }
    const double defect = hermiticity_defect(m_);
    if (defect > tol::hermitian) {
        throw HermiticityError("DensityMatrix: Hermiticity defect " + std::to_string(defect));
    }
    const double trace_err = std::abs(m_.trace() - Complex(1.0, 0.0));
    if (trace_err > tol::trace) {
        throw NormalizationError("DensityMatrix: trace differs from 1 by " +
                                 std::to_string(trace_err));
    }
    const double min_eig = hermitian_eigenvalues(m_).minCoeff();
    if (min_eig < tol::psd) {
        throw PositivityError("DensityMatrix: minimum eigenvalue " + std::to_string(min_eig));
    }
}

DensityMatrix qubit_from_bloch(const Eigen::Vector3d& r) {
    const double norm = r.norm();
    if (norm > 1.0 + 1e-12) {
        throw BlochBallError("qubit_from_bloch: |r| = " + std::to_string(norm) + " > 1");
    }
    ComplexMatrix m = 0.5 * (ComplexMatrix::Identity(2, 2) + r.x() * sigma_x() +
                             r.y() * sigma_y() + r.z() * sigma_z());
    return DensityMatrix(std::move(m));
}

BipartiteState::BipartiteState(ComplexMatrix m, Index d_system, Index d_environment)
    : d_system_(d_system),
      d_environment_(d_environment),
      joint_((check_dims(m, d_system, d_environment), std::move(m))),
      reduced_s_(trace_out_environment(joint_.matrix(), d_system_, d_environment_)),
      reduced_e_(trace_out_system(joint_.matrix(), d_system_, d_environment_)) {}

void BipartiteState::check_dims(const ComplexMatrix& m, Index d_system, Index d_environment) {
    if (d_system <= 0 || d_environment <= 0 || m.rows() != d_system * d_environment) {
        throw DimensionError("BipartiteState: dim " + std::to_string(m.rows()) +
                             " does not factor as " + std::to_string(d_system) + "*" +
                             std::to_string(d_environment));
    }
}

CorrelationMatrix::CorrelationMatrix(ComplexMatrix m, Index d_system, Index d_environment)
    : d_system_(d_system), d_environment_(d_environment), m_(std::move(m)) {
    if (d_system_ <= 0 || d_environment_ <= 0 || m_.rows() != m_.cols() ||
        m_.rows() != d_system_ * d_environment_) {
        throw DimensionError("CorrelationMatrix: dim does not factor as dS*dE");
    }
    const double defect = hermiticity_defect(m_);
    if (defect > tol::hermitian) {
        throw HermiticityError("CorrelationMatrix: Hermiticity defect " + std::to_string(defect));
    }
    if (std::abs(m_.trace()) > tol::trace) {
        throw ValidationError("CorrelationMatrix: trace is not zero");
    }
    if (max_abs(trace_out_environment(m_, d_system_, d_environment_)) > tol::trace) {
        throw ValidationError("CorrelationMatrix: partial trace over E is not zero");
    }
    if (max_abs(trace_out_system(m_, d_system_, d_environment_)) > tol::trace) {
        throw ValidationError("CorrelationMatrix: partial trace over S is not zero");
    }
}

CorrelationMatrix correlation_matrix(const BipartiteState& rho_se) {
    ComplexMatrix chi =
        rho_se.matrix() - tensor_product(rho_se.reduced_system().matrix(),
                                         rho_se.reduced_environment().matrix());
    return CorrelationMatrix(std::move(chi), rho_se.d_system(), rho_se.d_environment());
}

double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    if (rho1.dim() != rho2.dim()) {
        throw DimensionError("trace_distance: state dimensions differ");
    }
    return 0.5 * trace_norm(rho1.matrix() - rho2.matrix());
}

}  // namespace qwitness
