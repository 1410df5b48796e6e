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

#include "qwitness/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace qwitness {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_unitary(const ComplexMatrix& u, const char* who) {
    const double defect =
        max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
    if (defect > tol::unitary) {
        throw ContractError(std::string(who) + ": matrix is not unitary (defect " +
                            std::to_string(defect) + ")");
    }
}

// Tr_E[U X U'] for a raw (not necessarily positive) system-only operand
// embedded as X (x) rho_E. Shared by dynamical_map and the Choi builder.
ComplexMatrix reduced_map_apply(const ComplexMatrix& x, const ComplexMatrix& rho_e,
                                const ComplexMatrix& u) {
    const Index d_system = x.rows();
    const Index d_environment = rho_e.rows();
    const ComplexMatrix joint = u * tensor_product(x, rho_e) * u.adjoint();
    return trace_out_environment(joint, d_system, d_environment);
}

}  // namespace

HamiltonianSchedule::HamiltonianSchedule(Index d_system, Index d_environment,
                                         std::vector<ScheduleSegment> segments)
    : d_system_(d_system), d_environment_(d_environment), segments_(std::move(segments)) {
    if (d_system_ <= 0 || d_environment_ <= 0) {
        throw DimensionError("HamiltonianSchedule: factor dimensions must be positive");
    }
    if (segments_.empty()) {
        throw ValidationError("HamiltonianSchedule: at least one segment required");
    }
    const Index d = dim();
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const ScheduleSegment& seg = segments_[i];
        if (seg.hamiltonian.rows() != d || seg.hamiltonian.cols() != d) {
            throw DimensionError("HamiltonianSchedule: segment " + std::to_string(i) +
                                 " Hamiltonian has wrong dimension");
        }
        const double defect = hermiticity_defect(seg.hamiltonian);
        if (defect > tol::hermitian) {
            throw HermiticityError("HamiltonianSchedule: segment " + std::to_string(i) +
                                   " Hamiltonian defect " + std::to_string(defect));
        }
        if (!(seg.t_start < seg.t_end)) {
            throw ValidationError("HamiltonianSchedule: segment " + std::to_string(i) +
                                  " span is empty");
        }
        if (i > 0 && segments_[i - 1].t_end != seg.t_start) {
            throw ValidationError("HamiltonianSchedule: segments " + std::to_string(i - 1) +
                                  " and " + std::to_string(i) + " are not contiguous");
        }
    }
}

HamiltonianSchedule HamiltonianSchedule::constant(Index d_system, Index d_environment,
                                                  ComplexMatrix hamiltonian) {
    std::vector<ScheduleSegment> segs;
    segs.push_back(ScheduleSegment{-kInf, kInf, std::move(hamiltonian)});
    return HamiltonianSchedule(d_system, d_environment, std::move(segs));
}

const ComplexMatrix& HamiltonianSchedule::hamiltonian_at(double t) const {
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const ScheduleSegment& seg = segments_[i];
        const bool last = (i + 1 == segments_.size());
        if (t >= seg.t_start && (t < seg.t_end || (last && t <= seg.t_end))) {
            return seg.hamiltonian;
        }
    }
    throw ScheduleCoverageError("HamiltonianSchedule: time " + std::to_string(t) +
                                " is outside the schedule span");
}

bool HamiltonianSchedule::covers(double t0, double t1) const {
    return t0 >= segments_.front().t_start && t1 <= segments_.back().t_end;
}

Propagator propagator(const HamiltonianSchedule& sched, double t, double tau, int n_steps) {
    if (!(t <= tau)) {
        throw ContractError("propagator: requires t <= tau");
    }
    if (n_steps < 1) {
        throw ContractError("propagator: n_steps must be >= 1");
    }
    if (!sched.covers(t, tau)) {
        throw ScheduleCoverageError("propagator: [" + std::to_string(t) + ", " +
                                    std::to_string(tau) + "] is not covered by the schedule");
    }
    const Index d = sched.dim();
    ComplexMatrix u = ComplexMatrix::Identity(d, d);
    if (tau == t) {
        return Propagator{t, tau, std::move(u)};
    }
    for (const ScheduleSegment& seg : sched.segments()) {
        const double lo = std::max(t, seg.t_start);
        const double hi = std::min(tau, seg.t_end);
        if (!(lo < hi)) continue;
        // H is constant on the piece, so every midpoint factor is the same
        // exponential; apply it n_steps times.
        const ComplexMatrix step = expm_skew(seg.hamiltonian, (hi - lo) / n_steps);
        for (int k = 0; k < n_steps; ++k) {
            u = step * u;
        }
    }
    require_unitary(u, "propagator");
    return Propagator{t, tau, std::move(u)};
}

BipartiteState evolve_total(const BipartiteState& rho_se, const Propagator& prop) {
    if (prop.u.rows() != rho_se.dim()) {
        throw DimensionError("evolve_total: propagator and state dimensions differ");
    }
    ComplexMatrix evolved = prop.u * rho_se.matrix() * prop.u.adjoint();
    // conjugation keeps Hermiticity exactly only in exact arithmetic
    evolved = hermitize(evolved);
    return BipartiteState(std::move(evolved), rho_se.d_system(), rho_se.d_environment());
}

DensityMatrix dynamical_map(const DensityMatrix& rho_s, const DensityMatrix& rho_e,
                            const Propagator& prop) {
    if (prop.u.rows() != rho_s.dim() * rho_e.dim()) {
        throw DimensionError("dynamical_map: propagator dimension is not dS*dE");
    }
    ComplexMatrix out = reduced_map_apply(rho_s.matrix(), rho_e.matrix(), prop.u);
    return DensityMatrix(hermitize(out));
}

ComplexMatrix reduced_derivative(const BipartiteState& rho_se,
                                 const ComplexMatrix& hamiltonian) {
    if (hamiltonian.rows() != rho_se.dim() || hamiltonian.cols() != rho_se.dim()) {
        throw DimensionError("reduced_derivative: Hamiltonian dimension mismatch");
    }
    if (hermiticity_defect(hamiltonian) > tol::hermitian) {
        throw ContractError("reduced_derivative: Hamiltonian is not Hermitian");
    }
    const ComplexMatrix gen =
        Complex(0, -1) * commutator(hamiltonian, rho_se.matrix());
    return trace_out_environment(gen, rho_se.d_system(), rho_se.d_environment());
}

ComplexMatrix choi_matrix(const std::function<ComplexMatrix(const ComplexMatrix&)>& apply,
                          Index dim_in) {
    if (dim_in <= 0) {
        throw DimensionError("choi_matrix: input dimension must be positive");
    }
    Index dim_out = 0;
    std::vector<std::vector<ComplexMatrix>> blocks(static_cast<std::size_t>(dim_in));
    for (Index i = 0; i < dim_in; ++i) {
        blocks[i].resize(static_cast<std::size_t>(dim_in));
        for (Index j = 0; j < dim_in; ++j) {
            ComplexMatrix basis = ComplexMatrix::Zero(dim_in, dim_in);
            basis(i, j) = 1.0;
            blocks[i][j] = apply(basis);
            if (dim_out == 0) dim_out = blocks[i][j].rows();
        }
    }
    ComplexMatrix choi(dim_out * dim_in, dim_out * dim_in);
    for (Index i = 0; i < dim_in; ++i) {
        for (Index j = 0; j < dim_in; ++j) {
            // block layout: map output factor first, ancilla second
            for (Index a = 0; a < dim_out; ++a) {
                for (Index b = 0; b < dim_out; ++b) {
                    choi(a * dim_in + i, b * dim_in + j) = blocks[i][j](a, b);
                }
            }
        }
    }
    choi /= static_cast<double>(dim_in);
    return choi;
}

CpCheckResult cp_check_map(const std::function<ComplexMatrix(const ComplexMatrix&)>& apply,
                           Index dim_in) {
    ComplexMatrix choi = choi_matrix(apply, dim_in);
    const double trace_err = std::abs(choi.trace() - Complex(1.0, 0.0));
    if (trace_err > 1e-8) {
        throw ContractError("cp_check_map: map is not trace preserving (Choi trace off by " +
                            std::to_string(trace_err) + ")");
    }
    const double min_eig = hermitian_eigenvalues(hermitize(choi)).minCoeff();
    return CpCheckResult{min_eig, min_eig >= tol::choi};
}

CpCheckResult cp_check(const DensityMatrix& rho_e, const Propagator& prop) {
    if (prop.u.rows() % rho_e.dim() != 0) {
        throw DimensionError("cp_check: propagator dimension is not a multiple of dim(rho_E)");
    }
    const Index d_system = prop.u.rows() / rho_e.dim();
    const auto map = [&](const ComplexMatrix& x) {
        return reduced_map_apply(x, rho_e.matrix(), prop.u);
    };
    return cp_check_map(map, d_system);
}

}  // namespace qwitness
