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

// Joint system-environment evolution: piecewise-constant Hamiltonian
// schedules, time-ordered propagators, the reduced dynamical map
// rho_S -> Tr_E[U (rho_S (x) rho_E) U'], reduced-state derivatives, and a
// Choi-matrix complete-positivity check.

#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "qwitness/state.hpp"

namespace qwitness {

// Steps per schedule segment in the midpoint time-ordering product.
inline constexpr int kDefaultPropagatorSteps = 200;

struct ScheduleSegment {
    double t_start;
    double t_end;
    ComplexMatrix hamiltonian;  // Hermitian, dim dS*dE, units hbar = 1
};

// Ordered, contiguous, non-overlapping segments of constant H(t). A single
// segment spanning (-inf, inf) represents a constant Hamiltonian.
class HamiltonianSchedule {
public:
    HamiltonianSchedule(Index d_system, Index d_environment,
                        std::vector<ScheduleSegment> segments);

    static HamiltonianSchedule constant(Index d_system, Index d_environment,
                                        ComplexMatrix hamiltonian);

    // H at time t; the segment owning t, half-open on the right except for
    // the final segment. Throws ScheduleCoverageError outside the span.
    const ComplexMatrix& hamiltonian_at(double t) const;

    bool covers(double t0, double t1) const;

    Index d_system() const { return d_system_; }
    Index d_environment() const { return d_environment_; }
    Index dim() const { return d_system_ * d_environment_; }
    const std::vector<ScheduleSegment>& segments() const { return segments_; }

private:
    Index d_system_;
    Index d_environment_;
    std::vector<ScheduleSegment> segments_;
};

// U_{t,tau} with its interval; unitary within tol::unitary by construction.
struct Propagator {
    double t;
    double tau;
    ComplexMatrix u;
};

// Time-ordered propagator over [t, tau] as a midpoint piecewise-constant
// product, later factors multiplying from the left. n_steps applies per
// schedule segment intersected with [t, tau].
Propagator propagator(const HamiltonianSchedule& sched, double t, double tau,
                      int n_steps = kDefaultPropagatorSteps);

// U rho_SE U'.
BipartiteState evolve_total(const BipartiteState& rho_se, const Propagator& prop);

// B(rho_S) = Tr_E[U (rho_S (x) rho_E) U'].
DensityMatrix dynamical_map(const DensityMatrix& rho_s, const DensityMatrix& rho_e,
                            const Propagator& prop);

// Exact derivative of the reduced state, Tr_E(-i [H, rho_SE]); Hermitian
// and traceless.
ComplexMatrix reduced_derivative(const BipartiteState& rho_se, const ComplexMatrix& hamiltonian);

// Action of any linear map on one half of a maximally entangled pair,
// normalized to unit trace. `apply` maps dim_in x dim_in matrices.
ComplexMatrix choi_matrix(const std::function<ComplexMatrix(const ComplexMatrix&)>& apply,
                          Index dim_in);

struct CpCheckResult {
    double min_choi_eigenvalue;
    bool is_cp;  // min eigenvalue >= tol::choi
};

CpCheckResult cp_check_map(const std::function<ComplexMatrix(const ComplexMatrix&)>& apply,
                           Index dim_in);

// CP certificate for the reduced map built from the product state
// rho_S (x) rho_E and the given propagator; always CP by construction.
CpCheckResult cp_check(const DensityMatrix& rho_e, const Propagator& prop);

}  // namespace qwitness
