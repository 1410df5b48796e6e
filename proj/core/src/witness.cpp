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

#include "qwitness/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qwitness/random.hpp"

namespace qwitness {

namespace {

// Branch difference below this is treated as "the branches coincide".
constexpr double kZeroDiff = 1e-14;

ComplexMatrix branch_difference(const PreparedPair& pair) {
    return pair.rho1_se.matrix() - pair.rho2_se.matrix();
}

ComplexMatrix reduced_difference(const PreparedPair& pair) {
    return pair.rho1_s.matrix() - pair.rho2_s.matrix();
}

// sgn(Delta_S), or nullopt when an eigenvalue sits inside the guard.
std::optional<ComplexMatrix> guarded_sign(const ComplexMatrix& delta_s) {
    const Eigen::VectorXd eigs = hermitian_eigenvalues(delta_s);
    if (eigs.cwiseAbs().minCoeff() <= tol::sgn_guard) {
        return std::nullopt;
    }
    return hermitian_sign(delta_s);
}

// (1/2) tr[sgn * Tr_E(-i [H, operand])]
double analytic_rate(const ComplexMatrix& sign, const ComplexMatrix& h_at_t,
                     const ComplexMatrix& operand, Index d_system, Index d_environment) {
    const ComplexMatrix gen = Complex(0, -1) * commutator(h_at_t, operand);
    const ComplexMatrix reduced = trace_out_environment(gen, d_system, d_environment);
    return 0.5 * (sign * reduced).trace().real();
}

void require_step(double h) {
    if (!(h > 0.0)) {
        throw ContractError("witness: finite-difference step must be positive");
    }
}

void require_hamiltonian(const PreparedPair& pair, const ComplexMatrix& h_at_t) {
    if (h_at_t.rows() != pair.rho1_se.dim() || h_at_t.cols() != pair.rho1_se.dim()) {
        throw DimensionError("witness: Hamiltonian dimension mismatch");
    }
    if (hermiticity_defect(h_at_t) > tol::hermitian) {
        throw ContractError("witness: Hamiltonian is not Hermitian");
    }
}

double n_fd_with_propagator(const PreparedPair& pair, const ComplexMatrix& u, double h) {
    const Index ds = pair.rho1_se.d_system();
    const Index de = pair.rho1_se.d_environment();
    const ComplexMatrix evolved =
        u * branch_difference(pair) * u.adjoint();
    const double d_after = 0.5 * trace_norm(hermitize(trace_out_environment(evolved, ds, de)));
    const double d_now = 0.5 * trace_norm(hermitize(reduced_difference(pair)));
    return (d_after - d_now) / h;
}

}  // namespace

double witness_n_fd(const PreparedPair& pair, const HamiltonianSchedule& sched, double t,
                    double h) {
    require_step(h);
    const Propagator prop = propagator(sched, t, t + h);
    return n_fd_with_propagator(pair, prop.u, h);
}

std::optional<double> witness_n_analytic(const PreparedPair& pair,
                                         const ComplexMatrix& h_at_t) {
    require_hamiltonian(pair, h_at_t);
    const ComplexMatrix delta_se = branch_difference(pair);
    if (max_abs(delta_se) <= kZeroDiff) {
        return 0.0;  // D(tau) vanishes identically; the derivative exists and is 0
    }
    const std::optional<ComplexMatrix> sign = guarded_sign(reduced_difference(pair));
    if (!sign) return std::nullopt;
    return analytic_rate(*sign, h_at_t, delta_se, pair.rho1_se.d_system(),
                         pair.rho1_se.d_environment());
}

MarkovianTerm witness_m(const PreparedPair& pair, const ComplexMatrix& h_at_t, double h) {
    require_step(h);
    require_hamiltonian(pair, h_at_t);
    const Index ds = pair.rho1_se.d_system();
    const Index de = pair.rho1_se.d_environment();
    const ComplexMatrix delta_s = reduced_difference(pair);
    const ComplexMatrix product_branch = tensor_product(delta_s, pair.rho_e.matrix());

    const ComplexMatrix u = expm_skew(h_at_t, h);
    const ComplexMatrix evolved = u * product_branch * u.adjoint();
    const double norm_after = trace_norm(hermitize(trace_out_environment(evolved, ds, de)));
    const double norm_now = trace_norm(hermitize(delta_s));
    MarkovianTerm out;
    out.fd = (norm_after - norm_now) / (2.0 * h);

    if (max_abs(delta_s) <= kZeroDiff) {
        out.analytic = 0.0;
    } else if (const std::optional<ComplexMatrix> sign = guarded_sign(delta_s)) {
        out.analytic = analytic_rate(*sign, h_at_t, product_branch, ds, de);
    }
    return out;
}

double witness_c(const PreparedPair& pair, const ComplexMatrix& h_at_t) {
    require_hamiltonian(pair, h_at_t);
    const ComplexMatrix delta_mu = pair.mu1.matrix() - pair.mu2.matrix();
    const ComplexMatrix gen = Complex(0, -1) * commutator(h_at_t, delta_mu);
    const ComplexMatrix reduced = trace_out_environment(gen, pair.rho1_se.d_system(),
                                                        pair.rho1_se.d_environment());
    return 0.5 * trace_norm(hermitize(reduced));
}

double witness_c_fd(const PreparedPair& pair, const ComplexMatrix& h_at_t, double h) {
    require_step(h);
    require_hamiltonian(pair, h_at_t);
    const ComplexMatrix u = expm_skew(h_at_t, h);
    const ComplexMatrix delta_mu = pair.mu1.matrix() - pair.mu2.matrix();
    const ComplexMatrix evolved = u * delta_mu * u.adjoint();
    const ComplexMatrix reduced = trace_out_environment(evolved, pair.rho1_se.d_system(),
                                                        pair.rho1_se.d_environment());
    return trace_norm(hermitize(reduced)) / (2.0 * h);
}

WitnessReport inequality_report(const PreparedPair& pair, const HamiltonianSchedule& sched,
                                double t, double h) {
    require_step(h);
    const ComplexMatrix& h_at_t = sched.hamiltonian_at(t);

    WitnessReport report;
    report.t = t;
    report.fd_step = h;
    report.d = trace_distance(pair.rho1_s, pair.rho2_s);
    report.n_fd = witness_n_fd(pair, sched, t, h);
    report.n_fd_sweep = {report.n_fd, witness_n_fd(pair, sched, t, 10.0 * h),
                         witness_n_fd(pair, sched, t, 100.0 * h)};
    report.n_analytic = witness_n_analytic(pair, h_at_t);

    const MarkovianTerm m = witness_m(pair, h_at_t, h);
    report.m_analytic = m.analytic;
    report.m_fd = m.fd;
    report.c = witness_c(pair, h_at_t);

    const bool zero_diff = max_abs(branch_difference(pair)) <= kZeroDiff;
    report.degenerate = zero_diff || !report.n_analytic.has_value();
    if (report.m_analytic) {
        report.slack = *report.m_analytic + report.c - report.n_fd;
    }
    return report;
}

TriangleBound laine_bound_check(const PreparedPair& pair) {
    const double joint_norm = trace_norm(hermitize(branch_difference(pair)));
    const double reduced_norm = trace_norm(hermitize(reduced_difference(pair)));
    const double mu_norm = trace_norm(hermitize(pair.mu1.matrix() - pair.mu2.matrix()));
    const double lhs = joint_norm - reduced_norm;
    return TriangleBound{lhs, mu_norm, lhs <= mu_norm + 1e-10};
}

ScanResult time_scan(const BipartiteState& rho_se0, const HamiltonianSchedule& sched,
                     const PreparationProcedure& p1, const PreparationProcedure& p2,
                     std::span<const double> grid, double h, double detection_threshold) {
    require_step(h);
    if (grid.empty()) {
        throw ContractError("time_scan: empty grid");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) {
            throw ContractError("time_scan: grid must be strictly increasing");
        }
    }
    if (grid.front() < 0.0) {
        throw ContractError("time_scan: grid starts before the initial time 0");
    }
    if (!sched.covers(0.0, grid.back() + 100.0 * h)) {
        throw ScheduleCoverageError("time_scan: schedule does not cover the grid");
    }

    ScanResult result;
    result.grid.assign(grid.begin(), grid.end());
    result.reports.reserve(grid.size());

    BipartiteState free_state = rho_se0;
    double t_prev = 0.0;
    for (const double t : grid) {
        if (t > t_prev) {
            free_state = evolve_total(free_state, propagator(sched, t_prev, t));
            t_prev = t;
        }
        const PreparedPair pair = prepare_pair(p1, p2, free_state);
        result.reports.push_back(inequality_report(pair, sched, t, h));
    }

    const auto max_it = std::max_element(
        result.reports.begin(), result.reports.end(),
        [](const WitnessReport& a, const WitnessReport& b) { return a.n_fd < b.n_fd; });
    result.max_n = max_it->n_fd;
    result.argmax_t = max_it->t;
    for (const WitnessReport& r : result.reports) {
        if (r.n_fd > detection_threshold) result.detected_nonmarkovian = true;
        if (r.c > detection_threshold) result.detected_correlations = true;
    }
    return result;
}

namespace {

struct RotationParams {
    // spherical axis coordinates and rotation angle per preparation
    double polar1, azimuth1, angle1;
    double polar2, azimuth2, angle2;
};

Eigen::Vector3d axis_from_spherical(double polar, double azimuth) {
    return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
            std::cos(polar)};
}

}  // namespace

SearchResult state_pair_search(const BipartiteState& rho_se0,
                               const HamiltonianSchedule& sched, double t, int budget,
                               std::uint64_t seed, double h) {
    if (budget < 1) {
        throw ContractError("state_pair_search: budget must be >= 1");
    }
    require_step(h);
    if (rho_se0.d_system() != 2) {
        throw DimensionError("state_pair_search: rotation preparations need a qubit system");
    }

    BipartiteState at_t = rho_se0;
    if (t > 0.0) {
        at_t = evolve_total(at_t, propagator(sched, 0.0, t));
    } else if (t < 0.0) {
        throw ContractError("state_pair_search: t must be >= 0");
    }
    const Propagator step = propagator(sched, t, t + h);

    int used = 0;
    const auto evaluate = [&](const RotationParams& p) {
        ++used;
        const PreparationProcedure prep1 = PreparationProcedure::rotation(
            axis_from_spherical(p.polar1, p.azimuth1), p.angle1);
        const PreparationProcedure prep2 = PreparationProcedure::rotation(
            axis_from_spherical(p.polar2, p.azimuth2), p.angle2);
        const PreparedPair pair = prepare_pair(prep1, prep2, at_t);
        return n_fd_with_propagator(pair, step.u, h);
    };

    Rng rng = sub_rng(seed, 0);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const auto sample = [&] {
        RotationParams p;
        p.polar1 = std::acos(1.0 - 2.0 * uniform_canonical(rng));
        p.azimuth1 = two_pi * uniform_canonical(rng);
        p.angle1 = two_pi * uniform_canonical(rng);
        p.polar2 = std::acos(1.0 - 2.0 * uniform_canonical(rng));
        p.azimuth2 = two_pi * uniform_canonical(rng);
        p.angle2 = two_pi * uniform_canonical(rng);
        return p;
    };

    RotationParams best = sample();
    double best_n = evaluate(best);
    const int explore = std::max(1, budget / 2);
    while (used < explore) {
        const RotationParams p = sample();
        const double n = evaluate(p);
        if (n > best_n) {
            best_n = n;
            best = p;
        }
    }

    // coordinate refinement with shrinking step
    double step_size = std::numbers::pi / 8.0;
    while (used < budget && step_size >= 1e-4) {
        bool improved = false;
        double* coords[6] = {&best.polar1, &best.azimuth1, &best.angle1,
                             &best.polar2, &best.azimuth2, &best.angle2};
        for (double* coord : coords) {
            for (const double delta : {step_size, -step_size}) {
                if (used >= budget) break;
                const double saved = *coord;
                *coord = saved + delta;
                const double n = evaluate(best);
                if (n > best_n) {
                    best_n = n;
                    improved = true;
                } else {
                    *coord = saved;
                }
            }
        }
        if (!improved) step_size *= 0.5;
    }

    return SearchResult{
        PreparationProcedure::rotation(axis_from_spherical(best.polar1, best.azimuth1),
                                       best.angle1),
        PreparationProcedure::rotation(axis_from_spherical(best.polar2, best.azimuth2),
                                       best.angle2),
        best_n, used};
}

}  // namespace qwitness
