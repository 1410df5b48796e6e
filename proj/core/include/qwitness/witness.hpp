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

// Contractivity-based witnesses on a prepared pair of SE states:
//
//   N  — growth rate of the trace distance between the reduced branches;
//        positive N certifies a non-Markovian (non-contractive) step.
//   M  — the same rate for the product-state branches
//        Tr_E[U (Delta_S (x) rho_E) U']; never positive.
//   C  — (1/2) || Tr_E[-i [H, mu_1 - mu_2]] ||; positive C certifies
//        system-environment correlations at the preparation time.
//
// The three are tied together by N <= M + C, hence N <= C.
//
// N and M come in a forward finite-difference form and an analytic form
// (1/2) tr[sgn(Delta_S) * Tr_E(-i [H, .])]. The analytic form needs the
// matrix sign of Delta_S = rho1_S - rho2_S and is withheld (reported
// degenerate) when Delta_S has an eigenvalue within tol::sgn_guard of
// zero; it is the exact 0 when the branches coincide entirely.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qwitness/dynamics.hpp"
#include "qwitness/preparation.hpp"

namespace qwitness {

// Forward-difference step used when none is configured.
inline constexpr double kDefaultFdStep = 1e-5;
// Detection threshold separating numerical zero from signal.
inline constexpr double kDefaultDetectionThreshold = 1e-6;

struct WitnessReport {
    double t = 0.0;
    double d = 0.0;     // trace distance of the prepared reductions at t
    double n_fd = 0.0;  // forward difference at fd_step
    std::optional<double> n_analytic;
    std::optional<double> m_analytic;
    double m_fd = 0.0;
    double c = 0.0;
    std::optional<double> slack;  // m_analytic + c - n_fd, when defined
    bool degenerate = false;
    double fd_step = kDefaultFdStep;
    // n_fd evaluated at {fd_step, 10 fd_step, 100 fd_step} for convergence
    // diagnostics.
    std::array<double, 3> n_fd_sweep{0.0, 0.0, 0.0};
};

struct ScanResult {
    std::vector<double> grid;
    std::vector<WitnessReport> reports;
    double max_n = 0.0;
    double argmax_t = 0.0;
    bool detected_nonmarkovian = false;
    bool detected_correlations = false;
};

// [D(t + h) - D(t)] / h along the true SE evolution of both branches.
double witness_n_fd(const PreparedPair& pair, const HamiltonianSchedule& sched, double t,
                    double h);

// Exact one-sided derivative of D; nullopt when the sign guard fails.
std::optional<double> witness_n_analytic(const PreparedPair& pair,
                                         const ComplexMatrix& h_at_t);

struct MarkovianTerm {
    std::optional<double> analytic;  // <= 0 whenever defined
    double fd;                       // <= 0 up to finite-difference noise
};

MarkovianTerm witness_m(const PreparedPair& pair, const ComplexMatrix& h_at_t, double h);

// C of the closed commutator form; always >= 0.
double witness_c(const PreparedPair& pair, const ComplexMatrix& h_at_t);

// Finite-difference counterpart || Tr_E[U (mu1 - mu2) U'] || / (2h);
// converges to witness_c as h -> 0.
double witness_c_fd(const PreparedPair& pair, const ComplexMatrix& h_at_t, double h);

// All witness quantities at one time, with the inequality slack.
WitnessReport inequality_report(const PreparedPair& pair, const HamiltonianSchedule& sched,
                                double t, double h);

// ||rho1_SE - rho2_SE|| - ||rho1_S - rho2_S|| <= ||mu1 - mu2||.
struct TriangleBound {
    double lhs;
    double rhs;
    bool holds;
};

TriangleBound laine_bound_check(const PreparedPair& pair);

// Strong witness on a finite grid: at each grid time the pair is prepared
// from the freely evolved joint state, then measured over [t, t + h].
// Grid must be strictly increasing and start at or after 0 (the initial
// state is defined at time 0).
ScanResult time_scan(const BipartiteState& rho_se0, const HamiltonianSchedule& sched,
                     const PreparationProcedure& p1, const PreparationProcedure& p2,
                     std::span<const double> grid, double h = kDefaultFdStep,
                     double detection_threshold = kDefaultDetectionThreshold);

struct SearchResult {
    PreparationProcedure best_p1;
    PreparationProcedure best_p2;
    double best_n;
    int evaluations;
};

// Seeded maximization of N over pairs of qubit rotation preparations:
// random axis-angle exploration for half the budget, then coordinate
// refinement with a shrinking step. Deterministic for a fixed seed; ties
// keep the first find.
SearchResult state_pair_search(const BipartiteState& rho_se0,
                               const HamiltonianSchedule& sched, double t, int budget,
                               std::uint64_t seed, double h = kDefaultFdStep);

}  // namespace qwitness
