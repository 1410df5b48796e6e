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

// Acceptance suite. Every inequality the library is built around is
// exercised end to end on seeded ensembles at desk scale (two qubits),
// one pass/fail line per criterion. Exit code 0 only if all pass.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qwitness/models.hpp"
#include "qwitness/random.hpp"
#include "qwitness/runner.hpp"
#include "qwitness/witness.hpp"

using namespace qwitness;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kH = 1e-5;

int g_failures = 0;

void report(const std::string& name, bool passed, const std::string& detail) {
    std::printf("%s  %s (%s)\n", passed ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!passed) ++g_failures;
}

struct Instance {
    BipartiteState rho;
    HamiltonianSchedule sched;
    PreparationProcedure p1;
    PreparationProcedure p2;
};

Instance make_instance(std::uint64_t seed, std::uint64_t index, bool correlated,
                       bool unit_norm_h = false) {
    Rng rng = sub_rng(seed, index);
    BipartiteState rho =
        correlated ? random_bipartite(2, 2, 4, rng) : random_product(2, 2, rng);
    ComplexMatrix h = random_hermitian(4, rng);
    if (unit_norm_h) {
        h /= hermitian_eigenvalues(h).cwiseAbs().maxCoeff();
    }
    PreparationProcedure p1 = PreparationProcedure::rotation(
        random_unit_axis(rng), 2 * kPi * uniform_canonical(rng));
    PreparationProcedure p2 = PreparationProcedure::rotation(
        random_unit_axis(rng), 2 * kPi * uniform_canonical(rng));
    return Instance{std::move(rho), HamiltonianSchedule::constant(2, 2, std::move(h)),
                    std::move(p1), std::move(p2)};
}

std::string margin_text(double worst) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "worst margin %.3e", worst);
    return buf;
}

// 1. Contractivity: no witness fires without initial correlations.
void criterion_contractivity() {
    double worst = 1e300;
    for (int i = 0; i < 200; ++i) {
        const Instance inst = make_instance(101, static_cast<std::uint64_t>(i), false);
        const PreparedPair pair = prepare_pair(inst.p1, inst.p2, inst.rho);
        const double n = witness_n_fd(pair, inst.sched, 0.0, kH);
        worst = std::min(worst, 1e-6 - n);
    }
    report("1. contractivity on 200 uncorrelated instances (N_fd <= 1e-6)", worst >= 0.0,
           margin_text(worst));
}

// 2. The Markovian term is never positive.
void criterion_m_negativity() {
    double worst = 1e300;
    for (int i = 0; i < 200; ++i) {
        const Instance inst =
            make_instance(202, static_cast<std::uint64_t>(i), i % 2 == 0);
        const PreparedPair pair = prepare_pair(inst.p1, inst.p2, inst.rho);
        const MarkovianTerm m = witness_m(pair, inst.sched.hamiltonian_at(0.0), kH);
        worst = std::min(worst, 1e-6 - m.fd);
        if (m.analytic) worst = std::min(worst, 1e-9 - *m.analytic);
    }
    report("2. M-negativity on 200 instances (M_an <= 1e-9, M_fd <= 1e-6)", worst >= 0.0,
           margin_text(worst));
}

// 3. N <= M + C and N <= C on correlated instances.
void criterion_main_inequality() {
    double worst = 1e300;
    int guarded = 0;
    for (int i = 0; i < 200; ++i) {
        const Instance inst = make_instance(303, static_cast<std::uint64_t>(i), true);
        const PreparedPair pair = prepare_pair(inst.p1, inst.p2, inst.rho);
        const WitnessReport r = inequality_report(pair, inst.sched, 0.0, kH);
        if (!r.slack) {
            ++guarded;
            continue;
        }
        worst = std::min(worst, *r.slack + 1e-6);
        worst = std::min(worst, r.c + 1e-6 - r.n_fd);
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "worst margin %.3e, %d guarded", worst, guarded);
    report("3. main inequality on 200 correlated instances (slack >= -1e-6, N <= C + 1e-6)",
           worst >= 0.0 && guarded == 0, detail);
}

// 4. C vanishes exactly when it must.
void criterion_c_soundness() {
    double worst = 1e300;
    for (int i = 0; i < 50; ++i) {
        // (i) uncorrelated inputs
        const Instance flat = make_instance(404, static_cast<std::uint64_t>(i), false);
        const PreparedPair flat_pair = prepare_pair(flat.p1, flat.p2, flat.rho);
        worst = std::min(worst, 1e-10 - witness_c(flat_pair, flat.sched.hamiltonian_at(0.0)));

        // (ii) identical preparations on correlated inputs
        const Instance same = make_instance(405, static_cast<std::uint64_t>(i), true);
        const PreparedPair same_pair = prepare_pair(same.p1, same.p1, same.rho);
        worst = std::min(worst, 1e-10 - witness_c(same_pair, same.sched.hamiltonian_at(0.0)));

        // (iii) uncoupled H = H_S (x) I + I (x) H_E
        Rng rng = sub_rng(406, static_cast<std::uint64_t>(i));
        const BipartiteState rho = random_bipartite(2, 2, 4, rng);
        const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);
        const ComplexMatrix h = tensor_product(random_hermitian(2, rng), eye) +
                                tensor_product(eye, random_hermitian(2, rng));
        const PreparationProcedure p1 = PreparationProcedure::rotation(
            random_unit_axis(rng), 2 * kPi * uniform_canonical(rng));
        const PreparationProcedure p2 = PreparationProcedure::rotation(
            random_unit_axis(rng), 2 * kPi * uniform_canonical(rng));
        const PreparedPair pair = prepare_pair(p1, p2, rho);
        worst = std::min(worst, 1e-10 - witness_c(pair, h));
    }
    report("4. C soundness: zero for uncorrelated / identical / uncoupled, 50 each",
           worst >= 0.0, margin_text(worst));
}

// 5. The triangle-inequality bound on the norm difference.
void criterion_triangle_bound() {
    double worst = 1e300;
    for (int i = 0; i < 200; ++i) {
        const Instance inst =
            make_instance(505, static_cast<std::uint64_t>(i), i % 2 == 0);
        const PreparedPair pair = prepare_pair(inst.p1, inst.p2, inst.rho);
        const TriangleBound bound = laine_bound_check(pair);
        worst = std::min(worst, bound.rhs + 1e-10 - bound.lhs);
        if (!bound.holds) worst = std::min(worst, -1.0);
    }
    report("5. norm-difference bound on 200 prepared pairs", worst >= 0.0,
           margin_text(worst));
}

// 6. The Bell dephasing demo fires the witness, with C positive wherever
// it does. The scan values are pinned by the closed form of this model:
// every grid point reports N_fd = sin(h)/(2h) and C = 1/2.
void criterion_detection_demo() {
    const ModelInstance bell = model_dephasing(1.0, 1.0, {0, 0, 0}, {0, 0, 0});
    const PreparationProcedure id = PreparationProcedure::identity(2);
    const PreparationProcedure xrot = PreparationProcedure::rotation({1, 0, 0}, kPi / 2);
    std::vector<double> grid(200);
    for (int i = 0; i < 200; ++i) grid[static_cast<std::size_t>(i)] = 2 * kPi * i / 199.0;
    const ScanResult scan = time_scan(bell.rho_se0, bell.sched, id, xrot, grid, kH);

    bool fired = false;
    bool contrapositive_ok = true;
    double max_n = -1e300;
    for (const WitnessReport& r : scan.reports) {
        if (r.n_fd > 1e-3) {
            fired = true;
            if (!(r.c > 0.0)) contrapositive_ok = false;
        }
        max_n = std::max(max_n, r.n_fd);
    }
    const double pinned = std::sin(kH) / (2 * kH);
    const bool values_pinned = std::abs(scan.max_n - pinned) <= 1e-9;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max N_fd %.6f, pinned %.6f, C > 0 where fired: %s",
                  max_n, pinned, contrapositive_ok ? "yes" : "no");
    report("6. detection demo: Bell dephasing scan fires with C > 0",
           fired && contrapositive_ok && values_pinned && scan.detected_nonmarkovian &&
               scan.detected_correlations,
           detail);
}

// 7. Forward differences converge to the analytic forms, monotonically
// across h = 1e-3, 1e-4, 1e-5, ending below 1e-4.
void criterion_fd_convergence() {
    bool ok = true;
    double worst_final = 0.0;
    int used = 0;
    for (int i = 0; i < 50; ++i) {
        const Instance inst =
            make_instance(707, static_cast<std::uint64_t>(i), true, /*unit_norm_h=*/true);
        const PreparedPair pair = prepare_pair(inst.p1, inst.p2, inst.rho);
        const ComplexMatrix& h0 = inst.sched.hamiltonian_at(0.0);
        const auto n_an = witness_n_analytic(pair, h0);
        if (!n_an) continue;
        ++used;
        const double c = witness_c(pair, h0);
        double prev_n = 1e300, prev_m = 1e300, prev_c = 1e300;
        for (const double h : {1e-3, 1e-4, 1e-5}) {
            const MarkovianTerm m = witness_m(pair, h0, h);
            const double err_n = std::abs(witness_n_fd(pair, inst.sched, 0.0, h) - *n_an);
            const double err_m = std::abs(m.fd - m.analytic.value());
            const double err_c = std::abs(witness_c_fd(pair, h0, h) - c);
            if (!(err_n < prev_n && err_m < prev_m && err_c < prev_c)) ok = false;
            prev_n = err_n;
            prev_m = err_m;
            prev_c = err_c;
        }
        worst_final = std::max({worst_final, prev_n, prev_m, prev_c});
    }
    if (worst_final > 1e-4) ok = false;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d guarded instances, worst error at h=1e-5: %.3e",
                  used, worst_final);
    report("7. FD/analytic convergence for N, M and C", ok && used >= 45, detail);
}

// 8. A fixed config and seed produce byte-identical CSV.
void criterion_determinism() {
    RunConfig config;
    config.model.name = "dephasing";
    config.model.g = 1.0;
    config.model.a = 0.5;
    config.model.r_system = {0.8, 0, 0.3};
    config.model.r_environment = {0, 0, 0.6};
    config.prep1.type = PreparationSpec::Type::unitary;
    config.prep1.axis = {0, 1, 0};
    config.prep1.angle = 0.6;
    config.prep2.type = PreparationSpec::Type::unitary;
    config.prep2.axis = {1, 1, 1};
    config.prep2.angle = 1.1;
    config.t_start = 0.0;
    config.t_end = 2 * kPi;
    config.n_points = 50;
    config.seed = 11;

    const auto run_once = [&](const char* name) {
        config.out = std::filesystem::temp_directory_path() / name;
        std::ostringstream err;
        const int code = cmd_scan(config, err);
        std::ifstream in(config.out, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        return std::pair<int, std::string>(code, buf.str());
    };
    const auto [code1, csv1] = run_once("qwitness_acceptance_a.csv");
    const auto [code2, csv2] = run_once("qwitness_acceptance_b.csv");
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%zu bytes, identical: %s", csv1.size(),
                  csv1 == csv2 ? "yes" : "no");
    report("8. determinism: identical config gives byte-identical CSV",
           code1 == kExitOk && code2 == kExitOk && !csv1.empty() && csv1 == csv2, detail);
}

// 9. The Choi check certifies product-state maps CP and catches the
// transpose map.
void criterion_cp_check() {
    double worst = 1e300;
    for (int i = 0; i < 100; ++i) {
        Rng rng = sub_rng(909, static_cast<std::uint64_t>(i));
        const DensityMatrix env = random_density(2, 2, rng);
        const HamiltonianSchedule sched =
            HamiltonianSchedule::constant(2, 2, random_hermitian(4, rng));
        const Propagator u = propagator(sched, 0.0, 0.2 + uniform_canonical(rng));
        const CpCheckResult res = cp_check(env, u);
        worst = std::min(worst, res.min_choi_eigenvalue + 1e-9);
        if (!res.is_cp) worst = std::min(worst, -1.0);
    }
    const auto transpose = [](const ComplexMatrix& x) { return x.transpose().eval(); };
    const CpCheckResult negative_control = cp_check_map(transpose, 2);
    char detail[96];
    std::snprintf(detail, sizeof(detail), "worst Choi margin %.3e, transpose min %.3f",
                  worst, negative_control.min_choi_eigenvalue);
    report("9. CP check: 100 product-state maps CP, transpose control <= -0.4",
           worst >= 0.0 && negative_control.min_choi_eigenvalue <= -0.4 &&
               !negative_control.is_cp,
           detail);
}

}  // namespace

int main() {
    criterion_contractivity();
    criterion_m_negativity();
    criterion_main_inequality();
    criterion_c_soundness();
    criterion_triangle_bound();
    criterion_detection_demo();
    criterion_fd_convergence();
    criterion_determinism();
    criterion_cp_check();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
