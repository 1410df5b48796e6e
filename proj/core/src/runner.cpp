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

#include "qwitness/runner.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <utility>

#include "qwitness/io.hpp"
#include "qwitness/random.hpp"

namespace qwitness {

namespace {

constexpr double kSlackTolerance = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

std::string fmt_optional(const std::optional<double>& v) {
    return v ? fmt(*v) : std::string("NA");
}

// One random witness evaluation setup at t = 0: joint state, constant
// coupling, two rotation preparations.
struct CheckInstance {
    BipartiteState rho_se;
    HamiltonianSchedule sched;
    PreparationProcedure p1;
    PreparationProcedure p2;
};

CheckInstance make_instance(std::uint64_t seed, std::uint64_t index, bool correlated) {
    Rng rng = sub_rng(seed, index);
    BipartiteState rho =
        correlated ? random_bipartite(2, 2, 4, rng) : random_product(2, 2, rng);
    ComplexMatrix h = random_hermitian(4, rng);
    PreparationProcedure p1 = PreparationProcedure::rotation(
        random_unit_axis(rng), 2.0 * std::numbers::pi * uniform_canonical(rng));
    PreparationProcedure p2 = PreparationProcedure::rotation(
        random_unit_axis(rng), 2.0 * std::numbers::pi * uniform_canonical(rng));
    return CheckInstance{std::move(rho), HamiltonianSchedule::constant(2, 2, std::move(h)),
                         std::move(p1), std::move(p2)};
}

PreparedPair prepared(const CheckInstance& inst, const CheckHooks& hooks) {
    PreparedPair pair = prepare_pair(inst.p1, inst.p2, inst.rho_se);
    if (hooks.mutate_pair) hooks.mutate_pair(pair);
    return pair;
}

// mu_j must rebuild the prepared state; a corrupted pair fails here.
double reconstruction_margin(const PreparedPair& pair) {
    const auto defect = [&](const BipartiteState& rho, const CorrelationMatrix& mu,
                            const DensityMatrix& rho_s) {
        return max_abs(rho.matrix() -
                       (tensor_product(rho_s.matrix(), pair.rho_e.matrix()) + mu.matrix()));
    };
    const double worst =
        std::max(defect(pair.rho1_se, pair.mu1, pair.rho1_s),
                 defect(pair.rho2_se, pair.mu2, pair.rho2_s));
    return 1e-10 - worst;
}

SuiteOutcome run_contractivity(int n, std::uint64_t seed, const CheckHooks& hooks) {
    SuiteOutcome outcome{"contractivity", n, 0, kInf};
    for (int i = 0; i < n; ++i) {
        const CheckInstance inst = make_instance(seed, static_cast<std::uint64_t>(i), false);
        const PreparedPair pair = prepared(inst, hooks);
        const double n_fd = witness_n_fd(pair, inst.sched, 0.0, kDefaultFdStep);
        const double margin = kDefaultDetectionThreshold - n_fd;
        outcome.worst_margin = std::min(outcome.worst_margin, margin);
        if (margin < 0.0) ++outcome.failed;
    }
    return outcome;
}

SuiteOutcome run_m_negativity(int n, std::uint64_t seed, const CheckHooks& hooks) {
    SuiteOutcome outcome{"m-negativity", n, 0, kInf};
    for (int i = 0; i < n; ++i) {
        const CheckInstance inst =
            make_instance(seed, static_cast<std::uint64_t>(i), i % 2 == 0);
        const PreparedPair pair = prepared(inst, hooks);
        const MarkovianTerm m =
            witness_m(pair, inst.sched.hamiltonian_at(0.0), kDefaultFdStep);
        double margin = 1e-6 - m.fd;
        if (m.analytic) margin = std::min(margin, 1e-9 - *m.analytic);
        outcome.worst_margin = std::min(outcome.worst_margin, margin);
        if (margin < 0.0) ++outcome.failed;
    }
    return outcome;
}

SuiteOutcome run_inequality(int n, std::uint64_t seed, const CheckHooks& hooks) {
    SuiteOutcome outcome{"inequality", n, 0, kInf};
    for (int i = 0; i < n; ++i) {
        const CheckInstance inst = make_instance(seed, static_cast<std::uint64_t>(i), true);
        const PreparedPair pair = prepared(inst, hooks);
        const WitnessReport report =
            inequality_report(pair, inst.sched, 0.0, kDefaultFdStep);
        double margin = reconstruction_margin(pair);
        margin = std::min(margin, report.c + kSlackTolerance - report.n_fd);
        if (report.slack) margin = std::min(margin, *report.slack + kSlackTolerance);
        outcome.worst_margin = std::min(outcome.worst_margin, margin);
        if (margin < 0.0) ++outcome.failed;
    }
    return outcome;
}

SuiteOutcome run_laine_bound(int n, std::uint64_t seed, const CheckHooks& hooks) {
    SuiteOutcome outcome{"laine-bound", n, 0, kInf};
    for (int i = 0; i < n; ++i) {
        const CheckInstance inst =
            make_instance(seed, static_cast<std::uint64_t>(i), i % 2 == 0);
        const PreparedPair pair = prepared(inst, hooks);
        const TriangleBound bound = laine_bound_check(pair);
        const double margin = bound.rhs + 1e-10 - bound.lhs;
        outcome.worst_margin = std::min(outcome.worst_margin, margin);
        if (margin < 0.0) ++outcome.failed;
    }
    return outcome;
}

}  // namespace

ModelInstance build_model(const ModelSpec& spec) {
    if (spec.name == "dephasing") {
        return model_dephasing(spec.g, spec.a, spec.r_system, spec.r_environment);
    }
    if (spec.name == "random") {
        return model_random(spec.d_system, spec.d_environment, spec.rank, spec.model_seed);
    }
    if (spec.name == "custom") {
        const MatrixFile state = load_matrix_file(spec.state_file);
        HamiltonianSchedule sched = load_hamiltonian_file(spec.hamiltonian_file);
        if (sched.d_system() != state.d_system ||
            sched.d_environment() != state.d_environment) {
            throw ConfigError("custom model: state and Hamiltonian factor dimensions differ");
        }
        ModelInstance model{"custom", state.d_system, state.d_environment,
                            BipartiteState(state.matrix, state.d_system, state.d_environment),
                            std::move(sched), {}};
        return model;
    }
    throw ConfigError("unknown model name '" + spec.name + "'");
}

PreparationProcedure build_preparation(const PreparationSpec& spec, Index d_system) {
    switch (spec.type) {
        case PreparationSpec::Type::identity:
            return PreparationProcedure::identity(d_system);
        case PreparationSpec::Type::unitary:
            if (!spec.matrix_file.empty()) {
                return PreparationProcedure::unitary(load_matrix_file(spec.matrix_file).matrix);
            }
            if (d_system != 2) {
                throw ConfigError(
                    "axis-angle preparations need a qubit system; use matrix_file");
            }
            return PreparationProcedure::rotation(spec.axis, spec.angle);
        case PreparationSpec::Type::pin:
            if (!spec.matrix_file.empty()) {
                return PreparationProcedure::pin(
                    DensityMatrix(load_matrix_file(spec.matrix_file).matrix));
            }
            if (d_system != 2) {
                throw ConfigError("Bloch pin targets need a qubit system; use matrix_file");
            }
            return PreparationProcedure::pin(qubit_from_bloch(*spec.bloch));
    }
    throw ConfigError("unhandled preparation type");
}

std::vector<double> make_grid(double t_start, double t_end, int n_points) {
    if (n_points < 1) {
        throw ContractError("make_grid: n_points must be >= 1");
    }
    std::vector<double> grid(static_cast<std::size_t>(n_points));
    if (n_points == 1) {
        grid[0] = t_start;
        return grid;
    }
    const double step = (t_end - t_start) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        grid[static_cast<std::size_t>(i)] = t_start + step * i;
    }
    return grid;
}

std::string format_csv(const ScanResult& scan) {
    std::string out = "t,D,N_fd,N_analytic,M,C,slack,degenerate\n";
    for (const WitnessReport& r : scan.reports) {
        out += fmt(r.t);
        out += ',';
        out += fmt(r.d);
        out += ',';
        out += fmt(r.n_fd);
        out += ',';
        out += fmt_optional(r.n_analytic);
        out += ',';
        out += fmt_optional(r.m_analytic);
        out += ',';
        out += fmt(r.c);
        out += ',';
        out += fmt_optional(r.slack);
        out += ',';
        out += r.degenerate ? '1' : '0';
        out += '\n';
    }
    return out;
}

int cmd_scan(const RunConfig& config, std::ostream& err) {
    try {
        const ModelInstance model = build_model(config.model);
        const PreparationProcedure p1 = build_preparation(config.prep1, model.d_system);
        const PreparationProcedure p2 = build_preparation(config.prep2, model.d_system);
        const std::vector<double> grid =
            make_grid(config.t_start, config.t_end, config.n_points);
        const ScanResult scan = time_scan(model.rho_se0, model.sched, p1, p2, grid,
                                          config.h, config.threshold);

        std::ofstream out(config.out);
        if (!out) {
            err << "cannot write '" << config.out.string() << "'\n";
            return kExitUsage;
        }
        out << format_csv(scan);

        for (const WitnessReport& r : scan.reports) {
            if (r.slack && *r.slack < -kSlackTolerance) {
                err << "inequality violated at t = " << r.t << " (slack " << *r.slack
                    << ")\n";
                return kExitViolation;
            }
        }
        return kExitOk;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
}

std::vector<SuiteOutcome> run_check_suite(const std::string& suite, int n,
                                          std::uint64_t seed, const CheckHooks& hooks) {
    std::vector<SuiteOutcome> outcomes;
    if (suite == "contractivity" || suite == "all") {
        outcomes.push_back(run_contractivity(n, seed, hooks));
    }
    if (suite == "m-negativity" || suite == "all") {
        outcomes.push_back(run_m_negativity(n, seed, hooks));
    }
    if (suite == "inequality" || suite == "all") {
        outcomes.push_back(run_inequality(n, seed, hooks));
    }
    if (suite == "laine-bound" || suite == "all") {
        outcomes.push_back(run_laine_bound(n, seed, hooks));
    }
    if (outcomes.empty()) {
        throw ConfigError("unknown suite '" + suite +
                          "'; expected contractivity, m-negativity, inequality, "
                          "laine-bound or all");
    }
    return outcomes;
}

int cmd_check(const std::string& suite, int n, std::uint64_t seed, std::ostream& out,
              std::ostream& err, const CheckHooks& hooks) {
    if (n < 0) {
        err << "instance count must be >= 0\n";
        return kExitUsage;
    }
    std::vector<SuiteOutcome> outcomes;
    try {
        outcomes = run_check_suite(suite, n, seed, hooks);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    bool all_passed = true;
    for (const SuiteOutcome& o : outcomes) {
        out << o.name << ": " << (o.total - o.failed) << "/" << o.total << " passed";
        if (o.total > 0) {
            out << ", worst margin " << fmt(o.worst_margin);
        }
        out << "\n";
        if (o.failed > 0) all_passed = false;
    }
    return all_passed ? kExitOk : kExitViolation;
}

int cmd_search(const RunConfig& config, int budget, std::ostream& out, std::ostream& err) {
    if (budget < 1) {
        err << "budget must be >= 1\n";
        return kExitUsage;
    }
    try {
        const ModelInstance model = build_model(config.model);
        const double t = config.t_start;
        const SearchResult result = state_pair_search(model.rho_se0, model.sched, t, budget,
                                                      config.seed, config.h);

        // C for the winning pair at the same t
        BipartiteState at_t = model.rho_se0;
        if (t > 0.0) {
            at_t = evolve_total(at_t, propagator(model.sched, 0.0, t));
        }
        const PreparedPair pair = prepare_pair(result.best_p1, result.best_p2, at_t);
        const double c = witness_c(pair, model.sched.hamiltonian_at(t));

        const auto print_prep = [&](const char* label, const PreparationProcedure& p) {
            const AxisAngle& aa = *p.rotation_params();
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%s axis (%.12g, %.12g, %.12g) angle %.12g\n",
                          label, aa.axis.x(), aa.axis.y(), aa.axis.z(), aa.angle);
            out << buf;
        };
        out << "t = " << fmt(t) << "\n";
        print_prep("P1:", result.best_p1);
        print_prep("P2:", result.best_p2);
        out << "best_N = " << fmt(result.best_n) << "\n";
        out << "C = " << fmt(c) << "\n";
        out << "evaluations = " << result.evaluations << "\n";
        return kExitOk;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qwitness
