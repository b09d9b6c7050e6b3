// Copyright 2026 The Bellkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "bellkit/classical.h"
#include "bellkit/error.h"
#include "bellkit/expectations.h"
#include "bellkit/inequalities.h"
#include "bellkit/io.h"
#include "bellkit/measurements.h"
#include "bellkit/states.h"
#include "bellkit/sweep.h"

namespace bellkit::cli {

namespace {

using io::Json;

struct GlobalOptions {
    double tol = kInequalityTol;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::string out_path;
    unsigned threads = 1;
};

void emit(const GlobalOptions &g, const std::string &text, std::ostream &out) {
    if (g.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) {
        throw Error(ErrorCode::InvalidConfig, "cannot write " + g.out_path);
    }
    f << text;
}

std::string fx(double v) {
    return io::format_fixed(v);
}

// ---------------------------------------------------------------- demo

int cmd_demo(std::ostream &out, std::ostream &err) {
    constexpr double kTol = 1e-9;
    const double ta = 0.0;
    const double tb = std::numbers::pi / 6;
    const double tc = std::numbers::pi / 3;
    const double td = std::numbers::pi / 2;
    const DensityOperator rho = rho_zero();
    const DiscretePovm a = spin_observable(ta);
    const DiscretePovm b = spin_observable(tb);
    const DiscretePovm c = spin_observable(tc);
    const DiscretePovm d = spin_observable(td);

    std::vector<std::string> mismatches;
    auto expect = [&](const std::string &what, double got, double want) {
        if (std::abs(got - want) > kTol) {
            mismatches.push_back(what + " = " + fx(got) + ", expected " + fx(want));
        }
    };

    out << "separable state rho0 = (|up><up| x |down><down| + |down><down| x |up><up|) / 2\n";
    out << "spin settings: theta_a=0 theta_b=pi/6 theta_c=pi/3 theta_d=pi/2\n";

    struct Pair {
        const char *name;
        const DiscretePovm *p1;
        const DiscretePovm *p2;
        double t1;
        double t2;
    };
    const Pair pairs[] = {{"E(a,b)", &a, &b, ta, tb}, {"E(a,c)", &a, &c, ta, tc}, {"E(b,c)", &b, &c, tb, tc}};
    std::vector<CorrelationRecord> plain;
    for (const Pair &p : pairs) {
        const double closed = -std::cos(2 * p.t1) * std::cos(2 * p.t2);
        const CorrelationRecord e = correlation(rho, *p.p1, *p.p2, false, "rho0");
        const CorrelationRecord es = correlation(rho, *p.p1, *p.p2, true, "rho0");
        out << p.name << ": closed_form=" << fx(closed) << " trace=" << fx(e.value) << " trace_sym=" << fx(es.value)
            << "\n";
        expect(std::string(p.name) + " trace", e.value, closed);
        expect(std::string(p.name) + " trace_sym", es.value, closed);
        plain.push_back(e);
    }

    const InequalityReport bell = bell_original(plain[0], plain[1], plain[2], 1.0, 1.0, kTol);
    out << "bell_original: lhs=" << fx(bell.lhs) << " rhs=" << fx(bell.rhs) << " "
        << (bell.violated ? "VIOLATED" : "holds") << "\n";
    expect("bell_original lhs", bell.lhs, 1.0);
    expect("bell_original rhs", bell.rhs, 0.75);
    if (!bell.violated) {
        mismatches.push_back("bell_original should be violated");
    }

    const InequalityReport chsh = chsh_report(correlation(rho, a, b, false, "rho0"), correlation(rho, c, b, false, "rho0"),
                                              correlation(rho, c, d, false, "rho0"),
                                              correlation(rho, a, d, false, "rho0"), kTol);
    out << "chsh: lhs=" << fx(chsh.lhs) << " rhs=" << fx(chsh.rhs) << " " << (chsh.violated ? "VIOLATED" : "holds")
        << "\n";
    expect("chsh lhs", chsh.lhs, 1.75);
    if (chsh.violated) {
        mismatches.push_back("chsh should hold");
    }

    const InequalityReport analogue = quantum_bell_analogue(rho_zero_representation(true), a, b, c, kTol);
    out << "quantum_analogue: lhs=" << fx(analogue.lhs) << " rhs=" << fx(analogue.rhs) << " "
        << (analogue.violated ? "VIOLATED" : "holds") << "\n";
    expect("quantum_analogue lhs", analogue.lhs, 1.0);
    expect("quantum_analogue rhs", analogue.rhs, 1.25);
    if (analogue.violated) {
        mismatches.push_back("quantum_analogue should hold");
    }

    if (!mismatches.empty()) {
        for (const auto &m : mismatches) {
            err << "mismatch: " << m << "\n";
        }
        return kInputError;
    }
    out << "demo: all values match\n";
    return kHolds;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
    std::string state_file;
    std::vector<std::string> povm_files;
    std::string inequality;
    std::vector<double> gamma;
    std::vector<std::string> extra_reps;
    bool symmetrized = false;
};

int finish_report(const GlobalOptions &g, const InequalityReport &r, std::ostream &out) {
    emit(g, g.format == "csv" ? io::report_to_csv(r) : io::dump_fixed(io::report_to_json(r)), out);
    return r.violated ? kViolated : kHolds;
}

int cmd_check(const GlobalOptions &g, const CheckArgs &args, std::ostream &out) {
    const Json state_json = io::read_file(args.state_file);
    std::optional<SeparableRepresentation> rep;
    std::optional<DensityOperator> rho;
    const std::string kind = state_json.is_object() && state_json.contains("kind") && state_json["kind"].is_string()
                                 ? state_json["kind"].get<std::string>()
                                 : "";
    if (kind == "separable_representation") {
        rep = io::representation_from_json(state_json, args.state_file);
        rho = assemble(*rep);
    } else {
        rho = io::density_from_json(state_json, args.state_file);
    }

    std::vector<DiscretePovm> p;
    for (std::size_t i = 0; i < args.povm_files.size(); ++i) {
        p.push_back(io::povm_from_json(io::read_file(args.povm_files[i]), args.povm_files[i]));
    }
    auto need = [&](std::size_t n) {
        if (p.size() != n) {
            throw Error(ErrorCode::InvalidConfig, args.inequality + " needs " + std::to_string(n) + " POVM files, got " +
                                                      std::to_string(p.size()));
        }
    };
    auto need_rep = [&]() -> const SeparableRepresentation & {
        if (!rep) {
            throw Error(ErrorCode::InvalidConfig, args.inequality + " needs a separable_representation state file");
        }
        return *rep;
    };
    const bool sym = args.symmetrized || (rep && rep->symmetrized());
    auto corr = [&](std::size_t i, std::size_t j) { return correlation(*rho, p[i], p[j], sym, "rho"); };

    const std::string &name = args.inequality;
    if (name == "bell-original") {
        need(3);
        return finish_report(
            g, bell_original(corr(0, 1), corr(0, 2), corr(1, 2), p[0].bound(), std::max(p[1].bound(), p[2].bound()), g.tol),
            out);
    }
    if (name == "chsh" || name == "extended-chsh") {
        need(4);
        const double c1 = std::max(p[0].bound(), p[2].bound());
        const double c2 = std::max(p[1].bound(), p[3].bound());
        // POVM order a, b, c, d.
        if (name == "chsh") {
            return finish_report(g, chsh_report(corr(0, 1), corr(2, 1), corr(2, 3), corr(0, 3), g.tol, c1, c2), out);
        }
        if (args.gamma.size() != 4) {
            throw Error(ErrorCode::InvalidConfig, "extended-chsh needs --gamma with four values");
        }
        const GammaVector gv = GammaVector::make({args.gamma[0], args.gamma[1], args.gamma[2], args.gamma[3]});
        return finish_report(g, extended_chsh(gv, corr(0, 1), corr(2, 1), corr(2, 3), corr(0, 3), c1, c2, g.tol), out);
    }
    if (name == "separable-bound") {
        need(3);
        return finish_report(g, separable_bound(need_rep(), p[0], p[1], p[2], g.tol), out);
    }
    if (name == "separable-bound-inf") {
        need(3);
        std::vector<SeparableRepresentation> reps{need_rep()};
        for (const std::string &f : args.extra_reps) {
            reps.push_back(io::representation_from_json(io::read_file(f), f));
        }
        return finish_report(g, separable_bound_inf(reps, p[0], p[1], p[2], g.tol), out);
    }
    if (name == "two-term") {
        need(3);
        if (args.gamma.size() != 2) {
            throw Error(ErrorCode::InvalidConfig, "two-term needs --gamma with two values");
        }
        return finish_report(g, two_term_linear_bound(args.gamma[0], args.gamma[1], need_rep(), p[0], p[1], p[2], g.tol),
                             out);
    }
    if (name == "quantum-analogue") {
        need(3);
        return finish_report(g, quantum_bell_analogue(need_rep(), p[0], p[1], p[2], g.tol), out);
    }
    throw Error(ErrorCode::InvalidConfig, "unknown inequality \"" + name + "\"");
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(const GlobalOptions &g, const std::string &config_file, std::ostream &out) {
    const Json j = io::read_file(config_file);
    io::SweepRequest req =
        io::sweep_request_from_json(j, std::filesystem::path(config_file).parent_path().string());
    req.config.threads = g.threads;
    if (g.seed) {
        req.config.seed = *g.seed;
    }
    if (g.tol != kInequalityTol) {
        req.config.tol = g.tol;
    }
    const SweepResult res =
        req.mode == io::SweepMode::Grid ? run_grid_sweep(req.config) : separable_soundness_sweep(req.config);

    const std::string body =
        g.format == "csv" ? io::sweep_rows_to_csv(res) : io::dump_fixed(io::sweep_result_to_json(req, res));
    std::ostringstream summary;
    int code = kHolds;
    if (req.mode == io::SweepMode::Grid) {
        summary << "sweep " << sweep_target_name(req.config.target) << ": best settings (";
        for (std::size_t k = 0; k < res.best_settings.size(); ++k) {
            summary << (k ? ", " : "") << fx(res.best_settings[k]);
        }
        summary << ") lhs=" << fx(res.best_report.lhs) << " rhs=" << fx(res.best_report.rhs)
                << " slack=" << fx(res.best_report.slack) << " evaluations=" << res.evaluations
                << (res.best_report.violated ? " VIOLATED" : " holds") << "\n";
        code = res.best_report.violated ? kViolated : kHolds;
    } else {
        const bool pass = !(res.best_report.slack < -req.config.tol);
        summary << "soundness sweep: " << req.config.sample_count << " draws, " << res.evaluations
                << " reports, min slack=" << fx(res.best_report.slack) << " (" << res.best_report.name << "), "
                << (pass ? "PASS" : "FAIL") << "\n";
        code = pass ? kHolds : kViolated;
    }
    if (g.out_path.empty()) {
        out << body << summary.str();
    } else {
        emit(g, body, out);
        out << summary.str();
    }
    return code;
}

// ---------------------------------------------------------------- classical

struct ClassicalArgs {
    std::string model_file;
    std::vector<std::uint64_t> random;  // seed, count
    std::vector<std::string> bell_labels{"A", "B", "D"};
    std::vector<std::string> chsh_labels{"A", "C", "B", "D"};
    std::vector<double> gamma{1.0, 1.0, 1.0, -1.0};
};

std::vector<InequalityReport> classical_reports(const LhvModel &m, const ClassicalArgs &args, const GammaVector &gamma,
                                                double tol) {
    const auto &bl = args.bell_labels;
    const auto &cl = args.chsh_labels;
    const double c1 = std::max(m.observable(cl[0]).bound, m.observable(cl[1]).bound);
    const double c2 = std::max(m.observable(cl[2]).bound, m.observable(cl[3]).bound);
    return {classical_bell_report(m, bl[0], bl[1], bl[2], tol),
            classical_extended_chsh(m, gamma, cl[0], cl[1], cl[2], cl[3], c1, c2, tol)};
}

int cmd_classical(const GlobalOptions &g, const ClassicalArgs &args, std::ostream &out) {
    if (args.bell_labels.size() != 3 || args.chsh_labels.size() != 4) {
        throw Error(ErrorCode::InvalidConfig, "--bell takes three labels and --chsh four");
    }
    const GammaVector gamma = GammaVector::make({args.gamma.at(0), args.gamma.at(1), args.gamma.at(2), args.gamma.at(3)});
    Json j;
    j["schema"] = io::kSchemaTag;
    j["kind"] = "classical_reports";
    bool violated = false;

    if (!args.model_file.empty()) {
        const LhvModel m = io::model_from_json(io::read_file(args.model_file), args.model_file);
        Json reports = Json::array();
        for (const InequalityReport &r : classical_reports(m, args, gamma, g.tol)) {
            violated = violated || r.violated;
            reports.push_back(io::report_to_json(r));
        }
        j["reports"] = std::move(reports);
    } else {
        if (args.random.size() != 2 || args.random[1] == 0) {
            throw Error(ErrorCode::InvalidConfig, "--random takes a seed and a positive model count");
        }
        const std::uint64_t seed = g.seed.value_or(args.random[0]);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> size_dist(1, 8);
        std::uniform_real_distribution<double> bound_dist(0.5, 2.0);
        std::optional<InequalityReport> worst;
        std::uint64_t count = 0;
        for (std::uint64_t k = 0; k < args.random[1]; ++k) {
            const double c1 = bound_dist(rng);
            const double c2 = bound_dist(rng);
            const LhvModel m = random_model(rng(), size_dist(rng), {{"A", c1}, {"C", c1}, {"B", c2}, {"D", c2}});
            const GammaVector extra = random_valid_gamma(rng);
            ClassicalArgs fixed;
            auto reports = classical_reports(m, fixed, gamma, g.tol);
            InequalityReport more = classical_extended_chsh(m, extra, "A", "C", "B", "D", c1, c2, g.tol);
            reports.push_back(std::move(more));
            for (InequalityReport &r : reports) {
                ++count;
                violated = violated || r.violated;
                if (!worst || r.slack < worst->slack) {
                    worst = std::move(r);
                }
            }
        }
        j["seed"] = seed;
        j["models"] = args.random[1];
        j["reports_evaluated"] = count;
        j["min_slack"] = worst->slack;
        j["any_violated"] = violated;
        j["worst_report"] = io::report_to_json(*worst);
    }
    if (g.format == "csv") {
        std::string text = "name,lhs,rhs,slack,violated,tol\n";
        auto add = [&](const Json &r) {
            const std::string row = io::report_to_csv(
                InequalityReport{r["name"].get<std::string>(), r["lhs"].get<double>(), r["rhs"].get<double>(),
                                 r["slack"].get<double>(), r["violated"].get<bool>(), r["tol"].get<double>(), {}, {}});
            text += row.substr(row.find('\n') + 1);
        };
        if (j.contains("reports")) {
            for (const Json &r : j["reports"]) {
                add(r);
            }
        } else {
            add(j["worst_report"]);
        }
        emit(g, text, out);
    } else {
        emit(g, io::dump_fixed(j), out);
    }
    return violated ? kViolated : kHolds;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Bell-type inequality analysis for bipartite quantum states", "bellkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--tol", g.tol, "Inequality tolerance")->capture_default_str();
    app.add_option("--seed", g.seed, "Random seed override");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out_path, "Write the result to this file");
    app.add_option("--threads", g.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);

    auto *demo = app.add_subcommand("demo", "Reproduce the two-qubit separable-state example");

    CheckArgs check_args;
    auto *check = app.add_subcommand("check", "Evaluate one inequality on a state and POVM files");
    check->add_option("state", check_args.state_file, "State file (density_operator or separable_representation)")
        ->required();
    check->add_option("povms", check_args.povm_files, "POVM files, in setting order")->required();
    check->add_option("-i,--inequality", check_args.inequality,
                      "bell-original | chsh | extended-chsh | separable-bound | separable-bound-inf | two-term | "
                      "quantum-analogue")
        ->required();
    check->add_option("--gamma", check_args.gamma, "Coefficients")->delimiter(',');
    check->add_option("--rep", check_args.extra_reps, "Further representations for separable-bound-inf");
    check->add_flag("--symmetrized", check_args.symmetrized, "Use symmetrized joint experiments");

    std::string config_file;
    auto *sweep = app.add_subcommand("sweep", "Run a grid or soundness sweep from a config file");
    sweep->add_option("config", config_file, "Sweep config file")->required();

    ClassicalArgs classical_args;
    auto *classical = app.add_subcommand("classical", "Check the classical Bell and extended CHSH inequalities");
    auto *model_opt = classical->add_option("model", classical_args.model_file, "LHV model file");
    auto *random_opt =
        classical->add_option("--random", classical_args.random, "Random models: SEED COUNT")->expected(2);
    model_opt->excludes(random_opt);
    classical->add_option("--bell", classical_args.bell_labels, "Labels A,D1,D2")->delimiter(',');
    classical->add_option("--chsh", classical_args.chsh_labels, "Labels A,C,B,D")->delimiter(',');
    classical->add_option("--gamma", classical_args.gamma, "Extended CHSH coefficients")->delimiter(',');

    auto *schema = app.add_subcommand("schema", "Print the JSON schemas of every file format");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kHolds;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (demo->parsed()) {
            return cmd_demo(out, err);
        }
        if (check->parsed()) {
            return cmd_check(g, check_args, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(g, config_file, out);
        }
        if (classical->parsed()) {
            if (classical_args.model_file.empty() && classical_args.random.empty()) {
                throw Error(ErrorCode::InvalidConfig, "classical needs a model file or --random SEED COUNT");
            }
            return cmd_classical(g, classical_args, out);
        }
        if (schema->parsed()) {
            emit(g, io::schemas().dump(2) + "\n", out);
            return kHolds;
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace bellkit::cli
