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

#include "bellkit/sweep.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <thread>

#include "bellkit/error.h"
#include "bellkit/expectations.h"
#include "bellkit/measurements.h"

namespace bellkit {

namespace {

using Table = std::vector<std::vector<double>>;

struct GridEval {
    double lhs;
    double rhs;
};

struct Candidate {
    double objective = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> index;
    bool valid = false;
};

bool better(const Candidate &x, const Candidate &y) {
    if (!y.valid) {
        return x.valid;
    }
    if (!x.valid) {
        return false;
    }
    if (x.objective != y.objective) {
        return x.objective > y.objective;
    }
    return x.index < y.index;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
    const unsigned t = std::max(1u, requested);
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

template <typename Fn>
void parallel_for(std::size_t jobs, unsigned threads, Fn fn) {
    const unsigned workers = worker_count(threads, jobs);
    if (workers == 1) {
        for (std::size_t j = 0; j < jobs; ++j) {
            fn(j);
        }
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t j = w; j < jobs; j += workers) {
                fn(j);
            }
        });
    }
}

struct GridOutcome {
    Candidate best;
    std::vector<SweepRow> rows;
    std::uint64_t evaluations = 0;
};

// Exhaustive search over arity-tuples of grid indices. The outer index is
// split across workers; each outer slice is merged in index order, so the
// outcome is independent of scheduling.
GridOutcome grid_search(std::size_t arity, const std::vector<double> &angles, const SweepConfig &cfg,
                        ExtremumKind kind, const std::function<GridEval(const std::size_t *)> &eval) {
    const std::size_t res = angles.size();
    std::vector<Candidate> slice_best(res);
    std::vector<std::vector<SweepRow>> slice_rows(res);

    parallel_for(res, cfg.threads, [&](std::size_t first) {
        std::vector<std::size_t> idx(arity, 0);
        idx[0] = first;
        Candidate &best = slice_best[first];
        std::vector<SweepRow> &rows = slice_rows[first];
        while (true) {
            const GridEval e = eval(idx.data());
            const double objective = kind == ExtremumKind::MaxLhs ? e.lhs : e.lhs - e.rhs;
            const double slack = e.rhs - e.lhs;
            if (!best.valid || objective > best.objective) {
                best.objective = objective;
                best.index = idx;
                best.valid = true;
            }
            const bool violated = slack < -cfg.tol;
            if (cfg.retain == RetainPolicy::All || (cfg.retain == RetainPolicy::Violations && violated)) {
                SweepRow row;
                for (std::size_t k : idx) {
                    row.settings.push_back(angles[k]);
                }
                row.lhs = e.lhs;
                row.rhs = e.rhs;
                row.slack = slack;
                row.violated = violated;
                rows.push_back(std::move(row));
            }
            std::size_t pos = arity - 1;
            while (pos >= 1) {
                if (++idx[pos] < res) {
                    break;
                }
                idx[pos] = 0;
                --pos;
            }
            if (pos == 0) {
                break;
            }
        }
    });

    GridOutcome out;
    for (std::size_t first = 0; first < res; ++first) {
        if (better(slice_best[first], out.best)) {
            out.best = slice_best[first];
        }
        for (SweepRow &r : slice_rows[first]) {
            out.rows.push_back(std::move(r));
        }
    }
    out.evaluations = 1;
    for (std::size_t k = 0; k < arity; ++k) {
        out.evaluations *= res;
    }
    return out;
}

DensityOperator two_qubit_state(const SweepConfig &cfg) {
    std::optional<DensityOperator> rho;
    if (const auto *d = std::get_if<DensityOperator>(&cfg.state)) {
        rho = *d;
    } else if (const auto *r = std::get_if<SeparableRepresentation>(&cfg.state)) {
        rho = assemble(*r);
    } else {
        throw Error(ErrorCode::InvalidConfig, "sweep needs a state");
    }
    const auto &dims = rho->factor_dims();
    const bool ok = dims ? (dims->first == 2 && dims->second == 2) : rho->dim() == 4;
    if (!ok) {
        throw Error(ErrorCode::WrongDimension, "grid sweeps need a two-qubit state");
    }
    if (!dims) {
        return make_density(rho->matrix(), FactorDims{2, 2});
    }
    return *rho;
}

const SeparableRepresentation &symmetric_qubit_rep(const SweepConfig &cfg) {
    const auto *r = std::get_if<SeparableRepresentation>(&cfg.state);
    if (r == nullptr || !r->symmetrized()) {
        throw Error(ErrorCode::InvalidConfig, "quantum analogue sweep needs a symmetrized representation");
    }
    if (r->left_dim() != 2) {
        throw Error(ErrorCode::WrongDimension, "grid sweeps need a two-qubit state");
    }
    return *r;
}

std::vector<DiscretePovm> spin_family(const std::vector<double> &angles) {
    std::vector<DiscretePovm> out;
    out.reserve(angles.size());
    for (double t : angles) {
        out.push_back(spin_observable(t));
    }
    return out;
}

Table correlation_table(const DensityOperator &rho, const std::vector<DiscretePovm> &povms, bool symmetrized) {
    Table t(povms.size(), std::vector<double>(povms.size()));
    for (std::size_t i = 0; i < povms.size(); ++i) {
        for (std::size_t j = 0; j < povms.size(); ++j) {
            t[i][j] = correlation(rho, povms[i], povms[j], symmetrized).value;
        }
    }
    return t;
}

void check_resolution(const SweepConfig &cfg) {
    if (cfg.resolution < 2) {
        throw Error(ErrorCode::InvalidConfig, "resolution must be at least 2");
    }
}

GammaVector gamma_or_chsh(const SweepConfig &cfg) {
    return cfg.gamma ? *cfg.gamma : GammaVector::make({1.0, 1.0, 1.0, -1.0});
}

SweepResult finish(const SweepConfig &cfg, GridOutcome grid, const std::vector<double> &angles, ExtremumKind kind) {
    SweepResult result;
    for (std::size_t k : grid.best.index) {
        result.best_settings.push_back(angles[k]);
    }
    result.best_report = evaluate_grid_point(cfg, result.best_settings);
    result.evaluations = grid.evaluations;
    result.extremum_kind = kind;
    result.rows = std::move(grid.rows);
    if (cfg.retain == RetainPolicy::Best) {
        const InequalityReport &r = result.best_report;
        result.rows.push_back({result.best_settings, r.lhs, r.rhs, r.slack, r.violated});
    }
    return result;
}

}  // namespace

std::string_view sweep_target_name(SweepTarget t) {
    switch (t) {
        case SweepTarget::BellOriginal:
            return "bell_original";
        case SweepTarget::Chsh:
            return "chsh";
        case SweepTarget::QuantumAnalogue:
            return "quantum_analogue";
        case SweepTarget::ExtendedChsh:
            return "extended_chsh";
    }
    return "unknown";
}

std::string_view extremum_kind_name(ExtremumKind k) {
    return k == ExtremumKind::MaxLhs ? "max_lhs" : "max_lhs_minus_rhs";
}

std::vector<double> grid_angles(std::size_t resolution) {
    if (resolution < 2) {
        throw Error(ErrorCode::InvalidConfig, "resolution must be at least 2");
    }
    std::vector<double> out(resolution);
    for (std::size_t k = 0; k < resolution; ++k) {
        out[k] = std::numbers::pi * static_cast<double>(k) / static_cast<double>(resolution);
    }
    return out;
}

InequalityReport evaluate_grid_point(const SweepConfig &cfg, const std::vector<double> &settings) {
    std::vector<DiscretePovm> p = spin_family(settings);
    switch (cfg.target) {
        case SweepTarget::BellOriginal: {
            const DensityOperator rho = two_qubit_state(cfg);
            return bell_original(correlation(rho, p.at(0), p.at(1), cfg.symmetrized),
                                 correlation(rho, p.at(0), p.at(2), cfg.symmetrized),
                                 correlation(rho, p.at(1), p.at(2), cfg.symmetrized), 1.0, 1.0, cfg.tol);
        }
        case SweepTarget::Chsh: {
            const DensityOperator rho = two_qubit_state(cfg);
            const bool s = cfg.symmetrized;
            return chsh_report(correlation(rho, p.at(0), p.at(1), s), correlation(rho, p.at(2), p.at(1), s),
                               correlation(rho, p.at(2), p.at(3), s), correlation(rho, p.at(0), p.at(3), s), cfg.tol);
        }
        case SweepTarget::QuantumAnalogue:
            return quantum_bell_analogue(symmetric_qubit_rep(cfg), p.at(0), p.at(1), p.at(2), cfg.tol);
        case SweepTarget::ExtendedChsh: {
            const DensityOperator rho = two_qubit_state(cfg);
            const bool s = cfg.symmetrized;
            return extended_chsh(gamma_or_chsh(cfg), correlation(rho, p.at(0), p.at(1), s),
                                 correlation(rho, p.at(2), p.at(1), s), correlation(rho, p.at(2), p.at(3), s),
                                 correlation(rho, p.at(0), p.at(3), s), 1.0, 1.0, cfg.tol);
        }
    }
    throw Error(ErrorCode::InvalidConfig, "unknown sweep target");
}

SweepResult bell_violation_sweep(const SweepConfig &cfg) {
    check_resolution(cfg);
    const DensityOperator rho = two_qubit_state(cfg);
    const auto angles = grid_angles(cfg.resolution);
    const Table e = correlation_table(rho, spin_family(angles), cfg.symmetrized);
    auto grid = grid_search(3, angles, cfg, ExtremumKind::MaxLhsMinusRhs, [&](const std::size_t *i) {
        return GridEval{std::abs(e[i[0]][i[1]] - e[i[0]][i[2]]), 1.0 * 1.0 - (1.0 / 1.0) * e[i[1]][i[2]]};
    });
    SweepConfig target = cfg;
    target.target = SweepTarget::BellOriginal;
    return finish(target, std::move(grid), angles, ExtremumKind::MaxLhsMinusRhs);
}

SweepResult chsh_sweep(const SweepConfig &cfg) {
    check_resolution(cfg);
    const DensityOperator rho = two_qubit_state(cfg);
    const auto angles = grid_angles(cfg.resolution);
    const Table e = correlation_table(rho, spin_family(angles), cfg.symmetrized);
    auto grid = grid_search(4, angles, cfg, ExtremumKind::MaxLhs, [&](const std::size_t *i) {
        return GridEval{std::abs(e[i[0]][i[1]] + e[i[2]][i[1]] + e[i[2]][i[3]] - e[i[0]][i[3]]), 2.0};
    });
    SweepConfig target = cfg;
    target.target = SweepTarget::Chsh;
    return finish(target, std::move(grid), angles, ExtremumKind::MaxLhs);
}

SweepResult analogue_sweep(const SweepConfig &cfg) {
    check_resolution(cfg);
    const SeparableRepresentation &rep = symmetric_qubit_rep(cfg);
    const auto angles = grid_angles(cfg.resolution);
    const auto povms = spin_family(angles);
    const Table e = correlation_table(assemble(rep), povms, true);
    const Table s = correlation_table(sigma_sym_of(rep), povms, true);
    auto grid = grid_search(3, angles, cfg, ExtremumKind::MaxLhsMinusRhs, [&](const std::size_t *i) {
        return GridEval{std::abs(e[i[0]][i[1]] - e[i[0]][i[2]]), 1.0 * 1.0 - s[i[1]][i[2]]};
    });
    SweepConfig target = cfg;
    target.target = SweepTarget::QuantumAnalogue;
    return finish(target, std::move(grid), angles, ExtremumKind::MaxLhsMinusRhs);
}

SweepResult extended_chsh_sweep(const SweepConfig &cfg) {
    check_resolution(cfg);
    const GammaVector g = gamma_or_chsh(cfg);
    if (g.branch(cfg.tol) == GammaBranch::None) {
        throw Error(ErrorCode::InvalidGammaConstraint, "sweep coefficients violate both constraints");
    }
    const DensityOperator rho = two_qubit_state(cfg);
    const auto angles = grid_angles(cfg.resolution);
    const Table e = correlation_table(rho, spin_family(angles), cfg.symmetrized);
    const double rhs = 2.0 * g.max_abs() * 1.0 * 1.0;
    auto grid = grid_search(4, angles, cfg, ExtremumKind::MaxLhsMinusRhs, [&](const std::size_t *i) {
        return GridEval{
            std::abs(g[0] * e[i[0]][i[1]] + g[1] * e[i[2]][i[1]] + g[2] * e[i[2]][i[3]] + g[3] * e[i[0]][i[3]]), rhs};
    });
    SweepConfig target = cfg;
    target.target = SweepTarget::ExtendedChsh;
    return finish(target, std::move(grid), angles, ExtremumKind::MaxLhsMinusRhs);
}

SweepResult run_grid_sweep(const SweepConfig &cfg) {
    switch (cfg.target) {
        case SweepTarget::BellOriginal:
            return bell_violation_sweep(cfg);
        case SweepTarget::Chsh:
            return chsh_sweep(cfg);
        case SweepTarget::QuantumAnalogue:
            return analogue_sweep(cfg);
        case SweepTarget::ExtendedChsh:
            return extended_chsh_sweep(cfg);
    }
    throw Error(ErrorCode::InvalidConfig, "unknown sweep target");
}

DensityOperator random_pure_state(std::mt19937_64 &rng, std::size_t d) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> v(d);
    double norm2 = 0.0;
    while (norm2 < 1e-6) {
        norm2 = 0.0;
        for (Complex &c : v) {
            c = Complex(normal(rng), normal(rng));
            norm2 += std::norm(c);
        }
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex &c : v) {
        c *= inv;
    }
    return make_density(ComplexMatrix::projector(v));
}

SeparableRepresentation random_product_representation(std::mt19937_64 &rng, std::size_t d1, std::size_t d2,
                                                      std::size_t max_terms, bool symmetrized) {
    std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, max_terms));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t n = count(rng);
    std::vector<double> w(n);
    double total = 0.0;
    for (double &x : w) {
        x = unit(rng) + 0.05;
        total += x;
    }
    std::vector<ProductTerm> terms;
    for (std::size_t m = 0; m < n; ++m) {
        terms.push_back({w[m] / total, random_pure_state(rng, d1), random_pure_state(rng, d2)});
    }
    return SeparableRepresentation::make(std::move(terms), symmetrized);
}

DiscretePovm random_povm(std::mt19937_64 &rng, std::size_t d, double bound, bool noisy, std::string label) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Gram-Schmidt on Gaussian vectors gives a random orthonormal basis.
    std::vector<std::vector<Complex>> basis;
    while (basis.size() < d) {
        std::vector<Complex> v(d);
        for (Complex &c : v) {
            c = Complex(normal(rng), normal(rng));
        }
        for (const auto &b : basis) {
            Complex overlap = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                overlap += std::conj(b[k]) * v[k];
            }
            for (std::size_t k = 0; k < d; ++k) {
                v[k] -= overlap * b[k];
            }
        }
        double n2 = 0.0;
        for (const Complex &c : v) {
            n2 += std::norm(c);
        }
        if (n2 < 1e-8) {
            continue;
        }
        for (Complex &c : v) {
            c /= std::sqrt(n2);
        }
        basis.push_back(std::move(v));
    }

    std::vector<double> outcomes;
    while (outcomes.size() < d) {
        const double x = bound * (2.0 * unit(rng) - 1.0);
        if (std::find(outcomes.begin(), outcomes.end(), x) == outcomes.end()) {
            outcomes.push_back(x);
        }
    }

    const double visibility = noisy ? unit(rng) : 1.0;
    const ComplexMatrix noise = ComplexMatrix::identity(d) * Complex((1.0 - visibility) / static_cast<double>(d));
    std::vector<ComplexMatrix> effects;
    for (const auto &b : basis) {
        effects.push_back(ComplexMatrix::projector(b) * Complex(visibility) + noise);
    }
    return make_povm(std::move(label), OutcomeSet::make(std::move(outcomes), bound), std::move(effects));
}

GammaVector random_valid_gamma(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::bernoulli_distribution coin(0.5);
    double g1 = 0.0;
    double g3 = 0.0;
    while (std::abs(g1) < 0.1 || std::abs(g3) < 0.1) {
        g1 = normal(rng);
        g3 = normal(rng);
    }
    const double g2 = normal(rng);
    if (coin(rng)) {
        return GammaVector::make({g1, g2, g3, -g2 * g3 / g1});
    }
    return GammaVector::make({g1, g2, g3, -g1 * g2 / g3});
}

namespace {

struct DrawOutcome {
    std::vector<InequalityReport> reports;
};

DrawOutcome soundness_draw(const SweepConfig &cfg, std::size_t draw) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(draw), static_cast<std::uint32_t>(draw >> 32)};
    std::mt19937_64 rng(seq);
    std::bernoulli_distribution coin(0.5);
    std::uniform_real_distribution<double> bound_dist(0.5, 2.0);
    std::normal_distribution<double> normal(0.0, 1.0);

    std::optional<SeparableRepresentation> rep;
    if (const auto *given = std::get_if<SeparableRepresentation>(&cfg.state)) {
        rep = *given;
    } else {
        std::uniform_int_distribution<std::size_t> dim_dist(2, std::max<std::size_t>(2, cfg.max_dim));
        const std::size_t d = dim_dist(rng);
        const bool sym = coin(rng);
        rep = random_product_representation(rng, d, d, 6, sym);
    }
    const std::size_t d1 = rep->left_dim();
    const std::size_t d2 = rep->right_dim();
    const double c1 = bound_dist(rng);
    const double c2 = (rep->symmetrized() && coin(rng)) ? c1 : bound_dist(rng);

    const DiscretePovm a = random_povm(rng, d1, c1, coin(rng), "A");
    const DiscretePovm c = random_povm(rng, d1, c1, coin(rng), "C");
    const DiscretePovm b = random_povm(rng, d2, c2, coin(rng), "B");
    const DiscretePovm d = random_povm(rng, d2, c2, coin(rng), "D");
    const double g1 = normal(rng);
    const double g2 = normal(rng);
    const GammaVector gamma = cfg.gamma ? *cfg.gamma : random_valid_gamma(rng);

    DrawOutcome out;
    out.reports.push_back(separable_bound(*rep, a, b, d, cfg.tol));
    if (std::abs(g1) + std::abs(g2) > 0.0) {
        out.reports.push_back(two_term_linear_bound(g1, g2, *rep, a, b, d, cfg.tol));
    }
    if (rep->symmetrized() && c1 == c2) {
        out.reports.push_back(quantum_bell_analogue(*rep, a, b, d, cfg.tol));
    }
    const DensityOperator rho = assemble(*rep);
    const bool sym = rep->symmetrized();
    const CorrelationRecord e_ab = correlation(rho, a, b, sym, "rho_s");
    const CorrelationRecord e_cb = correlation(rho, c, b, sym, "rho_s");
    const CorrelationRecord e_cd = correlation(rho, c, d, sym, "rho_s");
    const CorrelationRecord e_ad = correlation(rho, a, d, sym, "rho_s");
    out.reports.push_back(extended_chsh(gamma, e_ab, e_cb, e_cd, e_ad, c1, c2, cfg.tol));
    out.reports.push_back(chsh_report(e_ab, e_cb, e_cd, e_ad, cfg.tol, c1, c2));
    return out;
}

}  // namespace

SweepResult separable_soundness_sweep(const SweepConfig &cfg) {
    if (cfg.sample_count < 1) {
        throw Error(ErrorCode::InvalidConfig, "sample_count must be at least 1");
    }
    if (std::holds_alternative<DensityOperator>(cfg.state)) {
        throw Error(ErrorCode::InvalidConfig, "soundness sweep needs a separable representation, not a bare state");
    }
    std::vector<DrawOutcome> draws(cfg.sample_count);
    parallel_for(cfg.sample_count, cfg.threads, [&](std::size_t i) { draws[i] = soundness_draw(cfg, i); });

    SweepResult result;
    result.extremum_kind = ExtremumKind::MaxLhsMinusRhs;
    bool have_best = false;
    for (std::size_t i = 0; i < draws.size(); ++i) {
        for (InequalityReport &r : draws[i].reports) {
            ++result.evaluations;
            if (cfg.retain == RetainPolicy::All || (cfg.retain == RetainPolicy::Violations && r.violated)) {
                result.rows.push_back({{static_cast<double>(i)}, r.lhs, r.rhs, r.slack, r.violated});
            }
            if (!have_best || r.slack < result.best_report.slack) {
                result.best_report = r;
                result.best_settings = {static_cast<double>(i)};
                have_best = true;
            }
        }
    }
    if (cfg.retain == RetainPolicy::Best) {
        const InequalityReport &r = result.best_report;
        result.rows.push_back({result.best_settings, r.lhs, r.rhs, r.slack, r.violated});
    }
    return result;
}

}  // namespace bellkit
