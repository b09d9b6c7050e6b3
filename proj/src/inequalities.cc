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

#include "bellkit/inequalities.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "bellkit/error.h"

namespace bellkit {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

void require_positive_bounds(double c1, double c2) {
    if (!(c1 > 0.0) || !(c2 > 0.0)) {
        throw Error(ErrorCode::NonpositiveBound, "bounds must be positive, got C1=" + sci(c1) + " C2=" + sci(c2));
    }
}

struct SideCorrelations {
    CorrelationRecord e1;
    CorrelationRecord e2;
};

// E(a,b1), E(a,b2) on the assembled state, symmetrized when the
// representation is.
SideCorrelations alice_bob_pair(const SeparableRepresentation &rep, const DiscretePovm &a, const DiscretePovm &b1,
                                const DiscretePovm &b2) {
    const DensityOperator rho = assemble(rep);
    const bool sym = rep.symmetrized();
    return {correlation(rho, a, b1, sym, "rho_s"), correlation(rho, a, b2, sym, "rho_s")};
}

double bob_bound(const DiscretePovm &b1, const DiscretePovm &b2) {
    return std::max(b1.bound(), b2.bound());
}

double separable_rhs(double c1, double c2, double aux) {
    return c1 * c2 - (c1 / c2) * aux;
}

}  // namespace

InequalityReport make_report(std::string name, double lhs, double rhs, double tol,
                             std::vector<CorrelationRecord> inputs) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.violated = r.slack < -tol;
    r.tol = tol;
    r.inputs = std::move(inputs);
    return r;
}

GammaVector GammaVector::make(std::array<double, 4> gammas) {
    double m = 0.0;
    for (double g : gammas) {
        if (!std::isfinite(g)) {
            throw Error(ErrorCode::ZeroGammas, "coefficients must be finite");
        }
        m = std::max(m, std::abs(g));
    }
    if (m == 0.0) {
        throw Error(ErrorCode::ZeroGammas, "all four coefficients are zero");
    }
    return GammaVector(gammas, m);
}

GammaBranch GammaVector::branch(double tol) const {
    const double scale = tol * max_abs_ * max_abs_;
    if (std::abs(alice_residual()) <= scale) {
        return GammaBranch::AliceGrouped;
    }
    if (std::abs(bob_residual()) <= scale) {
        return GammaBranch::BobGrouped;
    }
    return GammaBranch::None;
}

std::string_view gamma_branch_name(GammaBranch b) {
    switch (b) {
        case GammaBranch::AliceGrouped:
            return "gamma1*gamma4=-gamma2*gamma3";
        case GammaBranch::BobGrouped:
            return "gamma1*gamma2=-gamma3*gamma4";
        case GammaBranch::None:
            break;
    }
    return "none";
}

double scalar_bound(double x, double y) {
    constexpr double kSlack = 1e-12;
    if (!(std::abs(x) <= 1.0 + kSlack) || !(std::abs(y) <= 1.0 + kSlack)) {
        throw Error(ErrorCode::OutOfRange, "scalar_bound needs |x|, |y| <= 1, got " + sci(x) + ", " + sci(y));
    }
    return 1.0 - x * y;
}

InequalityReport bell_original(const CorrelationRecord &e_ab, const CorrelationRecord &e_ac,
                               const CorrelationRecord &e_bc, double c1, double c2, double tol) {
    require_positive_bounds(c1, c2);
    const double lhs = std::abs(e_ab.value - e_ac.value);
    const double rhs = c1 * c2 - (c1 / c2) * e_bc.value;
    return make_report("bell_original", lhs, rhs, tol, {e_ab, e_ac, e_bc});
}

double chsh_value(const CorrelationRecord &e_ab, const CorrelationRecord &e_cb, const CorrelationRecord &e_cd,
                  const CorrelationRecord &e_ad) {
    return std::abs(e_ab.value + e_cb.value + e_cd.value - e_ad.value);
}

InequalityReport chsh_report(const CorrelationRecord &e_ab, const CorrelationRecord &e_cb,
                             const CorrelationRecord &e_cd, const CorrelationRecord &e_ad, double tol, double c1,
                             double c2) {
    require_positive_bounds(c1, c2);
    return make_report("chsh", chsh_value(e_ab, e_cb, e_cd, e_ad), 2.0 * c1 * c2, tol, {e_ab, e_cb, e_cd, e_ad});
}

InequalityReport separable_bound(const SeparableRepresentation &rep, const DiscretePovm &a, const DiscretePovm &b1,
                                 const DiscretePovm &b2, double tol) {
    const auto [e1, e2] = alice_bob_pair(rep, a, b1, b2);
    const CorrelationRecord aux = bob_bob_correlation(rep, b1, b2);
    const double c1 = a.bound();
    const double c2 = bob_bound(b1, b2);
    return make_report(rep.symmetrized() ? "separable_bound_symmetric" : "separable_bound",
                       std::abs(e1.value - e2.value), separable_rhs(c1, c2, aux.value), tol, {e1, e2, aux});
}

InequalityReport separable_bound_inf(const std::vector<SeparableRepresentation> &reps, const DiscretePovm &a,
                                     const DiscretePovm &b1, const DiscretePovm &b2, double tol,
                                     std::size_t alpha_points) {
    if (reps.empty()) {
        throw Error(ErrorCode::InvalidRepresentation, "no representations supplied");
    }
    const DensityOperator rho = assemble(reps.front());
    for (std::size_t i = 1; i < reps.size(); ++i) {
        const double gap = max_abs_diff(assemble(reps[i]).matrix(), rho.matrix());
        if (gap > kSameStateTol) {
            throw Error(ErrorCode::DifferentStates, "representation " + std::to_string(i) + " differs by " + sci(gap));
        }
    }

    InequalityReport best = separable_bound(reps.front(), a, b1, b2, tol);
    auto consider = [&](const SeparableRepresentation &rep) {
        InequalityReport r = separable_bound(rep, a, b1, b2, tol);
        if (r.rhs < best.rhs) {
            best = std::move(r);
        }
    };
    for (std::size_t i = 1; i < reps.size(); ++i) {
        consider(reps[i]);
    }
    if (alpha_points >= 3) {
        for (std::size_t i = 0; i < reps.size(); ++i) {
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                for (std::size_t k = 1; k + 1 < alpha_points; ++k) {
                    const double alpha = static_cast<double>(k) / static_cast<double>(alpha_points - 1);
                    consider(mix_representations(reps[i], reps[j], alpha));
                }
            }
        }
    }
    InequalityReport out = make_report("separable_bound_inf", best.lhs, best.rhs, tol, std::move(best.inputs));
    out.notes.push_back("rhs is an upper approximation of the infimum over all separable representations");
    out.notes.push_back("candidates: " + std::to_string(reps.size()) + " representations, alpha grid " +
                        std::to_string(alpha_points));
    return out;
}

InequalityReport two_term_linear_bound(double gamma1, double gamma2, const SeparableRepresentation &rep,
                                       const DiscretePovm &a, const DiscretePovm &b1, const DiscretePovm &b2,
                                       double tol) {
    const double g0 = std::max(std::abs(gamma1), std::abs(gamma2));
    if (!(g0 > 0.0)) {
        throw Error(ErrorCode::ZeroGammas, "|gamma1| + |gamma2| must be nonzero");
    }
    const auto [e1, e2] = alice_bob_pair(rep, a, b1, b2);
    const CorrelationRecord aux = bob_bob_correlation(rep, b1, b2);
    const double c1 = a.bound();
    const double c2 = bob_bound(b1, b2);
    const double lhs = std::abs(gamma1 * e1.value + gamma2 * e2.value);
    const double rhs = g0 * c1 * c2 + (gamma1 * gamma2 / g0) * (c1 / c2) * aux.value;
    return make_report("two_term_linear_bound", lhs, rhs, tol, {e1, e2, aux});
}

InequalityReport quantum_bell_analogue(const SeparableRepresentation &rep, const DiscretePovm &a,
                                       const DiscretePovm &b1, const DiscretePovm &b2, double tol,
                                       const DiscretePovm *alice_at_b1) {
    if (!rep.symmetrized()) {
        throw Error(ErrorCode::InvalidRepresentation, "quantum_bell_analogue needs a symmetrized representation");
    }
    if (a.bound() != b1.bound() || a.bound() != b2.bound()) {
        throw Error(ErrorCode::BoundMismatch, "Alice and Bob outcome bounds must coincide");
    }
    const double c = a.bound();
    const DensityOperator rho = assemble(rep);
    const CorrelationRecord e1 = correlation(rho, a, b1, true, "rho_s");
    const CorrelationRecord e2 = correlation(rho, a, b2, true, "rho_s");
    const CorrelationRecord aux = correlation(sigma_sym_of(rep), b1, b2, true, "sigma");
    InequalityReport r =
        make_report("quantum_bell_analogue", std::abs(e1.value - e2.value), c * c - aux.value, tol, {e1, e2, aux});
    if (alice_at_b1 != nullptr && !similarity_holds(*alice_at_b1, b1)) {
        r.notes.push_back("warning: Alice and Bob devices at setting b1 are not similar");
    }
    return r;
}

std::string_view sign_condition_name(SignCondition s) {
    switch (s) {
        case SignCondition::PlusSign:
            return "PlusSign";
        case SignCondition::MinusSign:
            return "MinusSign";
        case SignCondition::NotSatisfied:
            break;
    }
    return "NotSatisfied";
}

VbiResult condition_vbi(const SeparableRepresentation &rep, const DiscretePovm &b1, const DiscretePovm &b2,
                        const DensityOperator &rho_s, double tol) {
    if (!rep.symmetrized()) {
        throw Error(ErrorCode::InvalidRepresentation, "condition_vbi needs a symmetrized representation");
    }
    const double gap = max_abs_diff(assemble(rep).matrix(), rho_s.matrix());
    if (gap > kSameStateTol) {
        throw Error(ErrorCode::DifferentStates, "representation does not assemble to the given state");
    }
    VbiResult r;
    r.sigma_value = correlation(sigma_sym_of(rep), b1, b2, true).value;
    r.state_value = correlation(rho_s, b1, b2, true).value;
    r.diagonal_value = correlation(rho_s, b1, b1, true).value;
    if (std::abs(r.sigma_value - r.state_value) <= tol) {
        r.sign = SignCondition::PlusSign;
        r.sign_consistent = r.diagonal_value >= -tol;
    } else if (std::abs(r.sigma_value + r.state_value) <= tol) {
        r.sign = SignCondition::MinusSign;
        r.sign_consistent = r.diagonal_value <= tol;
    }
    return r;
}

SignCondition condition_sor(const SeparableRepresentation &rep, const DiscretePovm &b1, double tol) {
    if (!rep.symmetrized()) {
        throw Error(ErrorCode::InvalidRepresentation, "condition_sor needs a symmetrized representation");
    }
    const ComplexMatrix &w = effect_operator(b1);
    bool plus = true;
    bool minus = true;
    for (const ProductTerm &t : rep.terms()) {
        const double x = trace_of_product(t.left.matrix(), w).real();
        const double y = trace_of_product(t.right.matrix(), w).real();
        plus = plus && std::abs(x - y) <= tol;
        minus = minus && std::abs(x + y) <= tol;
    }
    if (plus) {
        return SignCondition::PlusSign;
    }
    return minus ? SignCondition::MinusSign : SignCondition::NotSatisfied;
}

std::string_view restriction_name(Restriction r) {
    switch (r) {
        case Restriction::Plus:
            return "Plus";
        case Restriction::Minus:
            return "Minus";
        case Restriction::Neither:
            break;
    }
    return "Neither";
}

Restriction bell_restriction(const DensityOperator &rho_s, const DiscretePovm &p, double tol) {
    if (p.bound() != 1.0) {
        throw Error(ErrorCode::BoundNotUnit, "correlation restrictions are stated for unit-bounded outcomes");
    }
    const double v = correlation(rho_s, p, p, true).value;
    if (std::abs(v - 1.0) <= tol) {
        return Restriction::Plus;
    }
    if (std::abs(v + 1.0) <= tol) {
        return Restriction::Minus;
    }
    return Restriction::Neither;
}

InequalityReport extended_chsh(const GammaVector &gammas, const CorrelationRecord &e_ab, const CorrelationRecord &e_cb,
                               const CorrelationRecord &e_cd, const CorrelationRecord &e_ad, double c1, double c2,
                               double tol) {
    require_positive_bounds(c1, c2);
    const GammaBranch branch = gammas.branch(tol);
    if (branch == GammaBranch::None) {
        throw Error(ErrorCode::InvalidGammaConstraint, "gamma1*gamma4+gamma2*gamma3 = " + sci(gammas.alice_residual()) +
                                                           ", gamma1*gamma2+gamma3*gamma4 = " +
                                                           sci(gammas.bob_residual()));
    }
    const double lhs =
        std::abs(gammas[0] * e_ab.value + gammas[1] * e_cb.value + gammas[2] * e_cd.value + gammas[3] * e_ad.value);
    const double rhs = 2.0 * gammas.max_abs() * c1 * c2;
    InequalityReport r = make_report("extended_chsh", lhs, rhs, tol, {e_ab, e_cb, e_cd, e_ad});
    r.notes.push_back("constraint " + std::string(gamma_branch_name(branch)));
    return r;
}

}  // namespace bellkit
