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

#ifndef BELLKIT_INEQUALITIES_H
#define BELLKIT_INEQUALITIES_H

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bellkit/expectations.h"
#include "bellkit/measurements.h"
#include "bellkit/states.h"

namespace bellkit {

/// Default tolerance for declaring an inequality violated.
inline constexpr double kInequalityTol = 1e-9;

/// Outcome of comparing lhs <= rhs. slack = rhs - lhs; violated iff
/// slack < -tol.
struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool violated = false;
    double tol = kInequalityTol;
    std::vector<CorrelationRecord> inputs;
    std::vector<std::string> notes;
};

InequalityReport make_report(std::string name, double lhs, double rhs, double tol,
                             std::vector<CorrelationRecord> inputs);

/// Which pairing of coefficients makes the cross term vanish.
enum class GammaBranch {
    None,
    AliceGrouped,  // gamma1 gamma4 = -gamma2 gamma3: pairs (ab, ad) and (cb, cd)
    BobGrouped,    // gamma1 gamma2 = -gamma3 gamma4: pairs (ab, cb) and (cd, ad)
};

/// Coefficients of the extended CHSH combination
/// gamma1 E(a,b) + gamma2 E(c,b) + gamma3 E(c,d) + gamma4 E(a,d).
class GammaVector {
   public:
    /// Throws ZeroGammas when every coefficient vanishes.
    static GammaVector make(std::array<double, 4> gammas);

    const std::array<double, 4> &values() const noexcept {
        return gammas_;
    }
    double operator[](std::size_t i) const {
        return gammas_[i];
    }
    /// max_i |gamma_i|.
    double max_abs() const noexcept {
        return max_abs_;
    }
    double alice_residual() const noexcept {
        return gammas_[0] * gammas_[3] + gammas_[1] * gammas_[2];
    }
    double bob_residual() const noexcept {
        return gammas_[0] * gammas_[1] + gammas_[2] * gammas_[3];
    }
    /// First branch whose residual is within tol * max_abs()^2.
    GammaBranch branch(double tol = kInequalityTol) const;

   private:
    GammaVector(std::array<double, 4> gammas, double max_abs) : gammas_(gammas), max_abs_(max_abs) {
    }

    std::array<double, 4> gammas_;
    double max_abs_;
};

std::string_view gamma_branch_name(GammaBranch b);

/// 1 - x y, which dominates |x - y| for |x|, |y| <= 1. Throws OutOfRange.
double scalar_bound(double x, double y);

/// |E(a,b) - E(a,c)| <= C1 C2 - (C1 / C2) E(b,c).
InequalityReport bell_original(const CorrelationRecord &e_ab, const CorrelationRecord &e_ac,
                               const CorrelationRecord &e_bc, double c1, double c2, double tol = kInequalityTol);

/// |E(a,b) + E(c,b) + E(c,d) - E(a,d)|.
double chsh_value(const CorrelationRecord &e_ab, const CorrelationRecord &e_cb, const CorrelationRecord &e_cd,
                  const CorrelationRecord &e_ad);

/// chsh_value <= 2 C1 C2.
InequalityReport chsh_report(const CorrelationRecord &e_ab, const CorrelationRecord &e_cb,
                             const CorrelationRecord &e_cd, const CorrelationRecord &e_ad, double tol = kInequalityTol,
                             double c1 = 1.0, double c2 = 1.0);

/// Upper bound for a separable state from one of its representations:
/// |E(a,b1) - E(a,b2)| <= C1 C2 - (C1 / C2) <b1 b2>_aux, where aux is the
/// two-copy state built from the Bob factors. Symmetrized representations use
/// symmetrized correlations on both sides.
InequalityReport separable_bound(const SeparableRepresentation &rep, const DiscretePovm &a, const DiscretePovm &b1,
                                 const DiscretePovm &b2, double tol = kInequalityTol);

/// separable_bound minimized over several representations of one state and
/// over their pairwise mixtures on an alpha grid of `alpha_points` points.
/// The result is an upper approximation of the infimum over all
/// representations. Throws DifferentStates.
InequalityReport separable_bound_inf(const std::vector<SeparableRepresentation> &reps, const DiscretePovm &a,
                                     const DiscretePovm &b1, const DiscretePovm &b2, double tol = kInequalityTol,
                                     std::size_t alpha_points = 11);

/// |g1 E(a,b1) + g2 E(a,b2)| <= g0 C1 C2 + (g1 g2 / g0)(C1 / C2) <b1 b2>_aux
/// with g0 = max(|g1|, |g2|). Throws ZeroGammas.
InequalityReport two_term_linear_bound(double gamma1, double gamma2, const SeparableRepresentation &rep,
                                       const DiscretePovm &a, const DiscretePovm &b1, const DiscretePovm &b2,
                                       double tol = kInequalityTol);

/// Bell-form bound for identical subsystems in terms of the auxiliary state
/// sigma of a symmetrized representation:
/// |E(a,b1) - E(a,b2)| <= C^2 - E_sigma(b1,b2).
/// When `alice_at_b1` is given, its similarity with b1 is checked and a note
/// is recorded if it fails. Throws BoundMismatch when bounds differ.
InequalityReport quantum_bell_analogue(const SeparableRepresentation &rep, const DiscretePovm &a,
                                       const DiscretePovm &b1, const DiscretePovm &b2, double tol = kInequalityTol,
                                       const DiscretePovm *alice_at_b1 = nullptr);

enum class SignCondition { PlusSign, MinusSign, NotSatisfied };

std::string_view sign_condition_name(SignCondition s);

struct VbiResult {
    SignCondition sign = SignCondition::NotSatisfied;
    double sigma_value = 0.0;     // E_sigma(b1, b2)
    double state_value = 0.0;     // E_rho(b1, b2)
    double diagonal_value = 0.0;  // E_rho(b1, b1)
    /// The sign found agrees with the sign of diagonal_value (vacuous for
    /// NotSatisfied).
    bool sign_consistent = true;
};

/// E_sigma(b1, b2) = +-E_rho(b1, b2) for a symmetrized representation of rho.
/// Zero ties resolve to PlusSign.
VbiResult condition_vbi(const SeparableRepresentation &rep, const DiscretePovm &b1, const DiscretePovm &b2,
                        const DensityOperator &rho_s, double tol = kInequalityTol);

/// tr[left_m W] = +-tr[right_m W] with one sign for every term.
SignCondition condition_sor(const SeparableRepresentation &rep, const DiscretePovm &b1,
                            double tol = kInequalityTol);

enum class Restriction { Plus, Minus, Neither };

std::string_view restriction_name(Restriction r);

/// Classifies E_rho(p, p) (symmetrized) against +-1. Unit-bounded POVMs only;
/// throws BoundNotUnit otherwise.
Restriction bell_restriction(const DensityOperator &rho_s, const DiscretePovm &p, double tol = kInequalityTol);

/// |g1 E(a,b) + g2 E(c,b) + g3 E(c,d) + g4 E(a,d)| <= 2 max|g_i| C1 C2, valid
/// when one of the two coefficient constraints holds. Throws
/// InvalidGammaConstraint otherwise.
InequalityReport extended_chsh(const GammaVector &gammas, const CorrelationRecord &e_ab, const CorrelationRecord &e_cb,
                               const CorrelationRecord &e_cd, const CorrelationRecord &e_ad, double c1, double c2,
                               double tol = kInequalityTol);

}  // namespace bellkit

#endif
