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

#ifndef BELLKIT_SWEEP_H
#define BELLKIT_SWEEP_H

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <variant>
#include <vector>

#include "bellkit/inequalities.h"
#include "bellkit/states.h"

namespace bellkit {

enum class SweepTarget { BellOriginal, Chsh, QuantumAnalogue, ExtendedChsh };

enum class ExtremumKind { MaxLhsMinusRhs, MaxLhs };

/// Which evaluations a sweep keeps as rows, besides the best one.
enum class RetainPolicy { Best, Violations, All };

std::string_view sweep_target_name(SweepTarget t);
std::string_view extremum_kind_name(ExtremumKind k);

using SweepState = std::variant<std::monostate, DensityOperator, SeparableRepresentation>;

struct SweepConfig {
    SweepTarget target = SweepTarget::BellOriginal;
    /// Points per angle axis; angles are k * pi / resolution.
    std::size_t resolution = 64;
    SweepState state;
    std::uint64_t seed = 0;
    std::size_t sample_count = 1000;
    std::optional<GammaVector> gamma;
    /// Use symmetrized joint experiments on grid sweeps over a density operator.
    bool symmetrized = false;
    /// Largest factor dimension drawn by the soundness sweep (2 or 3).
    std::size_t max_dim = 3;
    unsigned threads = 1;
    RetainPolicy retain = RetainPolicy::Best;
    double tol = kInequalityTol;
};

struct SweepRow {
    std::vector<double> settings;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool violated = false;
};

struct SweepResult {
    /// Angles of the extremal evaluation. For soundness sweeps, the draw index.
    std::vector<double> best_settings;
    InequalityReport best_report;
    std::uint64_t evaluations = 0;
    ExtremumKind extremum_kind = ExtremumKind::MaxLhsMinusRhs;
    /// Retained rows ordered by grid index (or draw index).
    std::vector<SweepRow> rows;
};

/// Angles k * pi / resolution for k = 0 .. resolution - 1.
std::vector<double> grid_angles(std::size_t resolution);

/// Maximizes lhs - rhs of bell_original over spin settings (a, b, c) on a
/// two-qubit state. Ties go to the lexicographically smallest angle tuple.
SweepResult bell_violation_sweep(const SweepConfig &cfg);

/// Maximizes the CHSH value over spin settings (a, b, c, d).
SweepResult chsh_sweep(const SweepConfig &cfg);

/// Maximizes lhs - rhs of quantum_bell_analogue over (a, b1, b2) for a
/// symmetrized two-qubit representation.
SweepResult analogue_sweep(const SweepConfig &cfg);

/// Maximizes lhs - rhs of extended_chsh over (a, b, c, d); gamma defaults to
/// (1, 1, 1, -1).
SweepResult extended_chsh_sweep(const SweepConfig &cfg);

/// Draws random representations, POVMs and coefficients and evaluates every
/// separable-state bound on each draw. Reports the draw with the smallest
/// slack.
SweepResult separable_soundness_sweep(const SweepConfig &cfg);

/// Grid sweep selected by cfg.target.
SweepResult run_grid_sweep(const SweepConfig &cfg);

/// Re-evaluates the report of a grid sweep at explicit angles.
InequalityReport evaluate_grid_point(const SweepConfig &cfg, const std::vector<double> &settings);

// Random generators shared by the soundness sweep and the tests.

/// Haar-like random pure state |v><v| from standard normal components.
DensityOperator random_pure_state(std::mt19937_64 &rng, std::size_t d);

/// Random representation with 1..max_terms pure product terms.
SeparableRepresentation random_product_representation(std::mt19937_64 &rng, std::size_t d1, std::size_t d2,
                                                      std::size_t max_terms, bool symmetrized);

/// Random projective measurement, blended with white noise when `noisy`.
/// Outcomes are distinct values in [-bound, bound].
DiscretePovm random_povm(std::mt19937_64 &rng, std::size_t d, double bound, bool noisy, std::string label);

/// Random coefficients satisfying one of the two extended CHSH constraints.
GammaVector random_valid_gamma(std::mt19937_64 &rng);

}  // namespace bellkit

#endif
