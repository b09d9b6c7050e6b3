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

#ifndef BELLKIT_MEASUREMENTS_H
#define BELLKIT_MEASUREMENTS_H

#include <cstddef>
#include <string>
#include <vector>

#include "bellkit/qlinalg.h"

namespace bellkit {

/// Allowed slack on |eigenvalue(W)| <= C.
inline constexpr double kBoundSlack = 1e-9;

/// Finite list of distinct real outcomes, all bounded in magnitude by C.
class OutcomeSet {
   public:
    /// Throws InvalidOutcomes (empty, repeated or out-of-bound values) or
    /// NonpositiveBound.
    static OutcomeSet make(std::vector<double> values, double bound);

    const std::vector<double> &values() const noexcept {
        return values_;
    }
    double bound() const noexcept {
        return bound_;
    }
    std::size_t size() const noexcept {
        return values_.size();
    }
    /// Index of an outcome value; throws UnknownOutcome.
    std::size_t index_of(double value) const;

   private:
    OutcomeSet(std::vector<double> values, double bound) : values_(std::move(values)), bound_(bound) {
    }

    std::vector<double> values_;
    double bound_;
};

/// A POVM with one positive effect per outcome, summing to the identity.
/// The label carries the setting parameter; it is not interpreted.
class DiscretePovm {
   public:
    const std::string &label() const noexcept {
        return label_;
    }
    const OutcomeSet &outcomes() const noexcept {
        return outcomes_;
    }
    const std::vector<ComplexMatrix> &effects() const noexcept {
        return effects_;
    }
    std::size_t dim() const noexcept {
        return effects_.front().dim();
    }
    double bound() const noexcept {
        return outcomes_.bound();
    }
    /// Sum of the effects of the given outcome values.
    ComplexMatrix effect_of(const std::vector<double> &subset) const;

   private:
    friend DiscretePovm make_povm(std::string, OutcomeSet, std::vector<ComplexMatrix>);
    friend const ComplexMatrix &effect_operator(const DiscretePovm &);

    DiscretePovm(std::string label, OutcomeSet outcomes, std::vector<ComplexMatrix> effects, ComplexMatrix first_moment)
        : label_(std::move(label)),
          outcomes_(std::move(outcomes)),
          effects_(std::move(effects)),
          first_moment_(std::move(first_moment)) {
    }

    std::string label_;
    OutcomeSet outcomes_;
    std::vector<ComplexMatrix> effects_;
    ComplexMatrix first_moment_;
};

/// Throws DimMismatch, NotPsdEffect (naming the index) or Incomplete (naming
/// the max-entry defect of sum(effects) - I).
DiscretePovm make_povm(std::string label, OutcomeSet outcomes, std::vector<ComplexMatrix> effects);

/// W = sum_i lambda_i E_i. Its operator norm is checked against the outcome
/// bound when the POVM is built.
const ComplexMatrix &effect_operator(const DiscretePovm &p);

/// J(theta) = (|up><up| - |down><down|) cos 2theta + (|up><down| + |down><up|) sin 2theta.
ComplexMatrix spin_operator(double theta);

/// Projective +-1 measurement of J(theta).
DiscretePovm spin_observable(double theta);

/// Alice and Bob devices are similar when their first-moment operators
/// agree. Full POVMs are not compared.
bool similarity_holds(const DiscretePovm &alice, const DiscretePovm &bob, double tol = kMatrixTol);

/// W1 (x) W2, or its symmetrized form.
ComplexMatrix joint_expectation_operator(const DiscretePovm &p1, const DiscretePovm &p2, bool symmetrized);

}  // namespace bellkit

#endif
