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

#include "bellkit/measurements.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bellkit/error.h"

namespace bellkit {

OutcomeSet OutcomeSet::make(std::vector<double> values, double bound) {
    if (!(bound > 0.0) || !std::isfinite(bound)) {
        throw Error(ErrorCode::NonpositiveBound, "outcome bound must be positive and finite");
    }
    if (values.empty()) {
        throw Error(ErrorCode::InvalidOutcomes, "outcome set is empty");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]) || std::abs(values[i]) > bound) {
            throw Error(ErrorCode::InvalidOutcomes,
                        "outcome " + std::to_string(values[i]) + " exceeds bound " + std::to_string(bound));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (values[i] == values[j]) {
                throw Error(ErrorCode::InvalidOutcomes, "repeated outcome " + std::to_string(values[i]));
            }
        }
    }
    return OutcomeSet(std::move(values), bound);
}

std::size_t OutcomeSet::index_of(double value) const {
    auto it = std::find(values_.begin(), values_.end(), value);
    if (it == values_.end()) {
        throw Error(ErrorCode::UnknownOutcome, "no outcome " + std::to_string(value));
    }
    return static_cast<std::size_t>(it - values_.begin());
}

ComplexMatrix DiscretePovm::effect_of(const std::vector<double> &subset) const {
    ComplexMatrix out(dim());
    std::vector<bool> seen(outcomes_.size(), false);
    for (double v : subset) {
        const std::size_t k = outcomes_.index_of(v);
        if (!seen[k]) {
            out += effects_[k];
            seen[k] = true;
        }
    }
    return out;
}

DiscretePovm make_povm(std::string label, OutcomeSet outcomes, std::vector<ComplexMatrix> effects) {
    if (effects.size() != outcomes.size()) {
        throw Error(ErrorCode::DimMismatch, std::to_string(effects.size()) + " effects for " +
                                                std::to_string(outcomes.size()) + " outcomes");
    }
    const std::size_t d = effects.front().dim();
    ComplexMatrix total(d);
    ComplexMatrix first_moment(d);
    for (std::size_t k = 0; k < effects.size(); ++k) {
        if (effects[k].dim() != d) {
            throw Error(ErrorCode::DimMismatch, "effect " + std::to_string(k) + " has dimension " +
                                                    std::to_string(effects[k].dim()) + ", expected " +
                                                    std::to_string(d));
        }
        if (!effects[k].is_psd(kMatrixTol)) {
            throw Error(ErrorCode::NotPsdEffect, "effect " + std::to_string(k) + " is not positive semidefinite");
        }
        total += effects[k];
        first_moment += effects[k] * Complex(outcomes.values()[k]);
    }
    const double defect = max_abs_diff(total, ComplexMatrix::identity(d));
    if (defect > kMatrixTol) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "sum of effects differs from identity by %.3e", defect);
        throw Error(ErrorCode::Incomplete, buf);
    }
    const auto spectrum = hermitian_eigen(first_moment).values;
    const double norm = std::max(std::abs(spectrum.front()), std::abs(spectrum.back()));
    if (norm > outcomes.bound() + kBoundSlack) {
        throw Error(ErrorCode::InvalidOutcomes, "first-moment operator norm exceeds the outcome bound");
    }
    return DiscretePovm(std::move(label), std::move(outcomes), std::move(effects), std::move(first_moment));
}

const ComplexMatrix &effect_operator(const DiscretePovm &p) {
    return p.first_moment_;
}

ComplexMatrix spin_operator(double theta) {
    const double c = std::cos(2.0 * theta);
    const double s = std::sin(2.0 * theta);
    return ComplexMatrix::from_rows({{c, s}, {s, -c}});
}

DiscretePovm spin_observable(double theta) {
    const ComplexMatrix j = spin_operator(theta);
    const ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix plus = (id + j) * Complex(0.5);
    ComplexMatrix minus = (id - j) * Complex(0.5);
    char label[48];
    std::snprintf(label, sizeof(label), "theta=%.17g", theta);
    return make_povm(label, OutcomeSet::make({1.0, -1.0}, 1.0), {std::move(plus), std::move(minus)});
}

bool similarity_holds(const DiscretePovm &alice, const DiscretePovm &bob, double tol) {
    return max_abs_diff(effect_operator(alice), effect_operator(bob)) <= tol;
}

ComplexMatrix joint_expectation_operator(const DiscretePovm &p1, const DiscretePovm &p2, bool symmetrized) {
    if (symmetrized) {
        return sym_tensor(effect_operator(p1), effect_operator(p2));
    }
    return kron(effect_operator(p1), effect_operator(p2));
}

}  // namespace bellkit
