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

#include "bellkit/classical.h"

#include <cmath>
#include <random>

#include "bellkit/error.h"

namespace bellkit {

namespace {

constexpr double kDistributionTol = 1e-12;

CorrelationRecord record(const LhvModel &m, const std::string &p1, const std::string &p2) {
    return {"lhv", {p1, p2}, false, classical_correlation(m, p1, p2)};
}

}  // namespace

LhvModel LhvModel::make(std::vector<std::string> points, std::vector<double> probabilities,
                        std::map<std::string, ClassicalObservable> observables) {
    if (points.empty() || points.size() != probabilities.size()) {
        throw Error(ErrorCode::InvalidModel, "need one probability per parameter point");
    }
    double total = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw Error(ErrorCode::InvalidDistribution, "probabilities must be nonnegative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kDistributionTol) {
        throw Error(ErrorCode::InvalidDistribution, "probabilities sum to " + std::to_string(total));
    }
    for (const auto &[label, obs] : observables) {
        if (obs.values.size() != points.size()) {
            throw Error(ErrorCode::InvalidModel, "observable " + label + " needs one value per point");
        }
        if (!(obs.bound > 0.0) || !std::isfinite(obs.bound)) {
            throw Error(ErrorCode::InvalidModel, "observable " + label + " has a nonpositive bound");
        }
        for (std::size_t k = 0; k < points.size(); ++k) {
            if (probabilities[k] > 0.0 && !(std::abs(obs.values[k]) <= obs.bound)) {
                throw Error(ErrorCode::InvalidModel,
                            "observable " + label + " exceeds its bound at point " + points[k]);
            }
        }
    }
    return LhvModel(std::move(points), std::move(probabilities), std::move(observables));
}

const ClassicalObservable &LhvModel::observable(const std::string &label) const {
    auto it = observables_.find(label);
    if (it == observables_.end()) {
        throw Error(ErrorCode::UnknownProperty, "no observable " + label);
    }
    return it->second;
}

double classical_correlation(const LhvModel &m, const std::string &p1, const std::string &p2) {
    const ClassicalObservable &f1 = m.observable(p1);
    const ClassicalObservable &f2 = m.observable(p2);
    double sum = 0.0;
    for (std::size_t k = 0; k < m.probabilities().size(); ++k) {
        if (m.probabilities()[k] > 0.0) {
            sum += m.probabilities()[k] * f1.values[k] * f2.values[k];
        }
    }
    return sum;
}

InequalityReport classical_bell_report(const LhvModel &m, const std::string &a, const std::string &d1,
                                       const std::string &d2, double tol) {
    const double c1 = m.observable(a).bound;
    const double c2 = m.observable(d1).bound;
    if (m.observable(d2).bound != c2) {
        throw Error(ErrorCode::BoundMismatch, d1 + " and " + d2 + " declare different bounds");
    }
    InequalityReport r = bell_original(record(m, a, d1), record(m, a, d2), record(m, d1, d2), c1, c2, tol);
    r.name = "classical_bell";
    return r;
}

InequalityReport classical_extended_chsh(const LhvModel &m, const GammaVector &gammas, const std::string &a,
                                         const std::string &c, const std::string &b, const std::string &d, double c1,
                                         double c2, double tol) {
    if (m.observable(a).bound > c1 || m.observable(c).bound > c1) {
        throw Error(ErrorCode::BoundMismatch, "Alice observables exceed C1");
    }
    if (m.observable(b).bound > c2 || m.observable(d).bound > c2) {
        throw Error(ErrorCode::BoundMismatch, "Bob observables exceed C2");
    }
    InequalityReport r =
        extended_chsh(gammas, record(m, a, b), record(m, c, b), record(m, c, d), record(m, a, d), c1, c2, tol);
    r.name = "classical_extended_chsh";
    return r;
}

LhvModel random_model(std::uint64_t seed, std::size_t theta_size, const std::map<std::string, double> &bounds) {
    if (theta_size == 0) {
        throw Error(ErrorCode::InvalidModel, "theta_size must be at least 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<std::string> points;
    std::vector<double> probabilities;
    double total = 0.0;
    for (std::size_t k = 0; k < theta_size; ++k) {
        points.push_back("t" + std::to_string(k));
        // Shifted away from zero so every point carries weight.
        probabilities.push_back(unit(rng) + 1e-3);
        total += probabilities.back();
    }
    for (double &p : probabilities) {
        p /= total;
    }
    // Absorb the rounding residue so the sum is as close to 1 as possible.
    double head = 0.0;
    for (std::size_t k = 1; k < theta_size; ++k) {
        head += probabilities[k];
    }
    probabilities[0] = 1.0 - head;

    std::map<std::string, ClassicalObservable> observables;
    for (const auto &[label, bound] : bounds) {
        ClassicalObservable obs{{}, bound};
        for (std::size_t k = 0; k < theta_size; ++k) {
            obs.values.push_back(bound * (2.0 * unit(rng) - 1.0));
        }
        observables.emplace(label, std::move(obs));
    }
    return LhvModel::make(std::move(points), std::move(probabilities), std::move(observables));
}

}  // namespace bellkit
