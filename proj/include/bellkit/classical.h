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

#ifndef BELLKIT_CLASSICAL_H
#define BELLKIT_CLASSICAL_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bellkit/inequalities.h"

namespace bellkit {

/// A property measured non-perturbingly: one value per parameter point.
struct ClassicalObservable {
    std::vector<double> values;
    double bound = 1.0;
};

/// Local hidden variable model on a finite parameter space.
class LhvModel {
   public:
    /// Throws InvalidDistribution (negative or non-normalized probabilities,
    /// tolerance 1e-12) or InvalidModel (size mismatches, |f| > C where the
    /// probability is nonzero, nonpositive bounds).
    static LhvModel make(std::vector<std::string> points, std::vector<double> probabilities,
                         std::map<std::string, ClassicalObservable> observables);

    const std::vector<std::string> &points() const noexcept {
        return points_;
    }
    const std::vector<double> &probabilities() const noexcept {
        return probabilities_;
    }
    const std::map<std::string, ClassicalObservable> &observables() const noexcept {
        return observables_;
    }
    /// Throws UnknownProperty.
    const ClassicalObservable &observable(const std::string &label) const;

   private:
    LhvModel(std::vector<std::string> points, std::vector<double> probabilities,
             std::map<std::string, ClassicalObservable> observables)
        : points_(std::move(points)), probabilities_(std::move(probabilities)), observables_(std::move(observables)) {
    }

    std::vector<std::string> points_;
    std::vector<double> probabilities_;
    std::map<std::string, ClassicalObservable> observables_;
};

/// sum_theta pi(theta) f1(theta) f2(theta).
double classical_correlation(const LhvModel &m, const std::string &p1, const std::string &p2);

/// |<A D1> - <A D2>| <= C1 C2 - (C1 / C2) <D1 D2>. D1 and D2 must share a
/// bound (BoundMismatch otherwise).
InequalityReport classical_bell_report(const LhvModel &m, const std::string &a, const std::string &d1,
                                       const std::string &d2, double tol = kInequalityTol);

/// Extended CHSH with the classical correlations <AB>, <CB>, <CD>, <AD>.
/// The declared bounds of a, c must not exceed c1, those of b, d not c2.
InequalityReport classical_extended_chsh(const LhvModel &m, const GammaVector &gammas, const std::string &a,
                                         const std::string &c, const std::string &b, const std::string &d, double c1,
                                         double c2, double tol = kInequalityTol);

/// Seeded random model: probabilities from a normalized positive draw and
/// every observable uniform in [-C, C].
LhvModel random_model(std::uint64_t seed, std::size_t theta_size, const std::map<std::string, double> &bounds);

}  // namespace bellkit

#endif
