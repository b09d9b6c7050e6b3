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

#ifndef BELLKIT_EXPECTATIONS_H
#define BELLKIT_EXPECTATIONS_H

#include <string>
#include <utility>
#include <vector>

#include "bellkit/measurements.h"
#include "bellkit/states.h"

namespace bellkit {

/// One product-expectation value <lambda1 lambda2> and where it came from.
struct CorrelationRecord {
    std::string state_id;
    std::pair<std::string, std::string> setting_pair;
    bool symmetrized = false;
    double value = 0.0;
};

/// Probability that p1 lands in b1 and p2 lands in b2, i.e.
/// tr[rho (M1(b1) (x) M2(b2))] (or the symmetrized product). Clamped to [0, 1].
double joint_probability(const DensityOperator &rho, const DiscretePovm &p1, const DiscretePovm &p2,
                         const std::vector<double> &b1, const std::vector<double> &b2, bool symmetrized);

/// tr[rho joint_expectation_operator(p1, p2, symmetrized)]. Throws
/// ImaginaryTrace when the trace has an imaginary part above kMatrixTol.
CorrelationRecord correlation(const DensityOperator &rho, const DiscretePovm &p1, const DiscretePovm &p2,
                              bool symmetrized, std::string state_id = "rho");

/// Two Bob-side measurements evaluated jointly on the auxiliary two-copy
/// state of a representation: sigma2_of for plain representations,
/// sigma_sym_of for symmetrized ones. Always symmetrized.
CorrelationRecord bob_bob_correlation(const SeparableRepresentation &rep, const DiscretePovm &b1,
                                      const DiscretePovm &b2);

}  // namespace bellkit

#endif
