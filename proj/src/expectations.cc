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

#include "bellkit/expectations.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bellkit/error.h"

namespace bellkit {

namespace {

void check_dims(const DensityOperator &rho, const DiscretePovm &p1, const DiscretePovm &p2, bool symmetrized) {
    if (symmetrized && p1.dim() != p2.dim()) {
        throw Error(ErrorCode::DimMismatch, "symmetrized joint experiment needs equal POVM dimensions");
    }
    const auto &dims = rho.factor_dims();
    if (dims) {
        if (dims->first != p1.dim() || dims->second != p2.dim()) {
            throw Error(ErrorCode::DimMismatch, "POVM dimensions " + std::to_string(p1.dim()) + "x" +
                                                    std::to_string(p2.dim()) + " do not match state factors " +
                                                    std::to_string(dims->first) + "x" + std::to_string(dims->second));
        }
    } else if (p1.dim() * p2.dim() != rho.dim()) {
        throw Error(ErrorCode::DimMismatch, "POVM dimensions do not multiply to the state dimension");
    }
}

double real_trace(const ComplexMatrix &rho, const ComplexMatrix &op, double scale) {
    const Complex t = trace_of_product(rho, op);
    if (std::abs(t.imag()) > kMatrixTol * std::max(1.0, scale)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "imaginary part %.3e", t.imag());
        throw Error(ErrorCode::ImaginaryTrace, buf);
    }
    return t.real();
}

}  // namespace

double joint_probability(const DensityOperator &rho, const DiscretePovm &p1, const DiscretePovm &p2,
                         const std::vector<double> &b1, const std::vector<double> &b2, bool symmetrized) {
    check_dims(rho, p1, p2, symmetrized);
    const ComplexMatrix m1 = p1.effect_of(b1);
    const ComplexMatrix m2 = p2.effect_of(b2);
    const ComplexMatrix op = symmetrized ? sym_tensor(m1, m2) : kron(m1, m2);
    return std::clamp(real_trace(rho.matrix(), op, 1.0), 0.0, 1.0);
}

CorrelationRecord correlation(const DensityOperator &rho, const DiscretePovm &p1, const DiscretePovm &p2,
                              bool symmetrized, std::string state_id) {
    check_dims(rho, p1, p2, symmetrized);
    const double value =
        real_trace(rho.matrix(), joint_expectation_operator(p1, p2, symmetrized), p1.bound() * p2.bound());
    return {std::move(state_id), {p1.label(), p2.label()}, symmetrized, value};
}

CorrelationRecord bob_bob_correlation(const SeparableRepresentation &rep, const DiscretePovm &b1,
                                      const DiscretePovm &b2) {
    if (b1.dim() != rep.right_dim() || b2.dim() != rep.right_dim()) {
        throw Error(ErrorCode::DimMismatch, "Bob POVMs must act on the right factor");
    }
    if (rep.symmetrized()) {
        return correlation(sigma_sym_of(rep), b1, b2, true, "sigma");
    }
    return correlation(sigma2_of(rep), b1, b2, true, "sigma2");
}

}  // namespace bellkit
