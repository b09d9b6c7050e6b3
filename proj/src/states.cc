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

#include "bellkit/states.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "bellkit/error.h"

namespace bellkit {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

ComplexMatrix two_copy_sum(const SeparableRepresentation &rep, bool use_left, bool use_right) {
    const std::size_t d = use_left ? rep.left_dim() : rep.right_dim();
    ComplexMatrix out(d * d);
    const double share = (use_left && use_right) ? 0.5 : 1.0;
    for (const ProductTerm &t : rep.terms()) {
        if (use_left) {
            out += kron(t.left.matrix(), t.left.matrix()) * Complex(share * t.weight);
        }
        if (use_right) {
            out += kron(t.right.matrix(), t.right.matrix()) * Complex(share * t.weight);
        }
    }
    return out;
}

}  // namespace

DensityOperator make_density(ComplexMatrix m, std::optional<FactorDims> factor_dims) {
    if (factor_dims && factor_dims->first * factor_dims->second != m.dim()) {
        throw Error(ErrorCode::DimMismatch, "factor dims " + std::to_string(factor_dims->first) + "x" +
                                                std::to_string(factor_dims->second) + " do not match dimension " +
                                                std::to_string(m.dim()));
    }
    const double herm_defect = max_abs_diff(m, m.adjoint());
    if (herm_defect > kMatrixTol) {
        throw Error(ErrorCode::NotHermitian, "max |rho - rho^dagger| = " + num(herm_defect));
    }
    const Complex tr = m.trace();
    const double trace_defect = std::abs(tr - 1.0);
    if (trace_defect > kMatrixTol) {
        throw Error(ErrorCode::TraceNotOne, "trace = " + std::to_string(tr.real()) + ", defect " + num(trace_defect));
    }
    const double min_eig = hermitian_eigen(m).values.front();
    if (min_eig < -kMatrixTol) {
        throw Error(ErrorCode::NotPsd, "smallest eigenvalue " + num(min_eig));
    }
    return DensityOperator(std::move(m), factor_dims);
}

SeparableRepresentation SeparableRepresentation::make(std::vector<ProductTerm> terms, bool symmetrized) {
    if (terms.empty()) {
        throw Error(ErrorCode::InvalidRepresentation, "representation needs at least one term");
    }
    double total = 0.0;
    const std::size_t dl = terms.front().left.dim();
    const std::size_t dr = terms.front().right.dim();
    for (std::size_t m = 0; m < terms.size(); ++m) {
        const ProductTerm &t = terms[m];
        if (!(t.weight > 0.0)) {
            throw Error(ErrorCode::InvalidRepresentation, "term " + std::to_string(m) + " has nonpositive weight");
        }
        if (t.left.dim() != dl || t.right.dim() != dr) {
            throw Error(ErrorCode::InvalidRepresentation, "term " + std::to_string(m) + " changes factor dimensions");
        }
        total += t.weight;
    }
    if (std::abs(total - 1.0) > kMatrixTol) {
        throw Error(ErrorCode::InvalidRepresentation, "weights sum to " + std::to_string(total));
    }
    if (symmetrized && dl != dr) {
        throw Error(ErrorCode::InvalidRepresentation, "symmetrized representation needs equal factor dimensions");
    }
    return SeparableRepresentation(std::move(terms), symmetrized);
}

DensityOperator rho_zero() {
    const ComplexMatrix up = ComplexMatrix::diagonal({1.0, 0.0});
    const ComplexMatrix down = ComplexMatrix::diagonal({0.0, 1.0});
    ComplexMatrix m = kron(up, down) + kron(down, up);
    m *= 0.5;
    return make_density(std::move(m), FactorDims{2, 2});
}

SeparableRepresentation rho_zero_representation(bool symmetrized) {
    const DensityOperator up = make_density(ComplexMatrix::diagonal({1.0, 0.0}));
    const DensityOperator down = make_density(ComplexMatrix::diagonal({0.0, 1.0}));
    if (symmetrized) {
        return SeparableRepresentation::make({{1.0, up, down}}, true);
    }
    return SeparableRepresentation::make({{0.5, up, down}, {0.5, down, up}}, false);
}

DensityOperator maximally_mixed(std::size_t d1, std::size_t d2) {
    ComplexMatrix m = ComplexMatrix::identity(d1 * d2);
    m *= 1.0 / static_cast<double>(d1 * d2);
    return make_density(std::move(m), FactorDims{d1, d2});
}

DensityOperator assemble(const SeparableRepresentation &rep) {
    const std::size_t dl = rep.left_dim();
    const std::size_t dr = rep.right_dim();
    ComplexMatrix out(dl * dr);
    for (const ProductTerm &t : rep.terms()) {
        if (rep.symmetrized()) {
            out += sym_tensor(t.left.matrix(), t.right.matrix()) * Complex(t.weight);
        } else {
            out += kron(t.left.matrix(), t.right.matrix()) * Complex(t.weight);
        }
    }
    return make_density(std::move(out), FactorDims{dl, dr});
}

DensityOperator sigma2_of(const SeparableRepresentation &rep) {
    if (rep.symmetrized()) {
        throw Error(ErrorCode::SymmetrizedRepUnsupported, "sigma2_of needs an unsymmetrized representation");
    }
    const std::size_t d = rep.right_dim();
    return make_density(two_copy_sum(rep, false, true), FactorDims{d, d});
}

DensityOperator sigma1_of(const SeparableRepresentation &rep) {
    if (rep.symmetrized()) {
        throw Error(ErrorCode::SymmetrizedRepUnsupported, "sigma1_of needs an unsymmetrized representation");
    }
    const std::size_t d = rep.left_dim();
    return make_density(two_copy_sum(rep, true, false), FactorDims{d, d});
}

DensityOperator sigma_sym_of(const SeparableRepresentation &rep) {
    if (rep.left_dim() != rep.right_dim()) {
        throw Error(ErrorCode::DimMismatch, "sigma_sym_of needs equal factor dimensions");
    }
    const std::size_t d = rep.left_dim();
    return make_density(two_copy_sum(rep, true, true), FactorDims{d, d});
}

SeparableRepresentation mix_representations(const SeparableRepresentation &r1, const SeparableRepresentation &r2,
                                            double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "mixing weight " + std::to_string(alpha) + " outside [0, 1]");
    }
    if (r1.symmetrized() != r2.symmetrized() || r1.left_dim() != r2.left_dim() ||
        r1.right_dim() != r2.right_dim()) {
        throw Error(ErrorCode::IncompatibleReps, "representations differ in dimensions or symmetrization");
    }
    const double gap = max_abs_diff(assemble(r1).matrix(), assemble(r2).matrix());
    if (gap > kSameStateTol) {
        throw Error(ErrorCode::DifferentStates, "representations assemble to states " + num(gap) + " apart");
    }
    std::vector<ProductTerm> terms;
    if (alpha > 0.0) {
        for (const ProductTerm &t : r1.terms()) {
            terms.push_back({alpha * t.weight, t.left, t.right});
        }
    }
    if (alpha < 1.0) {
        for (const ProductTerm &t : r2.terms()) {
            terms.push_back({(1.0 - alpha) * t.weight, t.left, t.right});
        }
    }
    return SeparableRepresentation::make(std::move(terms), r1.symmetrized());
}

bool is_swap_symmetric(const DensityOperator &rho, double tol) {
    const auto &dims = rho.factor_dims();
    if (!dims || dims->first != dims->second) {
        throw Error(ErrorCode::NotBipartiteSquare, "swap symmetry needs factor dims (d, d)");
    }
    const ComplexMatrix s = swap_operator(dims->first);
    return max_abs_diff(s * rho.matrix() * s, rho.matrix()) <= tol;
}

bool is_special_form(const SeparableRepresentation &rep, double tol) {
    if (rep.left_dim() != rep.right_dim()) {
        return false;
    }
    for (const ProductTerm &t : rep.terms()) {
        if (max_abs_diff(t.left.matrix(), t.right.matrix()) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace bellkit
