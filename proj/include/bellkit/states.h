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

#ifndef BELLKIT_STATES_H
#define BELLKIT_STATES_H

#include <cstddef>
#include <optional>
#include <vector>

#include "bellkit/qlinalg.h"

namespace bellkit {

/// Tolerance for deciding that two representations describe one state.
inline constexpr double kSameStateTol = 1e-9;

struct FactorDims {
    std::size_t first;
    std::size_t second;

    bool operator==(const FactorDims &) const = default;
};

/// A validated state: Hermitian, unit trace and positive semidefinite, all
/// within kMatrixTol. Optionally carries its bipartite factorization.
class DensityOperator {
   public:
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    const std::optional<FactorDims> &factor_dims() const noexcept {
        return factor_dims_;
    }
    std::size_t dim() const noexcept {
        return matrix_.dim();
    }

   private:
    DensityOperator(ComplexMatrix m, std::optional<FactorDims> dims)
        : matrix_(std::move(m)), factor_dims_(dims) {
    }
    friend DensityOperator make_density(ComplexMatrix m, std::optional<FactorDims> factor_dims);

    ComplexMatrix matrix_;
    std::optional<FactorDims> factor_dims_;
};

/// Validation gateway. Throws NotHermitian, TraceNotOne or NotPsd with the
/// measured defect, or DimMismatch when factor_dims does not multiply out.
DensityOperator make_density(ComplexMatrix m, std::optional<FactorDims> factor_dims = std::nullopt);

struct ProductTerm {
    double weight;
    DensityOperator left;
    DensityOperator right;
};

/// A convex decomposition sum_m weight_m left_m (x) right_m of a bipartite
/// state. When symmetrized, each product is replaced by its symmetrized
/// tensor product and both factors live on the same space.
class SeparableRepresentation {
   public:
    /// Throws InvalidRepresentation on empty terms, nonpositive weights,
    /// weights not summing to one, or inconsistent factor dimensions.
    static SeparableRepresentation make(std::vector<ProductTerm> terms, bool symmetrized);

    const std::vector<ProductTerm> &terms() const noexcept {
        return terms_;
    }
    bool symmetrized() const noexcept {
        return symmetrized_;
    }
    std::size_t left_dim() const noexcept {
        return terms_.front().left.dim();
    }
    std::size_t right_dim() const noexcept {
        return terms_.front().right.dim();
    }

   private:
    SeparableRepresentation(std::vector<ProductTerm> terms, bool symmetrized)
        : terms_(std::move(terms)), symmetrized_(symmetrized) {
    }

    std::vector<ProductTerm> terms_;
    bool symmetrized_;
};

/// (|up><up| (x) |down><down| + |down><down| (x) |up><up|) / 2 on C^2 (x) C^2.
DensityOperator rho_zero();

/// The two textbook decompositions of rho_zero: plain,
/// (1/2, up, down) + (1/2, down, up), or symmetrized, (1, up, down).
SeparableRepresentation rho_zero_representation(bool symmetrized);

/// I / (d1 d2) with factor dims (d1, d2).
DensityOperator maximally_mixed(std::size_t d1, std::size_t d2);

/// The state a representation describes.
DensityOperator assemble(const SeparableRepresentation &rep);

/// sum_m weight_m right_m (x) right_m. Throws SymmetrizedRepUnsupported for
/// symmetrized representations; use sigma_sym_of there.
DensityOperator sigma2_of(const SeparableRepresentation &rep);

/// sum_m weight_m left_m (x) left_m.
DensityOperator sigma1_of(const SeparableRepresentation &rep);

/// sum_m (weight_m / 2)(left_m (x) left_m + right_m (x) right_m), for
/// representations whose factors share one space.
DensityOperator sigma_sym_of(const SeparableRepresentation &rep);

/// Convex mixture alpha r1 + (1 - alpha) r2 of two representations of the
/// same state. Zero-weight terms are dropped.
SeparableRepresentation mix_representations(const SeparableRepresentation &r1, const SeparableRepresentation &r2,
                                            double alpha);

/// Invariance under conjugation by the flip operator, S rho S = rho.
bool is_swap_symmetric(const DensityOperator &rho, double tol = kMatrixTol);

/// Every term has left == right within tol.
bool is_special_form(const SeparableRepresentation &rep, double tol = kMatrixTol);

}  // namespace bellkit

#endif
