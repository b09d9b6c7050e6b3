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

#ifndef BELLKIT_QLINALG_H
#define BELLKIT_QLINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bellkit {

using Complex = std::complex<double>;

/// Default absolute tolerance for matrix predicates.
inline constexpr double kMatrixTol = 1e-10;

/// Dense square complex matrix stored row-major. Sized for desk-scale
/// Hilbert spaces (a few dozen dimensions at most).
class ComplexMatrix {
   public:
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::initializer_list<double> entries);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    /// |v><v| for an (unnormalized) column vector v.
    static ComplexMatrix projector(std::span<const Complex> v);

    std::size_t dim() const noexcept {
        return dim_;
    }
    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    /// Largest absolute entry.
    double max_abs() const;

    bool is_hermitian(double tol = kMatrixTol) const;
    /// Hermitian within tol and smallest eigenvalue >= -tol.
    bool is_psd(double tol = kMatrixTol) const;
    bool is_identity(double tol = kMatrixTol) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);

/// max_{ij} |a_ij - b_ij|; throws DimMismatch on differing sizes.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// tr[a b] without forming the product.
Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product, (i*db + k, j*db + l) -> a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// (v1 (x) v2 + v2 (x) v1) / 2. Bitwise symmetric in its arguments.
ComplexMatrix sym_tensor(const ComplexMatrix &v1, const ComplexMatrix &v2);

/// Flip operator on C^d (x) C^d: S(x (x) y) = y (x) x.
ComplexMatrix swap_operator(std::size_t d);

struct Eigensystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column i pairs with values[i]
};

/// Spectral decomposition of a Hermitian matrix. Throws NotHermitian when
/// max |a - a^dagger| exceeds tol.
Eigensystem hermitian_eigen(const ComplexMatrix &a, double tol = kMatrixTol);

}  // namespace bellkit

#endif
