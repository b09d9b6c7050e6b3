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

#include "bellkit/qlinalg.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "bellkit/error.h"

namespace bellkit {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimMismatch, std::string(what) + ": " + std::to_string(a.dim()) + " vs " +
                                                std::to_string(b.dim()));
    }
}

double hermitian_defect(const ComplexMatrix &a) {
    double defect = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            defect = std::max(defect, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return defect;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw Error(ErrorCode::DimMismatch, "matrix dimension must be positive");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> entries) {
    ComplexMatrix m(entries.size());
    std::size_t i = 0;
    for (double e : entries) {
        m(i, i) = e;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    ComplexMatrix m(rows.size());
    std::size_t i = 0;
    for (const auto &row : rows) {
        if (row.size() != rows.size()) {
            throw Error(ErrorCode::DimMismatch, "matrix rows must form a square");
        }
        std::size_t j = 0;
        for (const Complex &v : row) {
            m(i, j++) = v;
        }
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> v) {
    ComplexMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            m(j, i) = std::conj((*this)(i, j));
        }
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex &v : entries_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return hermitian_defect(*this) <= tol;
}

bool ComplexMatrix::is_psd(double tol) const {
    if (!is_hermitian(tol)) {
        return false;
    }
    return hermitian_eigen(*this, tol).values.front() >= -tol;
}

bool ComplexMatrix::is_identity(double tol) const {
    return max_abs_diff(*this, identity(dim_)) <= tol;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "matrix sum");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "matrix difference");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (Complex &v : entries_) {
        v *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matrix product");
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix operator*(ComplexMatrix a, Complex scale) {
    a *= scale;
    return a;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        m = std::max(m, std::abs(ea[k] - eb[k]));
    }
    return m;
}

Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "trace_of_product");
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            t += a(i, j) * b(j, i);
        }
    }
    return t;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix sym_tensor(const ComplexMatrix &v1, const ComplexMatrix &v2) {
    require_same_dim(v1, v2, "sym_tensor");
    const std::size_t d = v1.dim();
    ComplexMatrix out(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t l = 0; l < d; ++l) {
                    // Both products are formed the same way for either
                    // argument order, and complex add/multiply commute.
                    const Complex p = v1(i, j) * v2(k, l);
                    const Complex q = v2(i, j) * v1(k, l);
                    out(i * d + k, j * d + l) = 0.5 * (p + q);
                }
            }
        }
    }
    return out;
}

ComplexMatrix swap_operator(std::size_t d) {
    ComplexMatrix s(d * d);
    for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
            s(y * d + x, x * d + y) = 1.0;
        }
    }
    return s;
}

Eigensystem hermitian_eigen(const ComplexMatrix &a, double tol) {
    const double defect = hermitian_defect(a);
    if (defect > tol) {
        throw Error(ErrorCode::NotHermitian, "max |A - A^dagger| = " + std::to_string(defect));
    }
    const auto n = static_cast<Eigen::Index>(a.dim());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            // Symmetrize so the solver sees an exactly Hermitian input.
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            m(i, j) = 0.5 * (a(ui, uj) + std::conj(a(uj, ui)));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    Eigensystem out{std::vector<double>(a.dim()), ComplexMatrix(a.dim())};
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        for (Eigen::Index j = 0; j < n; ++j) {
            out.vectors(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = solver.eigenvectors()(j, i);
        }
    }
    return out;
}

}  // namespace bellkit
