// Copyright 2026 The antidist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex linear algebra for the small operators used throughout the
// library (dimensions of a few dozen at most). Everything here is a pure
// function on value types.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "antidist/error.hpp"

namespace antidist {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Absolute threshold shared by the projector, positivity and closure tests.
struct Tolerance {
    double eps = 1e-9;

    constexpr Tolerance() = default;
    constexpr explicit Tolerance(double value) : eps(value) {
        if (!(value > 0.0) || value != value || value > 1e300) {
            throw Error(ErrorKind::InvalidArgument, "tolerance must be a positive finite number");
        }
    }
};

/// Row-major dense complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    /// Zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Takes `entries` in row-major order; rejects NaN/Inf and size mismatch.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><v|
    static ComplexMatrix outer(std::span<const Complex> v);
    /// |u><v|
    static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return entries_; }
    CVector column(std::size_t c) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s); }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s); }
    friend ComplexMatrix operator-(ComplexMatrix a) { return a *= Complex(-1.0); }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Row-major dense real matrix, used for Gram systems and small LPs.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}
    RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static RealMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const double> entries() const noexcept { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
CVector mat_vec(const ComplexMatrix& a, std::span<const Complex> v);
ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
std::vector<double> mat_vec(const RealMatrix& a, std::span<const double> x);

double frobenius_norm(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
/// Largest entry modulus of a - b.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// <u|v>, antilinear in the first argument.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);

bool is_hermitian(const ComplexMatrix& a, Tolerance tol = {});

struct HermitianEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Cyclic complex Jacobi. Rejects input whose anti-Hermitian part exceeds
/// tol.eps in Frobenius norm.
HermitianEigen hermitian_eigen(const ComplexMatrix& a, Tolerance tol = {});

bool is_projection(const ComplexMatrix& a, Tolerance tol = {});
bool is_psd(const ComplexMatrix& a, Tolerance tol = {});

/// Gaussian elimination with partial pivoting. Throws SingularSystem when a
/// pivot falls below 1e-12 or the residual exceeds 1e-8.
std::vector<double> solve_linear(const RealMatrix& a, std::span<const double> b);

/// Modified Gram-Schmidt (two passes). Inputs whose residual norm is at most
/// tol.eps are dropped.
std::vector<CVector> orthonormal_basis(std::span<const CVector> vectors, Tolerance tol = {});

/// Orthonormal basis of the orthogonal complement of span(`vectors`) in C^dim,
/// obtained by completing with the standard basis.
std::vector<CVector> orthonormal_complement(std::span<const CVector> vectors, std::size_t dim,
                                            Tolerance tol = {});

/// Orthogonal projector onto span(`vectors`).
ComplexMatrix span_projector(std::span<const CVector> vectors, Tolerance tol = {});

}  // namespace antidist
