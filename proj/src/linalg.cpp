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

#include "antidist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace antidist {

namespace {

constexpr double kPivotFloor = 1e-12;
constexpr double kResidualCeiling = 1e-8;
constexpr int kMaxJacobiSweeps = 100;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

void require_square(const ComplexMatrix& a, const char* what) {
    if (!a.is_square()) {
        throw Error(ErrorKind::NonSquare, std::string(what) + " needs a square matrix");
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) sum += std::norm(a(r, c));
        }
    }
    return std::sqrt(sum);
}

// Zeroes a(p,q) with the unitary W = diag(1, conj(phase)) * [[c, s], [-s, c]]
// acting on coordinates p and q, then accumulates W into v.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double magnitude = std::abs(apq);
    if (magnitude == 0.0) return;
    const Complex phase = apq / magnitude;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * magnitude);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex wpp = c;
    const Complex wpq = s;
    const Complex wqp = -s * std::conj(phase);
    const Complex wqq = c * std::conj(phase);

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * wpp + akq * wqp;
        a(k, q) = akp * wpq + akq * wqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(wpp) * apk + std::conj(wqp) * aqk;
        a(q, k) = std::conj(wpq) * apk + std::conj(wqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * wpp + vkq * wqp;
        v(k, q) = vkp * wpq + vkq * wqq;
    }
}

void axpy(CVector& y, Complex alpha, std::span<const Complex> x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix entry count does not equal rows*cols");
    }
    if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
        throw Error(ErrorKind::NonFinite, "matrix contains NaN or Inf");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
        throw Error(ErrorKind::NonFinite, "matrix contains NaN or Inf");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) { return outer(v, v); }

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
    ComplexMatrix m(u.size(), v.size());
    for (std::size_t r = 0; r < u.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = u[r] * std::conj(v[c]);
    }
    return m;
}

CVector ComplexMatrix::column(std::size_t c) const {
    CVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "matrix sum");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "matrix difference");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& z : entries_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_mul(a, b); }

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "product of " + std::to_string(a.rows()) + "x" +
                                                      std::to_string(a.cols()) + " and " +
                                                      std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex(0.0, 0.0)) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
        }
    }
    return out;
}

CVector mat_vec(const ComplexMatrix& a, std::span<const Complex> v) {
    if (a.cols() != v.size()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector product shape mismatch");
    }
    CVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

std::vector<double> mat_vec(const RealMatrix& a, std::span<const double> x) {
    if (a.cols() != x.size()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector product shape mismatch");
    }
    std::vector<double> out(a.rows(), 0.0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * x[c];
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
    }
    return out;
}

Complex trace(const ComplexMatrix& a) {
    require_square(a, "trace");
    Complex sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
    return sum;
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const Complex& z : a.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "distance");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) sum += std::norm(a.entries()[i] - b.entries()[i]);
    return std::sqrt(sum);
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "distance");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorKind::DimensionMismatch, "inner product of vectors with different lengths");
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

double norm(std::span<const Complex> v) {
    double sum = 0.0;
    for (const Complex& z : v) sum += std::norm(z);
    return std::sqrt(sum);
}

bool is_hermitian(const ComplexMatrix& a, Tolerance tol) {
    if (!a.is_square()) return false;
    double sum = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) sum += std::norm(a(r, c) - std::conj(a(c, r)));
    }
    return std::sqrt(sum) <= tol.eps;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& a, Tolerance tol) {
    require_square(a, "hermitian_eigen");
    if (!is_hermitian(a, tol)) {
        throw Error(ErrorKind::NonHermitian, "hermitian_eigen input is not Hermitian within tolerance");
    }
    const std::size_t n = a.rows();
    ComplexMatrix work = (a + adjoint(a)) * 0.5;
    ComplexMatrix vectors = ComplexMatrix::identity(n);

    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        if (off_diagonal_norm(work) <= tol.eps) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(work, vectors, p, q);
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return work(i, i).real() < work(j, j).real(); });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = work(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = vectors(r, order[k]);
    }
    return out;
}

bool is_projection(const ComplexMatrix& a, Tolerance tol) {
    if (!is_hermitian(a, tol)) return false;
    return frobenius_distance(mat_mul(a, a), a) <= tol.eps;
}

bool is_psd(const ComplexMatrix& a, Tolerance tol) {
    if (!is_hermitian(a, tol)) return false;
    const auto eig = hermitian_eigen(a, tol);
    return eig.values.empty() || eig.values.front() >= -tol.eps;
}

std::vector<double> solve_linear(const RealMatrix& a, std::span<const double> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "solve_linear needs a square system with matching rhs");
    }
    RealMatrix lu = a;
    std::vector<double> rhs(b.begin(), b.end());

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
        }
        if (std::abs(lu(pivot, col)) < kPivotFloor) {
            throw Error(ErrorKind::SingularSystem, "pivot below 1e-12 in column " + std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lu(col, c), lu(pivot, c));
            std::swap(rhs[col], rhs[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = lu(r, col) / lu(col, col);
            if (factor == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) lu(r, c) -= factor * lu(col, c);
            rhs[r] -= factor * rhs[col];
        }
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= lu(i, c) * x[c];
        x[i] = acc / lu(i, i);
    }

    const auto ax = mat_vec(a, x);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(ax[i] - b[i]));
    if (residual > kResidualCeiling) {
        throw Error(ErrorKind::SingularSystem, "residual " + std::to_string(residual) + " exceeds 1e-8", residual);
    }
    return x;
}

std::vector<CVector> orthonormal_basis(std::span<const CVector> vectors, Tolerance tol) {
    std::vector<CVector> basis;
    for (const CVector& v : vectors) {
        if (!basis.empty() && v.size() != basis.front().size()) {
            throw Error(ErrorKind::DimensionMismatch, "vectors of different lengths");
        }
        CVector residual = v;
        for (int pass = 0; pass < 2; ++pass) {
            for (const CVector& e : basis) axpy(residual, -inner(e, residual), e);
        }
        const double len = norm(residual);
        if (len <= tol.eps) continue;
        for (Complex& z : residual) z /= len;
        basis.push_back(std::move(residual));
    }
    return basis;
}

std::vector<CVector> orthonormal_complement(std::span<const CVector> vectors, std::size_t dim, Tolerance tol) {
    for (const CVector& v : vectors) {
        if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "vector length differs from dim");
    }
    std::vector<CVector> basis = orthonormal_basis(vectors, tol);
    const std::size_t span_rank = basis.size();
    // Greedily adds the standard basis vector with the largest residual.
    while (basis.size() < dim) {
        CVector best;
        double best_len = -1.0;
        for (std::size_t i = 0; i < dim; ++i) {
            CVector residual(dim, 0.0);
            residual[i] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (const CVector& e : basis) axpy(residual, -inner(e, residual), e);
            }
            const double len = norm(residual);
            if (len > best_len) {
                best_len = len;
                best = std::move(residual);
            }
        }
        for (Complex& z : best) z /= best_len;
        basis.push_back(std::move(best));
    }
    return {basis.begin() + static_cast<std::ptrdiff_t>(span_rank), basis.end()};
}

ComplexMatrix span_projector(std::span<const CVector> vectors, Tolerance tol) {
    if (vectors.empty()) {
        throw Error(ErrorKind::EmptyInput, "span_projector needs at least one vector");
    }
    const std::size_t dim = vectors.front().size();
    ComplexMatrix projector(dim, dim);
    for (const CVector& e : orthonormal_basis(vectors, tol)) projector += ComplexMatrix::outer(e);
    return projector;
}

}  // namespace antidist
