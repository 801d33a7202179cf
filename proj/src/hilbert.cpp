// Copyright 2026 The Welcherweg Authors
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

#include "welcherweg/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "welcherweg/error.hpp"

namespace welcherweg::hilbert {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        fail(ErrorCode::DimensionMismatch,
             std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

StateVector::StateVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    require(!entries_.empty(), ErrorCode::InvalidArgument, "state vector must have positive dimension");
}

StateVector::StateVector(std::initializer_list<Complex> entries) : StateVector(std::vector<Complex>(entries)) {
}

StateVector StateVector::basis(std::size_t dim, std::size_t k) {
    require(k < dim, ErrorCode::InvalidArgument, "basis index out of range");
    std::vector<Complex> e(dim);
    e[k] = 1.0;
    return StateVector(std::move(e));
}

double StateVector::norm_squared() const noexcept {
    double s = 0;
    for (const auto &z : entries_) {
        s += std::norm(z);
    }
    return s;
}

bool StateVector::is_normalized(double tol) const noexcept {
    return std::abs(norm_squared() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
    double n = std::sqrt(norm_squared());
    require(n > 0, ErrorCode::InvalidArgument, "cannot normalize the zero vector");
    return Complex(1.0 / n) * *this;
}

StateVector operator+(const StateVector &a, const StateVector &b) {
    require_same_dim(a.dim(), b.dim(), "vector sum");
    std::vector<Complex> r(a.dim());
    for (std::size_t i = 0; i < r.size(); i++) {
        r[i] = a.entries_[i] + b.entries_[i];
    }
    return StateVector(std::move(r));
}

StateVector operator-(const StateVector &a, const StateVector &b) {
    require_same_dim(a.dim(), b.dim(), "vector difference");
    std::vector<Complex> r(a.dim());
    for (std::size_t i = 0; i < r.size(); i++) {
        r[i] = a.entries_[i] - b.entries_[i];
    }
    return StateVector(std::move(r));
}

StateVector operator*(Complex s, const StateVector &v) {
    std::vector<Complex> r(v.entries_);
    for (auto &z : r) {
        z *= s;
    }
    return StateVector(std::move(r));
}

Complex inner(const StateVector &u, const StateVector &v) {
    require_same_dim(u.dim(), v.dim(), "inner product");
    Complex s = 0;
    for (std::size_t i = 0; i < u.dim(); i++) {
        s += std::conj(u[i]) * v[i];
    }
    return s;
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    require(dim > 0, ErrorCode::InvalidArgument, "matrix must have positive dimension");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), entries_(std::move(row_major)) {
    require(dim > 0, ErrorCode::InvalidArgument, "matrix must have positive dimension");
    require(entries_.size() == dim * dim, ErrorCode::DimensionMismatch, "matrix entry count does not match dim*dim");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : ComplexMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto &row : rows) {
        require(row.size() == dim_, ErrorCode::DimensionMismatch, "matrix rows must be square");
        std::copy(row.begin(), row.end(), entries_.begin() + static_cast<std::ptrdiff_t>(r * dim_));
        r++;
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(const StateVector &ket, const StateVector &bra) {
    require_same_dim(ket.dim(), bra.dim(), "outer product");
    ComplexMatrix m(ket.dim());
    for (std::size_t i = 0; i < ket.dim(); i++) {
        for (std::size_t j = 0; j < ket.dim(); j++) {
            m(i, j) = ket[i] * std::conj(bra[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t j = 0; j < dim_; j++) {
            m(j, i) = std::conj((*this)(i, j));
        }
    }
    return m;
}

StateVector ComplexMatrix::apply(const StateVector &v) const {
    require_same_dim(dim_, v.dim(), "matrix-vector product");
    std::vector<Complex> r(dim_);
    for (std::size_t i = 0; i < dim_; i++) {
        Complex s = 0;
        for (std::size_t j = 0; j < dim_; j++) {
            s += (*this)(i, j) * v[j];
        }
        r[i] = s;
    }
    return StateVector(std::move(r));
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim_, b.dim_, "matrix sum");
    ComplexMatrix r(a.dim_);
    for (std::size_t i = 0; i < r.entries_.size(); i++) {
        r.entries_[i] = a.entries_[i] + b.entries_[i];
    }
    return r;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim_, b.dim_, "matrix difference");
    ComplexMatrix r(a.dim_);
    for (std::size_t i = 0; i < r.entries_.size(); i++) {
        r.entries_[i] = a.entries_[i] - b.entries_[i];
    }
    return r;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim_, b.dim_, "matrix product");
    const std::size_t n = a.dim_;
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t k = 0; k < n; k++) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < n; j++) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
    ComplexMatrix r(a);
    for (auto &z : r.entries_) {
        z *= s;
    }
    return r;
}

double max_abs_norm(const ComplexMatrix &a) noexcept {
    double m = 0;
    for (const auto &z : a.entries()) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    return max_abs_norm(a - a.adjoint()) <= tol;
}

bool is_projector(const ComplexMatrix &a, double tol) {
    return is_hermitian(a, tol) && max_abs_norm(a * a - a) <= tol;
}

ComplexMatrix projector_onto(std::span<const StateVector> basis) {
    require(!basis.empty(), ErrorCode::InvalidArgument, "projector_onto needs at least one vector");
    const std::size_t dim = basis.front().dim();
    for (const auto &v : basis) {
        require_same_dim(dim, v.dim(), "projector_onto");
    }
    require(basis.size() <= dim, ErrorCode::RankDeficient, "more vectors than the space dimension");

    std::vector<StateVector> ortho;
    ortho.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); k++) {
        StateVector w = basis[k];
        const double original = std::sqrt(w.norm_squared());
        require(original > 0, ErrorCode::RankDeficient, "zero vector in basis");
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &q : ortho) {
                w = w - inner(q, w) * q;
            }
        }
        const double residual = std::sqrt(w.norm_squared());
        if (residual <= kRankTolerance * std::max(1.0, original)) {
            fail(ErrorCode::RankDeficient, "basis vector " + std::to_string(k) + " is linearly dependent on the others");
        }
        ortho.push_back(Complex(1.0 / residual) * w);
    }

    ComplexMatrix p(dim);
    for (const auto &q : ortho) {
        p = p + ComplexMatrix::outer(q, q);
    }
    // Exact hermiticity: average with the adjoint to cancel rounding asymmetry.
    return Complex(0.5) * (p + p.adjoint());
}

ComplexMatrix projector_onto(std::initializer_list<StateVector> basis) {
    return projector_onto(std::span<const StateVector>(basis.begin(), basis.size()));
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim(), b.dim(), "commutator");
    return a * b - b * a;
}

CommuteCheck commute_check(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    require(tol > 0, ErrorCode::InvalidArgument, "commute_check tolerance must be positive");
    const double n = max_abs_norm(commutator(a, b));
    return {n <= tol, n};
}

Complex expectation(const ComplexMatrix &a, const StateVector &psi) {
    return inner(psi, a.apply(psi));
}

UncertaintyProduct uncertainty_product(const ComplexMatrix &a, const ComplexMatrix &b, const StateVector &psi) {
    require_same_dim(a.dim(), b.dim(), "uncertainty_product");
    require_same_dim(a.dim(), psi.dim(), "uncertainty_product");
    require(is_hermitian(a), ErrorCode::InvalidArgument, "uncertainty_product: A is not hermitian");
    require(is_hermitian(b), ErrorCode::InvalidArgument, "uncertainty_product: B is not hermitian");
    require(psi.is_normalized(), ErrorCode::InvalidArgument, "uncertainty_product: psi is not normalized");

    auto spread = [&](const ComplexMatrix &x) {
        const double mean = expectation(x, psi).real();
        const double second = expectation(x * x, psi).real();
        return std::sqrt(std::max(0.0, second - mean * mean));
    };
    const double lhs = spread(a) * spread(b);
    const double rhs = 0.5 * std::abs(expectation(commutator(a, b), psi));
    return {lhs, rhs};
}

bool is_eigenvector(const ComplexMatrix &a, const StateVector &v, double tol) {
    const double n2 = v.norm_squared();
    require(n2 > 0, ErrorCode::InvalidArgument, "zero vector is never an eigenvector");
    const StateVector av = a.apply(v);
    const Complex lambda = inner(v, av) / n2;
    return std::sqrt((av - lambda * v).norm_squared() / n2) <= tol;
}

}  // namespace welcherweg::hilbert
