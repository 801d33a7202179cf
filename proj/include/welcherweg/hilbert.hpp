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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace welcherweg {

using Complex = std::complex<double>;

namespace hilbert {

inline constexpr double kNormalizationTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kProjectorTolerance = 1e-12;
inline constexpr double kRankTolerance = 1e-10;
inline constexpr double kCommuteTolerance = 1e-10;

/// Dense state vector on a small finite-dimensional Hilbert space.
class StateVector {
  public:
    explicit StateVector(std::vector<Complex> entries);
    StateVector(std::initializer_list<Complex> entries);

    /// Unit vector e_k in dimension `dim`.
    static StateVector basis(std::size_t dim, std::size_t k);

    std::size_t dim() const noexcept {
        return entries_.size();
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }
    const Complex &operator[](std::size_t i) const {
        return entries_[i];
    }

    double norm_squared() const noexcept;
    bool is_normalized(double tol = kNormalizationTolerance) const noexcept;
    StateVector normalized() const;

    friend StateVector operator+(const StateVector &a, const StateVector &b);
    friend StateVector operator-(const StateVector &a, const StateVector &b);
    friend StateVector operator*(Complex s, const StateVector &v);

  private:
    std::vector<Complex> entries_;
};

/// <u|v>, antilinear in the first argument.
Complex inner(const StateVector &u, const StateVector &v);

/// Square complex matrix, row-major.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> row_major);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix outer(const StateVector &ket, const StateVector &bra);

    std::size_t dim() const noexcept {
        return dim_;
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    StateVector apply(const StateVector &v) const;

    friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix &a);

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Largest |a_ij|. This is the norm used by every commutation and projector test.
double max_abs_norm(const ComplexMatrix &a) noexcept;

bool is_hermitian(const ComplexMatrix &a, double tol = kHermitianTolerance);
bool is_projector(const ComplexMatrix &a, double tol = kProjectorTolerance);

/// Orthogonal projector onto span(basis). Orthonormalizes with modified
/// Gram-Schmidt plus one re-orthogonalization pass; a residual norm below
/// kRankTolerance after both passes is reported as RankDeficient.
ComplexMatrix projector_onto(std::span<const StateVector> basis);
ComplexMatrix projector_onto(std::initializer_list<StateVector> basis);

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

struct CommuteCheck {
    bool commutes;
    double norm;
};

CommuteCheck commute_check(const ComplexMatrix &a, const ComplexMatrix &b, double tol = kCommuteTolerance);

/// <psi|A|psi> for a normalized psi.
Complex expectation(const ComplexMatrix &a, const StateVector &psi);

struct UncertaintyProduct {
    double lhs;  // dA * dB
    double rhs;  // |<[A,B]>| / 2
};

// Both sides are reported; no ordering between them is asserted.
UncertaintyProduct uncertainty_product(const ComplexMatrix &a, const ComplexMatrix &b, const StateVector &psi);

/// True when A v is parallel to v (residual of the Rayleigh quotient fit <= tol).
bool is_eigenvector(const ComplexMatrix &a, const StateVector &v, double tol = 1e-12);

}  // namespace hilbert
}  // namespace welcherweg
