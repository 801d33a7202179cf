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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "welcherweg/error.hpp"

using namespace welcherweg;
using namespace welcherweg::hilbert;

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

ComplexMatrix diag_projector(std::size_t dim, std::initializer_list<std::size_t> coords) {
    ComplexMatrix m(dim);
    for (auto k : coords) {
        m(k, k) = 1.0;
    }
    return m;
}

StateVector random_state(std::mt19937_64 &rng, std::size_t dim) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(dim);
    for (auto &z : v) {
        z = {g(rng), g(rng)};
    }
    return StateVector(std::move(v)).normalized();
}

ComplexMatrix random_hermitian(std::mt19937_64 &rng, std::size_t dim) {
    std::normal_distribution<double> g;
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = 0; j < dim; j++) {
            m(i, j) = {g(rng), g(rng)};
        }
    }
    return Complex(0.5) * (m + m.adjoint());
}

}  // namespace

TEST(hilbert, projector_onto_coordinate_and_full_span) {
    const auto e1 = StateVector::basis(2, 0);
    const auto e2 = StateVector::basis(2, 1);
    const auto p1 = projector_onto({e1});
    EXPECT_EQ(p1(0, 0), Complex(1.0));
    EXPECT_EQ(p1(0, 1), Complex(0.0));
    EXPECT_EQ(p1(1, 0), Complex(0.0));
    EXPECT_EQ(p1(1, 1), Complex(0.0));

    const auto id = projector_onto({e1, e2});
    EXPECT_LE(max_abs_norm(id - ComplexMatrix::identity(2)), 1e-15);
}

TEST(hilbert, projector_onto_diagonal_state) {
    const StateVector v{kInvSqrt2, kInvSqrt2};
    const auto p = projector_onto({v});
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            EXPECT_NEAR(std::abs(p(i, j) - Complex(0.5)), 0.0, 1e-15);
        }
    }
    // Oracle: P^2 = P and P v = v by explicit 2x2 arithmetic.
    const oracle::Mat2 m{{{p(0, 0), p(0, 1)}, {p(1, 0), p(1, 1)}}};
    const auto sq = oracle::sub(oracle::mul(m, m), m);
    for (const auto &row : sq) {
        for (const auto &z : row) {
            EXPECT_LE(std::abs(z), 1e-15);
        }
    }
    const Complex pv0 = m[0][0] * kInvSqrt2 + m[0][1] * kInvSqrt2;
    const Complex pv1 = m[1][0] * kInvSqrt2 + m[1][1] * kInvSqrt2;
    EXPECT_NEAR(std::abs(pv0 - kInvSqrt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(pv1 - kInvSqrt2), 0.0, 1e-15);
}

TEST(hilbert, projector_onto_rejects_bad_input) {
    const auto e1 = StateVector::basis(2, 0);
    const auto f1 = StateVector::basis(3, 0);
    try {
        projector_onto({e1, f1});
        FAIL() << "expected dimension mismatch";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
    try {
        projector_onto({e1, Complex(2.0) * e1});
        FAIL() << "expected rank deficiency";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
    }
    // Nearly parallel beyond 1e-10.
    const StateVector almost{1.0, 1e-12};
    try {
        projector_onto({e1, almost});
        FAIL() << "expected rank deficiency";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
    }
    EXPECT_THROW(projector_onto(std::span<const StateVector>{}), Error);
}

TEST(hilbert, commutator_examples) {
    const auto pe1 = projector_onto({StateVector::basis(2, 0)});
    const auto pd = projector_onto({StateVector{kInvSqrt2, kInvSqrt2}});

    EXPECT_EQ(max_abs_norm(commutator(pd, pd)), 0.0);
    EXPECT_EQ(max_abs_norm(commutator(ComplexMatrix::identity(2), pd)), 0.0);

    // Oracle: [[1,0],[0,0]] [[.5,.5],[.5,.5]] - [[.5,.5],[.5,.5]] [[1,0],[0,0]].
    const oracle::Mat2 a{{{1.0, 0.0}, {0.0, 0.0}}};
    const oracle::Mat2 b{{{0.5, 0.5}, {0.5, 0.5}}};
    const auto expected = oracle::sub(oracle::mul(a, b), oracle::mul(b, a));
    EXPECT_EQ(expected[0][1], oracle::cplx(0.5));
    EXPECT_EQ(expected[1][0], oracle::cplx(-0.5));

    const auto c = commutator(pe1, pd);
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            EXPECT_NEAR(std::abs(c(i, j) - expected[i][j]), 0.0, 1e-15);
        }
    }
    EXPECT_THROW(commutator(pe1, ComplexMatrix::identity(3)), Error);
}

TEST(hilbert, commute_check_examples) {
    const auto pe1 = projector_onto({StateVector::basis(2, 0)});
    const auto pd = projector_onto({StateVector{kInvSqrt2, kInvSqrt2}});

    auto same = commute_check(pd, pd, 1e-10);
    EXPECT_TRUE(same.commutes);
    EXPECT_EQ(same.norm, 0.0);

    auto disjoint = commute_check(diag_projector(4, {0, 1}), diag_projector(4, {2}), 1e-10);
    EXPECT_TRUE(disjoint.commutes);
    EXPECT_EQ(disjoint.norm, 0.0);

    auto nc = commute_check(pe1, pd, 1e-10);
    EXPECT_FALSE(nc.commutes);
    EXPECT_NEAR(nc.norm, 0.5, 1e-15);

    EXPECT_THROW(commute_check(pe1, pd, 0.0), Error);
}

TEST(hilbert, uncertainty_product_examples) {
    const auto e1 = StateVector::basis(2, 0);
    const auto pe1 = projector_onto({e1});
    const auto pd = projector_onto({StateVector{kInvSqrt2, kInvSqrt2}});

    const auto same = uncertainty_product(pe1, pe1, e1);
    EXPECT_EQ(same.lhs, 0.0);
    EXPECT_EQ(same.rhs, 0.0);

    // Oracle: rhs = |<e1|[A,B]|e1>| / 2 by explicit 2x2 arithmetic.
    const oracle::Mat2 a{{{1.0, 0.0}, {0.0, 0.0}}};
    const oracle::Mat2 b{{{0.5, 0.5}, {0.5, 0.5}}};
    const auto comm = oracle::sub(oracle::mul(a, b), oracle::mul(b, a));
    const double rhs_oracle = 0.5 * std::abs(comm[0][0]);
    const auto up = uncertainty_product(pe1, pd, e1);
    EXPECT_NEAR(up.lhs, 0.0, 1e-15);
    EXPECT_NEAR(up.rhs, rhs_oracle, 1e-15);

    const auto commuting = uncertainty_product(diag_projector(3, {0}), diag_projector(3, {1, 2}),
                                               StateVector{0.6, Complex(0, 0.8), 0.0});
    EXPECT_EQ(commuting.rhs, 0.0);
}

TEST(hilbert, uncertainty_product_rejects_bad_input) {
    const auto e1 = StateVector::basis(2, 0);
    ComplexMatrix nonhermitian{{0.0, 1.0}, {0.0, 0.0}};
    EXPECT_THROW(uncertainty_product(nonhermitian, ComplexMatrix::identity(2), e1), Error);
    EXPECT_THROW(uncertainty_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2), StateVector{1.0, 1.0}),
                 Error);
}

TEST(hilbert, uncertainty_product_circular_state) {
    const auto pe1 = projector_onto({StateVector::basis(2, 0)});
    const auto pd = projector_onto({StateVector{kInvSqrt2, kInvSqrt2}});
    const StateVector psi{kInvSqrt2, Complex(0, kInvSqrt2)};
    const auto up = uncertainty_product(pe1, pd, psi);
    // <psi|[A,B]|psi> = 0.5 i, so rhs = 0.25.
    EXPECT_NEAR(up.rhs, 0.25, 1e-15);
    EXPECT_GE(up.lhs, 0.0);
}

TEST(hilbert, property_projectors_are_idempotent_and_hermitian) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; trial++) {
        const std::size_t dim = 2 + trial % 7;
        const std::size_t rank = 1 + trial % dim;
        std::vector<StateVector> basis;
        for (std::size_t k = 0; k < rank; k++) {
            basis.push_back(random_state(rng, dim));
        }
        const auto p = projector_onto(basis);
        ASSERT_LE(max_abs_norm(p * p - p), 1e-12);
        ASSERT_LE(max_abs_norm(p - p.adjoint()), 1e-12);
        ASSERT_TRUE(is_projector(p));
    }
}

TEST(hilbert, property_commutator_is_antisymmetric) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; trial++) {
        const std::size_t dim = 2 + trial % 6;
        const auto a = random_hermitian(rng, dim);
        const auto b = random_hermitian(rng, dim);
        ASSERT_LE(max_abs_norm(commutator(a, b) + commutator(b, a)), 1e-14);
    }
}

TEST(hilbert, property_orthogonal_subspaces_commute) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; trial++) {
        const std::size_t dim = 3 + trial % 6;
        // Orthonormal frame from a full-rank random set, split into two blocks.
        std::vector<StateVector> frame;
        for (std::size_t k = 0; k < dim; k++) {
            frame.push_back(random_state(rng, dim));
        }
        const auto full = projector_onto(frame);
        ASSERT_LE(max_abs_norm(full - ComplexMatrix::identity(dim)), 1e-12);
        const std::size_t split = 1 + trial % (dim - 1);
        // Project the second block off the span of the first, then build both.
        std::vector<StateVector> first(frame.begin(), frame.begin() + static_cast<std::ptrdiff_t>(split));
        const auto p = projector_onto(first);
        std::vector<StateVector> second;
        for (std::size_t k = split; k < dim; k++) {
            second.push_back(frame[k] - p.apply(frame[k]));
        }
        const auto q = projector_onto(second);
        const auto check = commute_check(p, q, 1e-10);
        ASSERT_TRUE(check.commutes);
        ASSERT_LE(check.norm, 1e-13);
    }
}

TEST(hilbert, property_uncertainty_sides_nonnegative) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; trial++) {
        const std::size_t dim = 2 + trial % 5;
        const auto up = uncertainty_product(random_hermitian(rng, dim), random_hermitian(rng, dim),
                                            random_state(rng, dim));
        ASSERT_GE(up.lhs, 0.0);
        ASSERT_GE(up.rhs, 0.0);
    }
}

TEST(hilbert, eigenvector_check) {
    const auto pd = projector_onto({StateVector{kInvSqrt2, kInvSqrt2}});
    EXPECT_TRUE(is_eigenvector(pd, StateVector{1.0, 1.0}));
    EXPECT_TRUE(is_eigenvector(pd, StateVector{1.0, -1.0}));
    EXPECT_FALSE(is_eigenvector(pd, StateVector{1.0, 0.0}));
}
