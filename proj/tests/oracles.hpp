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

// Test-only oracles and generators. Nothing here calls into the library: the
// oracles recompute quantities from first principles so they stay independent
// of the implementation they check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;

inline Mat2 mul(const Mat2 &a, const Mat2 &b) {
    Mat2 r{};
    r[0][0] = a[0][0] * b[0][0] + a[0][1] * b[1][0];
    r[0][1] = a[0][0] * b[0][1] + a[0][1] * b[1][1];
    r[1][0] = a[1][0] * b[0][0] + a[1][1] * b[1][0];
    r[1][1] = a[1][0] * b[0][1] + a[1][1] * b[1][1];
    return r;
}

inline Mat2 sub(const Mat2 &a, const Mat2 &b) {
    Mat2 r{};
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            r[i][j] = a[i][j] - b[i][j];
        }
    }
    return r;
}

/// Intensity from the expanded interference form
/// |a1|^2 + |a2|^2 + 2 |a1||a2| cos(theta + arg a2 - arg a1).
inline double expanded_intensity(cplx a1, cplx a2, double theta) {
    const double m1 = std::abs(a1);
    const double m2 = std::abs(a2);
    return m1 * m1 + m2 * m2 + 2 * m1 * m2 * std::cos(theta + std::arg(a2) - std::arg(a1));
}

/// Brute-force (min, max) over an n-point theta grid of [0, 2 pi).
template <typename F>
std::pair<double, double> grid_extrema(F &&intensity, int n = 10000) {
    double lo = INFINITY;
    double hi = -INFINITY;
    for (int k = 0; k < n; k++) {
        const double v = intensity(2 * std::numbers::pi * k / n);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

/// Random amplitude with magnitude in [0, 1] and a uniform phase.
inline cplx random_amplitude(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(u(rng), 2 * std::numbers::pi * u(rng));
}

/// Random overlap with |c| <= 1.
inline cplx random_overlap(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(u(rng), 2 * std::numbers::pi * u(rng));
}

/// Least-squares cosine fit by the closed form valid on a uniform full-period
/// grid: A = mean, B = 2 mean(I cos), C = 2 mean(I sin).
inline std::array<double, 3> uniform_grid_cosine_fit(const std::vector<double> &theta, const std::vector<double> &y) {
    double a = 0, b = 0, c = 0;
    for (std::size_t j = 0; j < theta.size(); j++) {
        a += y[j];
        b += y[j] * std::cos(theta[j]);
        c += y[j] * std::sin(theta[j]);
    }
    const double n = static_cast<double>(theta.size());
    return {a / n, 2 * b / n, 2 * c / n};
}

}  // namespace oracle
