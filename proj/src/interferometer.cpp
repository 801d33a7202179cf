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

#include "welcherweg/interferometer.hpp"

#include <algorithm>
#include <cmath>

#include "welcherweg/error.hpp"

namespace welcherweg::interferometer {

namespace {

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

PathPair::PathPair(Complex a1, Complex a2, double theta) : a1_(a1), a2_(a2), theta_(theta) {
    require(finite(a1) && finite(a2) && std::isfinite(theta), ErrorCode::InvalidArgument,
            "path amplitudes and phase must be finite");
    require(std::norm(a1) + std::norm(a2) > 0, ErrorCode::InvalidArgument, "both paths closed: a1 = a2 = 0");
}

PathPair PathPair::from_asymmetry(double alpha, double theta) {
    require(alpha >= 0 && alpha <= 1, ErrorCode::Domain, "asymmetry alpha must lie in [0, 1]");
    return PathPair(alpha, 1.0, theta);
}

double PathPair::alpha() const noexcept {
    const double m1 = std::abs(a1_);
    const double m2 = std::abs(a2_);
    return m2 >= m1 ? m1 / m2 : m2 / m1;
}

double PathPair::total_weight() const noexcept {
    return std::norm(a1_) + std::norm(a2_);
}

double screen_intensity(const PathPair &p) noexcept {
    return std::norm(p.a1() + std::polar(1.0, p.theta()) * p.a2());
}

FringeExtrema fringe_extrema(const PathPair &p) noexcept {
    const double m1 = std::abs(p.a1());
    const double m2 = std::abs(p.a2());
    return {(m1 + m2) * (m1 + m2), (m1 - m2) * (m1 - m2)};
}

double modulation(double alpha) {
    require(alpha >= 0 && alpha <= 1, ErrorCode::Domain, "modulation: alpha must lie in [0, 1]");
    return 4 * alpha / ((1 + alpha) * (1 + alpha));
}

double visibility(double imax, double imin) {
    require(imax > 0, ErrorCode::Domain, "visibility undefined for Imax = 0");
    require(imin >= 0, ErrorCode::InvalidArgument, "visibility: Imin must be nonnegative");
    require(imin <= imax, ErrorCode::InvalidArgument, "visibility: Imin exceeds Imax");
    return (imax - imin) / (imax + imin);
}

double visibility(const FringeExtrema &e) {
    return visibility(e.imax, e.imin);
}

double predictability(const PathPair &p) noexcept {
    const double w1 = std::norm(p.a1());
    const double w2 = std::norm(p.a2());
    return std::abs(w1 - w2) / (w1 + w2);
}

DualityPoint duality_point(const PathPair &p, Complex detector_overlap) {
    double c = std::abs(detector_overlap);
    require(std::isfinite(c), ErrorCode::InvalidArgument, "detector overlap must be finite");
    require(c <= 1.0 + kOverlapSlack, ErrorCode::Domain, "detector overlap |c| > 1 is unphysical");
    c = std::min(c, 1.0);
    const double w = p.total_weight();
    return {predictability(p), c * 2 * std::abs(p.a1()) * std::abs(p.a2()) / w};
}

bool check_duality(const DualityPoint &d, double tol) noexcept {
    return d.sum_of_squares() <= 1 + tol;
}

}  // namespace welcherweg::interferometer
