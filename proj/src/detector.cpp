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

#include "welcherweg/detector.hpp"

#include <cmath>

#include "welcherweg/error.hpp"

namespace welcherweg::detector {

DetectorCoupling::DetectorCoupling(Complex overlap) : overlap_(overlap) {
    const double m = std::abs(overlap);
    require(std::isfinite(m), ErrorCode::InvalidArgument, "detector overlap must be finite");
    require(m <= 1.0 + interferometer::kOverlapSlack, ErrorCode::Domain,
            "detector overlap |<1|2>| exceeds 1 (Cauchy-Schwarz)");
    if (m > 1.0) {
        overlap_ /= m;
    }
}

bool DetectorCoupling::is_orthogonal(double tol) const noexcept {
    return std::abs(overlap_) <= tol;
}

EntangledState::EntangledState(Complex branch1, Complex branch2, DetectorCoupling coupling)
    : branch1_(branch1), branch2_(branch2), coupling_(coupling) {
    require(std::norm(branch1) + std::norm(branch2) > 0, ErrorCode::InvalidArgument,
            "entangled state has no amplitude on either branch");
}

EntangledState entangle(const PathPair &p, const DetectorCoupling &d) {
    return EntangledState(p.a1(), std::polar(1.0, p.theta()) * p.a2(), d);
}

double intensity_entangled(const EntangledState &s) noexcept {
    const Complex b1 = s.branch1();
    const Complex b2 = s.branch2();
    const double cross = 2 * (s.coupling().overlap() * std::conj(b1) * b2).real();
    return std::norm(b1) + std::norm(b2) + cross;
}

double collapsed_intensity(const PathPair &p) noexcept {
    return std::norm(p.a1()) + std::norm(p.a2());
}

double erase(const EntangledState &s, Complex w1, Complex w2) {
    require(std::norm(w1) + std::norm(w2) > 0, ErrorCode::InvalidArgument, "erase: w1 = w2 = 0 selects nothing");
    const Complex c = s.coupling().overlap();
    const Complex b1 = s.branch1();
    const Complex b2 = s.branch2();
    const Complex amplitude = std::conj(w1) * (b1 + c * b2) + std::conj(w2) * (std::conj(c) * b1 + b2);
    return std::norm(amplitude);
}

ErasureSplit erasure_decomposition(const EntangledState &s) {
    require(s.coupling().is_orthogonal(), ErrorCode::InvalidArgument,
            "erasure_decomposition requires orthogonal detector states (c = 0)");
    return {0.5 * erase(s, 1.0, 1.0), 0.5 * erase(s, 1.0, -1.0)};
}

}  // namespace welcherweg::detector
