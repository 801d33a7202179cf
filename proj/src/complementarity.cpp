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

#include "welcherweg/complementarity.hpp"

#include <algorithm>
#include <cmath>

#include "welcherweg/error.hpp"

namespace welcherweg::complementarity {

using hilbert::StateVector;

namespace {

bool same_pair(const std::string &a, const std::string &b, const std::string &x, const std::string &y) {
    return (a == x && b == y) || (a == y && b == x);
}

}  // namespace

Scenario::Scenario(std::string name, std::vector<LabeledProjector> operators,
                   std::vector<std::pair<std::string, std::string>> expected_complementary_pairs)
    : name_(std::move(name)), operators_(std::move(operators)), expected_(std::move(expected_complementary_pairs)) {
    for (std::size_t i = 0; i < operators_.size(); i++) {
        require(hilbert::is_projector(operators_[i].projector), ErrorCode::InvalidArgument,
                "scenario operator '" + operators_[i].label + "' is not a projector");
        for (std::size_t j = 0; j < i; j++) {
            require(operators_[i].label != operators_[j].label, ErrorCode::InvalidArgument,
                    "duplicate operator label '" + operators_[i].label + "'");
        }
    }
    for (const auto &[a, b] : expected_) {
        op(a);
        op(b);
    }
}

const ComplexMatrix &Scenario::op(const std::string &label) const {
    for (const auto &o : operators_) {
        if (o.label == label) {
            return o.projector;
        }
    }
    fail(ErrorCode::InvalidArgument, "scenario '" + name_ + "' has no operator '" + label + "'");
}

bool Scenario::expects_complementary(const std::string &a, const std::string &b) const {
    return std::any_of(expected_.begin(), expected_.end(),
                       [&](const auto &p) { return same_pair(a, b, p.first, p.second); });
}

const char *to_string(Relation r) noexcept {
    return r == Relation::Compatible ? "compatible" : "complementary";
}

const PairClassification &ClassificationReport::find(const std::string &a, const std::string &b) const {
    for (const auto &p : pairs) {
        if (same_pair(a, b, p.first, p.second)) {
            return p;
        }
    }
    fail(ErrorCode::InvalidArgument, "report has no pair (" + a + ", " + b + ")");
}

Scenario biprism_operators() {
    const auto e1 = StateVector::basis(3, 0);
    const auto e2 = StateVector::basis(3, 1);
    const auto e3 = StateVector::basis(3, 2);
    std::vector<LabeledProjector> ops;
    ops.push_back({"P_r", hilbert::projector_onto({e1})});
    ops.push_back({"P_t", hilbert::projector_onto({e2, e3})});
    ops.push_back({"P_wave", hilbert::projector_onto({e2})});
    return Scenario("biprism", std::move(ops), {});
}

Scenario mz_operators(double theta) {
    const auto e1 = StateVector::basis(2, 0);
    const auto e2 = StateVector::basis(2, 1);
    const auto wave = Complex(1 / std::sqrt(2.0)) * (e1 + std::polar(1.0, theta) * e2);
    std::vector<LabeledProjector> ops;
    ops.push_back({"P_1", hilbert::projector_onto({e1})});
    ops.push_back({"P_2", hilbert::projector_onto({e2})});
    ops.push_back({"P_wave", hilbert::projector_onto({wave})});
    return Scenario("mach_zehnder", std::move(ops), {{"P_wave", "P_1"}, {"P_wave", "P_2"}});
}

ClassificationReport classify(const Scenario &scenario, double tol) {
    require(tol > 0, ErrorCode::InvalidArgument, "classify: tolerance must be positive");
    ClassificationReport report{scenario.name(), tol, {}};
    const auto &ops = scenario.operators();
    for (std::size_t i = 0; i < ops.size(); i++) {
        for (std::size_t j = i + 1; j < ops.size(); j++) {
            const auto check = hilbert::commute_check(ops[i].projector, ops[j].projector, tol);
            report.pairs.push_back({ops[i].label, ops[j].label, check.norm,
                                    check.commutes ? Relation::Compatible : Relation::Complementary});
        }
    }
    return report;
}

bool matches_expectation(const ClassificationReport &report, const Scenario &scenario) {
    return std::all_of(report.pairs.begin(), report.pairs.end(), [&](const PairClassification &p) {
        return (p.relation == Relation::Complementary) == scenario.expects_complementary(p.first, p.second);
    });
}

}  // namespace welcherweg::complementarity
