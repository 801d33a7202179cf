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

#include "welcherweg/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "welcherweg/error.hpp"

namespace welcherweg::montecarlo {

namespace {

struct Counts {
    std::uint64_t clicks1 = 0;
    std::uint64_t clicks2 = 0;
    std::uint64_t coincidences = 0;
    std::uint64_t arrivals = 0;
    std::uint64_t symmetric = 0;
    std::uint64_t antisymmetric = 0;

    Counts &operator+=(const Counts &o) {
        clicks1 += o.clicks1;
        clicks2 += o.clicks2;
        coincidences += o.coincidences;
        arrivals += o.arrivals;
        symmetric += o.symmetric;
        antisymmetric += o.antisymmetric;
        return *this;
    }
};

double clamp_probability(double p) {
    return std::clamp(p, 0.0, 1.0);
}

Counts count_shots(const ShotPlan &plan, std::uint64_t seed, std::uint64_t first, std::uint64_t count) {
    Counts c;
    for (std::uint64_t i = first; i < first + count; i++) {
        Pcg32 rng = Pcg32::for_shot(seed, i);
        const ShotOutcome s = simulate_shot(plan, rng);
        c.clicks1 += s.click1;
        c.clicks2 += s.click2;
        c.coincidences += s.click1 && s.click2;
        c.arrivals += s.arrived;
        if (s.erasure) {
            c.symmetric += *s.erasure == ErasureLabel::Symmetric;
            c.antisymmetric += *s.erasure == ErasureLabel::Antisymmetric;
        }
    }
    return c;
}

// Splits [first, first + count) into fixed blocks. Counts are integers, so the
// reduction is exact whatever the number of worker threads.
Counts count_shots_parallel(const ShotPlan &plan, std::uint64_t seed, std::uint64_t first, std::uint64_t count) {
    constexpr std::uint64_t kBlock = 1u << 16;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
    if (hw == 1 || blocks < 2) {
        return count_shots(plan, seed, first, count);
    }
    const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(hw, blocks));
    std::vector<Counts> partial(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; w++) {
        threads.emplace_back([&, w] {
            for (std::uint64_t b = w; b < blocks; b += workers) {
                const std::uint64_t start = b * kBlock;
                partial[w] += count_shots(plan, seed, first + start, std::min(kBlock, count - start));
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    Counts total;
    for (const auto &p : partial) {
        total += p;
    }
    return total;
}

double binomial_stderr(std::uint64_t k, std::uint64_t n) {
    const double p = static_cast<double>(k) / static_cast<double>(n);
    return std::sqrt(p * (1 - p) / static_cast<double>(n));
}

}  // namespace

double intensity_scale(const ExperimentConfig &config) {
    const double a = config.alpha;
    return (a + 1) * (a + 1);
}

ShotPlan plan_shots(const ExperimentConfig &config, PhysicalModel model, double theta) {
    const auto arms = config.arms(theta);
    const Complex t1 = config.transmission(1);
    const Complex t2 = config.transmission(2);
    const Complex b1 = t1 * arms.a1();
    const Complex b2 = t2 * arms.a2() * std::polar(1.0, theta);
    const double total = arms.total_weight();
    const double scale = intensity_scale(config);
    const double wave = std::norm(b1 + b2);

    ShotPlan plan;
    plan.detectors_on = config.detectors_on;
    if (!config.detectors_on) {
        plan.arrival = clamp_probability(wave / scale);
        return plan;
    }
    if (model == PhysicalModel::ClassicalField) {
        plan.both_click = true;
        plan.arrival = clamp_probability(wave / scale);
        return plan;
    }

    plan.path1_probability = std::norm(arms.a1()) / total;
    auto through_barrier = [&](Complex t) { return clamp_probability(std::norm(t) * total / scale); };

    if (config.erasure_active()) {
        // The slit erases the record before the barriers, for either reading.
        plan.arrival_given_path = true;
        plan.arrival_path1 = through_barrier(t1);
        plan.arrival_path2 = through_barrier(t2);
        const double collapsed = std::norm(b1) + std::norm(b2);
        plan.label_erasure = true;
        plan.symmetric_given_arrival = collapsed > 0 ? clamp_probability(wave / (2 * collapsed)) : 0.0;
        return plan;
    }
    if (model == PhysicalModel::OrthodoxParticle) {
        plan.arrival_given_path = true;
        plan.arrival_path1 = config.barrier_in_arm(1) ? 0.0 : through_barrier(t1);
        plan.arrival_path2 = config.barrier_in_arm(2) ? 0.0 : through_barrier(t2);
        return plan;
    }
    const Complex c = config.effective_overlap();
    if (c == Complex(0.0)) {
        plan.arrival_given_path = true;
        plan.arrival_path1 = through_barrier(t1);
        plan.arrival_path2 = through_barrier(t2);
    } else {
        // Partially informative pointer states: clicks follow the path weights,
        // arrival follows the entangled intensity.
        const double entangled = std::norm(b1) + std::norm(b2) + 2 * (c * std::conj(b1) * b2).real();
        plan.arrival = clamp_probability(entangled / scale);
    }
    return plan;
}

ShotOutcome simulate_shot(const ShotPlan &plan, Pcg32 &rng) {
    ShotOutcome s;
    if (!plan.detectors_on) {
        s.arrived = rng.bernoulli(plan.arrival);
        return s;
    }
    if (plan.both_click) {
        s.click1 = s.click2 = true;
        s.arrived = rng.bernoulli(plan.arrival);
        return s;
    }
    const bool path1 = rng.bernoulli(plan.path1_probability);
    s.click1 = path1;
    s.click2 = !path1;
    const double p = plan.arrival_given_path ? (path1 ? plan.arrival_path1 : plan.arrival_path2) : plan.arrival;
    s.arrived = rng.bernoulli(p);
    if (s.arrived && plan.label_erasure) {
        s.erasure = rng.bernoulli(plan.symmetric_given_arrival) ? ErasureLabel::Symmetric : ErasureLabel::Antisymmetric;
    }
    return s;
}

double RunSummary::collector_current_stderr() const noexcept {
    if (n == 0) {
        return 0.0;
    }
    return intensity_scale * binomial_stderr(arrivals, n);
}

RunSummary run_shots(const ExperimentConfig &config, PhysicalModel model, std::uint64_t n, std::uint64_t seed) {
    require(n >= 1, ErrorCode::InvalidArgument, "run_shots: n must be at least 1");
    validate_or_throw(config);
    const ShotPlan plan = plan_shots(config, model, config.theta);
    const Counts c = count_shots_parallel(plan, seed, 0, n);

    RunSummary r;
    r.n = n;
    r.clicks1 = c.clicks1;
    r.clicks2 = c.clicks2;
    r.coincidences = c.coincidences;
    const std::uint64_t clicked = c.clicks1 + c.clicks2 - c.coincidences;
    r.anticoincidence_rate =
        1.0 - static_cast<double>(c.coincidences) / static_cast<double>(std::max<std::uint64_t>(clicked, 1));
    const bool erasing = plan.label_erasure;
    r.arrivals = erasing ? c.symmetric : c.arrivals;
    r.collector_rate = static_cast<double>(r.arrivals) / static_cast<double>(n);
    r.theta = config.theta;
    r.intensity_scale = intensity_scale(config) * (erasing ? 2.0 : 1.0);
    return r;
}

FringeData sweep_phase(const ExperimentConfig &config, PhysicalModel model, std::span<const double> theta_grid,
                       std::uint64_t n_per_point, std::uint64_t seed, Channel channel) {
    require(!theta_grid.empty(), ErrorCode::InvalidArgument, "sweep_phase: empty theta grid");
    require(n_per_point >= 1, ErrorCode::InvalidArgument, "sweep_phase: n_per_point must be at least 1");
    require(n_per_point <= std::numeric_limits<std::uint64_t>::max() / theta_grid.size(), ErrorCode::InvalidArgument,
            "sweep_phase: shot count overflows the stream index");
    validate_or_throw(config);

    if (channel == Channel::Auto) {
        channel = config.erasure_active() ? Channel::Symmetric : Channel::Arrivals;
    }
    if (channel != Channel::Arrivals) {
        require(config.erasure_active(), ErrorCode::InvalidArgument,
                "post-selected channels need the eraser slit open with detectors on");
    }
    const double scale = intensity_scale(config) * (channel == Channel::Arrivals ? 1.0 : 2.0);

    FringeData f;
    f.theta_grid.assign(theta_grid.begin(), theta_grid.end());
    for (std::size_t k = 0; k < theta_grid.size(); k++) {
        const ShotPlan plan = plan_shots(config, model, theta_grid[k]);
        const Counts c = count_shots_parallel(plan, seed, k * n_per_point, n_per_point);
        const std::uint64_t hits = channel == Channel::Arrivals    ? c.arrivals
                                   : channel == Channel::Symmetric ? c.symmetric
                                                                   : c.antisymmetric;
        f.mean_intensity.push_back(scale * static_cast<double>(hits) / static_cast<double>(n_per_point));
        f.standard_error.push_back(scale * binomial_stderr(hits, n_per_point));
    }

    try {
        const auto v = estimate_visibility(f);
        f.visibility_estimate = v.value;
        f.visibility_stderr = v.standard_error;
        f.visibility_degenerate = v.degenerate;
    } catch (const Error &) {
        // Grid too short or too narrow for the cosine fit.
        f.visibility_estimate = std::numeric_limits<double>::quiet_NaN();
        f.visibility_stderr = std::numeric_limits<double>::quiet_NaN();
        f.visibility_degenerate = true;
    }
    return f;
}

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 inverse(const Mat3 &m) {
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    double scale = 0;
    for (const auto &row : m) {
        for (double x : row) {
            scale = std::max(scale, std::abs(x));
        }
    }
    require(std::abs(det) > 1e-12 * scale * scale * scale, ErrorCode::InvalidArgument,
            "estimate_visibility: theta grid does not determine the cosine model");
    Mat3 r;
    r[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
    r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
    r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
    r[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
    r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
    r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
    r[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
    r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
    r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
    return r;
}

Mat3 multiply(const Mat3 &a, const Mat3 &b) {
    Mat3 r{};
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            for (int k = 0; k < 3; k++) {
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

}  // namespace

VisibilityEstimate estimate_visibility(std::span<const double> theta, std::span<const double> intensity,
                                       std::span<const double> standard_error) {
    require(theta.size() == intensity.size() && theta.size() == standard_error.size(), ErrorCode::DimensionMismatch,
            "estimate_visibility: theta, intensity and stderr lengths differ");
    require(theta.size() >= 4, ErrorCode::InvalidArgument, "estimate_visibility: needs at least 4 grid points");
    const auto [lo, hi] = std::minmax_element(theta.begin(), theta.end());
    require(*hi - *lo >= 1.5 * std::numbers::pi - 1e-9, ErrorCode::InvalidArgument,
            "estimate_visibility: grid must span at least 3/4 of a period");

    Mat3 normal{};
    Mat3 meat{};
    std::array<double, 3> rhs{};
    for (std::size_t j = 0; j < theta.size(); j++) {
        const std::array<double, 3> x{1.0, std::cos(theta[j]), std::sin(theta[j])};
        const double var = standard_error[j] * standard_error[j];
        for (int r = 0; r < 3; r++) {
            rhs[r] += x[r] * intensity[j];
            for (int c = 0; c < 3; c++) {
                normal[r][c] += x[r] * x[c];
                meat[r][c] += var * x[r] * x[c];
            }
        }
    }
    const Mat3 inv = inverse(normal);
    std::array<double, 3> beta{};
    for (int r = 0; r < 3; r++) {
        for (int c = 0; c < 3; c++) {
            beta[r] += inv[r][c] * rhs[c];
        }
    }
    const Mat3 cov = multiply(multiply(inv, meat), inv);

    const double a = beta[0];
    if (!(a > 0)) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return {nan, nan, true};
    }
    const double v = std::hypot(beta[1], beta[2]) / a;
    const double var_v = (cov[1][1] + cov[2][2]) / (a * a) + v * v * cov[0][0] / (a * a);
    return {v, std::sqrt(std::max(0.0, var_v)), false};
}

VisibilityEstimate estimate_visibility(const FringeData &f) {
    return estimate_visibility(f.theta_grid, f.mean_intensity, f.standard_error);
}

}  // namespace welcherweg::montecarlo
