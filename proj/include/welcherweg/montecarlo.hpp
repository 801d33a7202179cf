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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "welcherweg/config.hpp"
#include "welcherweg/rng.hpp"

namespace welcherweg::montecarlo {

enum class ErasureLabel { Symmetric, Antisymmetric };

struct ShotOutcome {
    bool click1 = false;
    bool click2 = false;
    bool arrived = false;
    std::optional<std::size_t> screen_phase_bin;
    // Set on arrived shots when the eraser slit post-selects the detector.
    std::optional<ErasureLabel> erasure;
};

/// Per-shot probabilities for one (config, model, theta). Every arrival
/// probability is an intensity divided by intensity_scale(config), so counts
/// convert back to the closed-form intensity units.
struct ShotPlan {
    bool detectors_on = false;
    bool both_click = false;          // classical-field contrast model
    double path1_probability = 0.0;   // P(click on path 1 | detectors on)
    bool arrival_given_path = false;  // arrival conditioned on the clicked path
    double arrival_path1 = 0.0;
    double arrival_path2 = 0.0;
    double arrival = 0.0;              // unconditioned, when !arrival_given_path
    bool label_erasure = false;
    double symmetric_given_arrival = 0.0;
};

/// Intensity of an arrival probability of one: (|a1| + |a2|)^2 for the
/// unattenuated arms, the theta-maximum of the barrier-free fringe pattern.
double intensity_scale(const ExperimentConfig &config);

ShotPlan plan_shots(const ExperimentConfig &config, PhysicalModel model, double theta);

ShotOutcome simulate_shot(const ShotPlan &plan, Pcg32 &rng);

struct RunSummary {
    std::uint64_t n = 0;
    std::uint64_t clicks1 = 0;
    std::uint64_t clicks2 = 0;
    std::uint64_t coincidences = 0;
    double anticoincidence_rate = 1.0;
    // With an active eraser only symmetric post-selected arrivals are counted.
    std::uint64_t arrivals = 0;
    double collector_rate = 0.0;
    double theta = 0.0;
    // Converts collector_rate into intensity units comparable with predict().
    double intensity_scale = 1.0;

    double collector_current() const noexcept {
        return collector_rate * intensity_scale;
    }
    double collector_current_stderr() const noexcept;

    bool operator==(const RunSummary &) const = default;
};

/// Shot-at-a-time simulation of n quantons at config.theta. Shot i draws from
/// Pcg32::for_shot(seed, i), so the summary is a pure function of the inputs.
RunSummary run_shots(const ExperimentConfig &config, PhysicalModel model, std::uint64_t n, std::uint64_t seed);

/// Which arrivals a sweep reports. Auto picks Symmetric when the eraser slit
/// is active and Arrivals otherwise. Post-selected channels are reported in the
/// units of detector::erase(), i.e. for the unnormalized detector state |1> +/- |2>.
enum class Channel { Auto, Arrivals, Symmetric, Antisymmetric };

struct FringeData {
    std::vector<double> theta_grid;
    std::vector<double> mean_intensity;
    std::vector<double> standard_error;
    double visibility_estimate = 0.0;
    double visibility_stderr = 0.0;
    bool visibility_degenerate = false;

    bool operator==(const FringeData &) const = default;
};

/// Runs n_per_point shots at each grid phase. Grid point k uses shot streams
/// k * n_per_point .. (k + 1) * n_per_point - 1.
FringeData sweep_phase(const ExperimentConfig &config, PhysicalModel model, std::span<const double> theta_grid,
                       std::uint64_t n_per_point, std::uint64_t seed, Channel channel = Channel::Auto);

struct VisibilityEstimate {
    double value;
    double standard_error;
    bool degenerate;  // offset A <= 0; value and standard_error are NaN
};

/// Least-squares fit I(theta) = A + B cos(theta) + C sin(theta); V = sqrt(B^2 + C^2) / A.
/// The standard error comes from the per-point errors through the sandwich
/// covariance of the fit, using Var(B) + Var(C) for the fringe amplitude.
/// Needs at least 4 points spanning 3/4 of a period.
VisibilityEstimate estimate_visibility(std::span<const double> theta, std::span<const double> intensity,
                                       std::span<const double> standard_error);
VisibilityEstimate estimate_visibility(const FringeData &f);

}  // namespace welcherweg::montecarlo
