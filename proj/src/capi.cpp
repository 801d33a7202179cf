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

#include "welcherweg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <numbers>
#include <string>
#include <variant>

#include "welcherweg/complementarity.hpp"
#include "welcherweg/config.hpp"
#include "welcherweg/detector.hpp"
#include "welcherweg/experiments.hpp"
#include "welcherweg/interferometer.hpp"
#include "welcherweg/montecarlo.hpp"
#include "welcherweg/serialize.hpp"

namespace ww = welcherweg;

struct ww_config {
    ww::ExperimentConfig config;
};

struct ScenarioResult {
    ww::complementarity::ClassificationReport report;
    bool matches;
};

struct ww_result {
    std::variant<ww::montecarlo::RunSummary, ww::montecarlo::FringeData, ww::experiments::CurrentPrediction,
                 ww::experiments::DiscriminationReport, ScenarioResult>
        value;
};

namespace {

thread_local std::string last_error;

ww_status set_error(ww_status status, const std::string &message) {
    last_error = message;
    return status;
}

ww_status status_of(ww::ErrorCode code) {
    switch (code) {
        case ww::ErrorCode::InvalidArgument:
            return WW_ERR_INVALID_ARGUMENT;
        case ww::ErrorCode::DimensionMismatch:
            return WW_ERR_DIMENSION;
        case ww::ErrorCode::RankDeficient:
            return WW_ERR_RANK;
        case ww::ErrorCode::Domain:
            return WW_ERR_DOMAIN;
        case ww::ErrorCode::Validation:
            return WW_ERR_VALIDATION;
        case ww::ErrorCode::Io:
            return WW_ERR_IO;
    }
    return WW_ERR_INTERNAL;
}

template <typename F>
ww_status guard(F &&body) noexcept {
    try {
        last_error.clear();
        body();
        return WW_OK;
    } catch (const ww::Error &e) {
        return set_error(status_of(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return set_error(WW_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return set_error(WW_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(WW_ERR_INTERNAL, "unknown exception");
    }
}

void need(const void *p, const char *name) {
    if (p == nullptr) {
        ww::fail(ww::ErrorCode::InvalidArgument, std::string(name) + " must not be null");
    }
}

ww::Complex cx(ww_complex z) {
    return {z.re, z.im};
}

ww::PhysicalModel model_of(ww_model m) {
    switch (m) {
        case WW_MODEL_UNITARY_QM:
            return ww::PhysicalModel::UnitaryQm;
        case WW_MODEL_ORTHODOX_PARTICLE:
            return ww::PhysicalModel::OrthodoxParticle;
        case WW_MODEL_CLASSICAL_FIELD:
            return ww::PhysicalModel::ClassicalField;
    }
    ww::fail(ww::ErrorCode::InvalidArgument, "unknown model value " + std::to_string(static_cast<int>(m)));
}

ww_model model_to_c(ww::PhysicalModel m) {
    switch (m) {
        case ww::PhysicalModel::UnitaryQm:
            return WW_MODEL_UNITARY_QM;
        case ww::PhysicalModel::OrthodoxParticle:
            return WW_MODEL_ORTHODOX_PARTICLE;
        case ww::PhysicalModel::ClassicalField:
            return WW_MODEL_CLASSICAL_FIELD;
    }
    return WW_MODEL_UNITARY_QM;
}

ww_prediction prediction_to_c(const ww::experiments::CurrentPrediction &p) {
    return {model_to_c(p.model), p.theta, p.a, p.b, p.c, p.collector_current, p.interference_present ? 1 : 0};
}

void copy_out(const std::string &s, char **text, size_t *length) {
    need(text, "text");
    char *buf = static_cast<char *>(std::malloc(s.size() + 1));
    if (buf == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(buf, s.data(), s.size());
    buf[s.size()] = '\0';
    *text = buf;
    if (length != nullptr) {
        *length = s.size();
    }
}

template <typename T>
const T &get(const ww_result *r, const char *what) {
    need(r, "result");
    const T *v = std::get_if<T>(&r->value);
    if (v == nullptr) {
        ww::fail(ww::ErrorCode::InvalidArgument, std::string("result does not hold ") + what);
    }
    return *v;
}

ww::interferometer::PathPair pair(ww_complex a1, ww_complex a2, double theta = 0.0) {
    return ww::interferometer::PathPair(cx(a1), cx(a2), theta);
}

template <typename T>
ww_result *make_result(T value) {
    return new ww_result{std::move(value)};
}

}  // namespace

extern "C" {

const char *ww_version(void) {
    return "0.1.0";
}

const char *ww_last_error(void) {
    return last_error.c_str();
}

void ww_string_free(char *s) {
    std::free(s);
}

ww_status ww_screen_intensity(ww_complex a1, ww_complex a2, double theta, double *out) {
    return guard([&] {
        need(out, "out");
        *out = ww::interferometer::screen_intensity(pair(a1, a2, theta));
    });
}

ww_status ww_fringe_extrema(ww_complex a1, ww_complex a2, double *imax, double *imin) {
    return guard([&] {
        need(imax, "imax");
        need(imin, "imin");
        const auto e = ww::interferometer::fringe_extrema(pair(a1, a2));
        *imax = e.imax;
        *imin = e.imin;
    });
}

ww_status ww_modulation(double alpha, double *out) {
    return guard([&] {
        need(out, "out");
        *out = ww::interferometer::modulation(alpha);
    });
}

ww_status ww_visibility(double imax, double imin, double *out) {
    return guard([&] {
        need(out, "out");
        *out = ww::interferometer::visibility(imax, imin);
    });
}

ww_status ww_predictability(ww_complex a1, ww_complex a2, double *out) {
    return guard([&] {
        need(out, "out");
        *out = ww::interferometer::predictability(pair(a1, a2));
    });
}

ww_status ww_duality_point(ww_complex a1, ww_complex a2, ww_complex overlap, double *predictability,
                           double *visibility) {
    return guard([&] {
        need(predictability, "predictability");
        need(visibility, "visibility");
        const auto d = ww::interferometer::duality_point(pair(a1, a2), cx(overlap));
        *predictability = d.predictability;
        *visibility = d.visibility;
    });
}

ww_status ww_intensity_entangled(ww_complex a1, ww_complex a2, double theta, ww_complex overlap, double *out) {
    return guard([&] {
        need(out, "out");
        const auto s = ww::detector::entangle(pair(a1, a2, theta), ww::detector::DetectorCoupling(cx(overlap)));
        *out = ww::detector::intensity_entangled(s);
    });
}

ww_status ww_collapsed_intensity(ww_complex a1, ww_complex a2, double *out) {
    return guard([&] {
        need(out, "out");
        *out = ww::detector::collapsed_intensity(pair(a1, a2));
    });
}

ww_status ww_erase(ww_complex a1, ww_complex a2, double theta, ww_complex overlap, ww_complex w1, ww_complex w2,
                   double *out) {
    return guard([&] {
        need(out, "out");
        const auto s = ww::detector::entangle(pair(a1, a2, theta), ww::detector::DetectorCoupling(cx(overlap)));
        *out = ww::detector::erase(s, cx(w1), cx(w2));
    });
}

ww_status ww_erasure_decomposition(ww_complex a1, ww_complex a2, double theta, double *fringe, double *antifringe) {
    return guard([&] {
        need(fringe, "fringe");
        need(antifringe, "antifringe");
        const auto s = ww::detector::entangle(pair(a1, a2, theta), ww::detector::DetectorCoupling::orthogonal());
        const auto split = ww::detector::erasure_decomposition(s);
        *fringe = split.fringe;
        *antifringe = split.antifringe;
    });
}

ww_status ww_config_parse(const char *text, size_t length, ww_config **out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        if (length > 0) {
            need(text, "text");
        }
        auto config = ww::load_config(std::string_view(text == nullptr ? "" : text, length));
        *out = new ww_config{std::move(config)};
    });
}

ww_status ww_config_load(const char *path, ww_config **out) {
    return guard([&] {
        need(path, "path");
        need(out, "out");
        *out = nullptr;
        auto config = ww::load_config_file(path);
        *out = new ww_config{std::move(config)};
    });
}

void ww_config_free(ww_config *config) {
    delete config;
}

ww_status ww_config_set_seed(ww_config *config, uint64_t seed) {
    return guard([&] {
        need(config, "config");
        config->config.seed = seed;
    });
}

ww_status ww_config_get_seed(const ww_config *config, uint64_t *seed) {
    return guard([&] {
        need(config, "config");
        need(seed, "seed");
        *seed = config->config.seed;
    });
}

ww_status ww_config_set_shots(ww_config *config, uint64_t shots) {
    return guard([&] {
        need(config, "config");
        if (shots == 0) {
            ww::fail(ww::ErrorCode::Validation, "shots: must be at least 1");
        }
        config->config.shots = shots;
    });
}

ww_status ww_config_get_shots(const ww_config *config, uint64_t *shots) {
    return guard([&] {
        need(config, "config");
        need(shots, "shots");
        *shots = config->config.shots;
    });
}

ww_status ww_config_get_model(const ww_config *config, ww_model *model) {
    return guard([&] {
        need(config, "config");
        need(model, "model");
        *model = model_to_c(config->config.model_or_default());
    });
}

ww_status ww_config_set_model(ww_config *config, ww_model model) {
    return guard([&] {
        need(config, "config");
        config->config.model = model_of(model);
    });
}

ww_status ww_config_sweep_grid(const ww_config *config, double *grid, size_t capacity, size_t *count) {
    return guard([&] {
        need(config, "config");
        need(count, "count");
        const ww::ThetaSweep sweep = config->config.theta_sweep.value_or(ww::ThetaSweep{0.0, 2 * std::numbers::pi, 32});
        const auto g = sweep.grid();
        *count = g.size();
        if (grid != nullptr) {
            if (capacity < g.size()) {
                ww::fail(ww::ErrorCode::InvalidArgument, "grid buffer too small");
            }
            std::copy(g.begin(), g.end(), grid);
        }
    });
}

ww_status ww_config_emit(const ww_config *config, char **text, size_t *length) {
    return guard([&] {
        need(config, "config");
        copy_out(ww::to_config_text(config->config), text, length);
    });
}

ww_status ww_model_parse(const char *name, ww_model *model) {
    return guard([&] {
        need(name, "name");
        need(model, "model");
        const auto m = ww::parse_model(name);
        if (!m) {
            ww::fail(ww::ErrorCode::Validation,
                     std::string("unknown model '") + name + "' (unitary-qm, orthodox-particle, classical-field)");
        }
        *model = model_to_c(*m);
    });
}

ww_status ww_run(const ww_config *config, ww_model model, uint64_t shots, uint64_t seed, ww_result **out) {
    return guard([&] {
        need(config, "config");
        need(out, "out");
        *out = nullptr;
        *out = make_result(ww::montecarlo::run_shots(config->config, model_of(model), shots, seed));
    });
}

ww_status ww_sweep(const ww_config *config, ww_model model, const double *theta_grid, size_t points,
                   uint64_t shots_per_point, uint64_t seed, ww_channel channel, ww_result **out) {
    return guard([&] {
        need(config, "config");
        need(out, "out");
        *out = nullptr;
        if (points > 0) {
            need(theta_grid, "theta_grid");
        }
        ww::montecarlo::Channel ch = ww::montecarlo::Channel::Auto;
        switch (channel) {
            case WW_CHANNEL_AUTO:
                break;
            case WW_CHANNEL_ARRIVALS:
                ch = ww::montecarlo::Channel::Arrivals;
                break;
            case WW_CHANNEL_SYMMETRIC:
                ch = ww::montecarlo::Channel::Symmetric;
                break;
            case WW_CHANNEL_ANTISYMMETRIC:
                ch = ww::montecarlo::Channel::Antisymmetric;
                break;
            default:
                ww::fail(ww::ErrorCode::InvalidArgument, "unknown channel");
        }
        *out = make_result(ww::montecarlo::sweep_phase(config->config, model_of(model),
                                                       std::span<const double>(theta_grid, points), shots_per_point,
                                                       seed, ch));
    });
}

ww_status ww_predict(const ww_config *config, ww_model model, ww_result **out) {
    return guard([&] {
        need(config, "config");
        need(out, "out");
        *out = nullptr;
        *out = make_result(ww::experiments::predict(config->config, model_of(model)));
    });
}

ww_status ww_discriminate(const ww_config *config, ww_result **out) {
    return guard([&] {
        need(config, "config");
        need(out, "out");
        *out = nullptr;
        *out = make_result(ww::experiments::discriminate(config->config));
    });
}

ww_status ww_scenario(const char *name, double theta, double tolerance, ww_result **out) {
    return guard([&] {
        need(name, "name");
        need(out, "out");
        *out = nullptr;
        const std::string n(name);
        ww::complementarity::Scenario scenario = [&] {
            if (n == "biprism") {
                return ww::complementarity::biprism_operators();
            }
            if (n == "mach_zehnder" || n == "mz") {
                return ww::complementarity::mz_operators(theta);
            }
            ww::fail(ww::ErrorCode::Validation, "unknown scenario '" + n + "' (biprism, mach_zehnder)");
        }();
        auto report = ww::complementarity::classify(scenario, tolerance);
        const bool matches = ww::complementarity::matches_expectation(report, scenario);
        *out = make_result(ScenarioResult{std::move(report), matches});
    });
}

ww_status ww_result_kind_of(const ww_result *result, ww_result_kind *kind) {
    return guard([&] {
        need(result, "result");
        need(kind, "kind");
        *kind = static_cast<ww_result_kind>(result->value.index());
    });
}

ww_status ww_result_run_summary(const ww_result *result, ww_run_summary *out) {
    return guard([&] {
        need(out, "out");
        const auto &r = get<ww::montecarlo::RunSummary>(result, "a run summary");
        *out = {r.n,        r.clicks1,        r.clicks2, r.coincidences,    r.anticoincidence_rate,
                r.arrivals, r.collector_rate, r.theta,   r.intensity_scale};
    });
}

ww_status ww_result_fringe_size(const ww_result *result, size_t *points) {
    return guard([&] {
        need(points, "points");
        *points = get<ww::montecarlo::FringeData>(result, "fringe data").theta_grid.size();
    });
}

ww_status ww_result_fringe_point(const ww_result *result, size_t index, double *theta, double *mean_intensity,
                                 double *stderr_out) {
    return guard([&] {
        const auto &f = get<ww::montecarlo::FringeData>(result, "fringe data");
        if (index >= f.theta_grid.size()) {
            ww::fail(ww::ErrorCode::InvalidArgument, "fringe index out of range");
        }
        if (theta != nullptr) {
            *theta = f.theta_grid[index];
        }
        if (mean_intensity != nullptr) {
            *mean_intensity = f.mean_intensity[index];
        }
        if (stderr_out != nullptr) {
            *stderr_out = f.standard_error[index];
        }
    });
}

ww_status ww_result_fringe_visibility(const ww_result *result, double *estimate, double *stderr_out,
                                      int *degenerate) {
    return guard([&] {
        const auto &f = get<ww::montecarlo::FringeData>(result, "fringe data");
        if (estimate != nullptr) {
            *estimate = f.visibility_estimate;
        }
        if (stderr_out != nullptr) {
            *stderr_out = f.visibility_stderr;
        }
        if (degenerate != nullptr) {
            *degenerate = f.visibility_degenerate ? 1 : 0;
        }
    });
}

ww_status ww_result_prediction(const ww_result *result, ww_prediction *out) {
    return guard([&] {
        need(out, "out");
        *out = prediction_to_c(get<ww::experiments::CurrentPrediction>(result, "a prediction"));
    });
}

ww_status ww_result_discrimination(const ww_result *result, ww_prediction *unitary, ww_prediction *orthodox,
                                   double *difference, int *discriminating) {
    return guard([&] {
        const auto &d = get<ww::experiments::DiscriminationReport>(result, "a discrimination report");
        if (unitary != nullptr) {
            *unitary = prediction_to_c(d.unitary);
        }
        if (orthodox != nullptr) {
            *orthodox = prediction_to_c(d.orthodox);
        }
        if (difference != nullptr) {
            *difference = d.difference;
        }
        if (discriminating != nullptr) {
            *discriminating = d.discriminating ? 1 : 0;
        }
    });
}

ww_status ww_result_scenario_matches(const ww_result *result, int *matches) {
    return guard([&] {
        need(matches, "matches");
        *matches = get<ScenarioResult>(result, "a scenario report").matches ? 1 : 0;
    });
}

ww_status ww_result_emit(const ww_result *result, ww_format format, char **text, size_t *length) {
    return guard([&] {
        need(result, "result");
        if (format != WW_FORMAT_CSV && format != WW_FORMAT_JSON) {
            ww::fail(ww::ErrorCode::InvalidArgument, "unknown format");
        }
        const auto f = format == WW_FORMAT_CSV ? ww::Format::Csv : ww::Format::Json;
        const std::string s = std::visit(
            [&](const auto &v) -> std::string {
                if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ScenarioResult>) {
                    return ww::emit(v.report, f);
                } else {
                    return ww::emit(v, f);
                }
            },
            result->value);
        copy_out(s, text, length);
    });
}

void ww_result_free(ww_result *result) {
    delete result;
}

}  // extern "C"
