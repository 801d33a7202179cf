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

#include <optional>
#include <string>
#include <string_view>

#include "welcherweg/complementarity.hpp"
#include "welcherweg/experiments.hpp"
#include "welcherweg/format.hpp"
#include "welcherweg/montecarlo.hpp"

namespace welcherweg {

enum class Format { Csv, Json };

std::optional<Format> parse_format(std::string_view s) noexcept;

// CSV: header row, then data rows, '\n' line endings, '.' decimal point.
// JSON: one object, keys in a fixed order, floats with 17 significant digits,
// NaN written as null.
//
//   RunSummary      n,clicks1,clicks2,coincidences,anticoincidence_rate,arrivals,collector_rate
//   FringeData      theta,mean_intensity,stderr
//   CurrentPrediction  model,theta,A,B,C,collector_current,interference_present
std::string emit(const montecarlo::RunSummary &r, Format f);
std::string emit(const montecarlo::FringeData &d, Format f);
std::string emit(const experiments::CurrentPrediction &p, Format f);
std::string emit(const experiments::DiscriminationReport &r, Format f);
std::string emit(const complementarity::ClassificationReport &r, Format f);

/// Inverses of the JSON emitters. Throw Error(Validation) on malformed input.
montecarlo::RunSummary parse_run_summary_json(std::string_view text);
montecarlo::FringeData parse_fringe_data_json(std::string_view text);
experiments::CurrentPrediction parse_prediction_json(std::string_view text);

}  // namespace welcherweg
