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

#include "welcherweg/serialize.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace welcherweg {

std::optional<Format> parse_format(std::string_view s) noexcept {
    if (s == "csv") {
        return Format::Csv;
    }
    if (s == "json") {
        return Format::Json;
    }
    return std::nullopt;
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::string json_number(double v) {
    return std::isfinite(v) ? format_double(v) : "null";
}

std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            default:
                out += ch;
        }
    }
    return out + "\"";
}

std::string json_array(const std::vector<double> &xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); i++) {
        if (i) {
            out += ",";
        }
        out += json_number(xs[i]);
    }
    return out + "]";
}

// Ordered key/value writer producing a single-line object.
class JsonObject {
  public:
    JsonObject &raw(std::string_view key, const std::string &value) {
        out_ += first_ ? "{" : ",";
        first_ = false;
        out_ += json_string(key);
        out_ += ":";
        out_ += value;
        return *this;
    }
    JsonObject &number(std::string_view key, double v) {
        return raw(key, json_number(v));
    }
    JsonObject &integer(std::string_view key, std::uint64_t v) {
        return raw(key, std::to_string(v));
    }
    JsonObject &boolean(std::string_view key, bool v) {
        return raw(key, v ? "true" : "false");
    }
    JsonObject &string(std::string_view key, std::string_view v) {
        return raw(key, json_string(v));
    }
    std::string str() const {
        return (first_ ? std::string("{") : out_) + "}";
    }

  private:
    std::string out_;
    bool first_ = true;
};

std::string prediction_object(const experiments::CurrentPrediction &p) {
    return JsonObject()
        .string("model", to_string(p.model))
        .number("theta", p.theta)
        .number("A", p.a)
        .number("B", p.b)
        .number("C", p.c)
        .number("collector_current", p.collector_current)
        .boolean("interference_present", p.interference_present)
        .str();
}

std::string prediction_row(const experiments::CurrentPrediction &p) {
    std::ostringstream out;
    out << to_string(p.model) << ',' << format_double(p.theta) << ',' << format_double(p.a) << ','
        << format_double(p.b) << ',' << format_double(p.c) << ',' << format_double(p.collector_current) << ','
        << (p.interference_present ? "true" : "false") << '\n';
    return out.str();
}

constexpr const char *kPredictionHeader = "model,theta,A,B,C,collector_current,interference_present\n";

}  // namespace

std::string emit(const montecarlo::RunSummary &r, Format f) {
    if (f == Format::Csv) {
        std::ostringstream out;
        out << "n,clicks1,clicks2,coincidences,anticoincidence_rate,arrivals,collector_rate\n";
        out << r.n << ',' << r.clicks1 << ',' << r.clicks2 << ',' << r.coincidences << ','
            << format_double(r.anticoincidence_rate) << ',' << r.arrivals << ',' << format_double(r.collector_rate)
            << '\n';
        return out.str();
    }
    return JsonObject()
               .integer("n", r.n)
               .integer("clicks1", r.clicks1)
               .integer("clicks2", r.clicks2)
               .integer("coincidences", r.coincidences)
               .number("anticoincidence_rate", r.anticoincidence_rate)
               .integer("arrivals", r.arrivals)
               .number("collector_rate", r.collector_rate)
               .number("theta", r.theta)
               .number("intensity_scale", r.intensity_scale)
               .number("collector_current", r.collector_current())
               .number("collector_current_stderr", r.collector_current_stderr())
               .str() +
           "\n";
}

std::string emit(const montecarlo::FringeData &d, Format f) {
    if (f == Format::Csv) {
        std::ostringstream out;
        out << "theta,mean_intensity,stderr\n";
        for (std::size_t i = 0; i < d.theta_grid.size(); i++) {
            out << format_double(d.theta_grid[i]) << ',' << format_double(d.mean_intensity[i]) << ','
                << format_double(d.standard_error[i]) << '\n';
        }
        return out.str();
    }
    return JsonObject()
               .raw("theta_grid", json_array(d.theta_grid))
               .raw("mean_intensity", json_array(d.mean_intensity))
               .raw("stderr", json_array(d.standard_error))
               .number("visibility_estimate", d.visibility_estimate)
               .number("visibility_stderr", d.visibility_stderr)
               .boolean("visibility_degenerate", d.visibility_degenerate)
               .str() +
           "\n";
}

std::string emit(const experiments::CurrentPrediction &p, Format f) {
    if (f == Format::Csv) {
        return std::string(kPredictionHeader) + prediction_row(p);
    }
    return prediction_object(p) + "\n";
}

std::string emit(const experiments::DiscriminationReport &r, Format f) {
    if (f == Format::Csv) {
        std::ostringstream out;
        out << kPredictionHeader << prediction_row(r.unitary) << prediction_row(r.orthodox);
        return out.str();
    }
    return JsonObject()
               .raw("unitary", prediction_object(r.unitary))
               .raw("orthodox", prediction_object(r.orthodox))
               .number("difference", r.difference)
               .boolean("discriminating", r.discriminating)
               .string("reason", r.reason)
               .str() +
           "\n";
}

std::string emit(const complementarity::ClassificationReport &r, Format f) {
    if (f == Format::Csv) {
        std::ostringstream out;
        out << "scenario,first,second,commutator_norm,relation\n";
        for (const auto &p : r.pairs) {
            out << r.scenario << ',' << p.first << ',' << p.second << ',' << format_double(p.commutator_norm) << ','
                << complementarity::to_string(p.relation) << '\n';
        }
        return out.str();
    }
    std::string pairs = "[";
    for (std::size_t i = 0; i < r.pairs.size(); i++) {
        const auto &p = r.pairs[i];
        if (i) {
            pairs += ",";
        }
        pairs += JsonObject()
                     .string("first", p.first)
                     .string("second", p.second)
                     .number("commutator_norm", p.commutator_norm)
                     .string("relation", complementarity::to_string(p.relation))
                     .str();
    }
    pairs += "]";
    return JsonObject().string("scenario", r.scenario).number("tolerance", r.tolerance).raw("pairs", pairs).str() +
           "\n";
}

namespace {

using nlohmann::json;

json parse_object(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        fail(ErrorCode::Validation, std::string("malformed JSON: ") + e.what());
    }
    require(j.is_object(), ErrorCode::Validation, "expected a JSON object");
    return j;
}

const json &field(const json &j, const char *key) {
    auto it = j.find(key);
    require(it != j.end(), ErrorCode::Validation, std::string("missing JSON key '") + key + "'");
    return *it;
}

double real(const json &j, const char *key) {
    const json &v = field(j, key);
    if (v.is_null()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    require(v.is_number(), ErrorCode::Validation, std::string("JSON key '") + key + "' is not a number");
    return v.get<double>();
}

std::uint64_t count(const json &j, const char *key) {
    const json &v = field(j, key);
    require(v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0), ErrorCode::Validation,
            std::string("JSON key '") + key + "' is not a nonnegative integer");
    return v.get<std::uint64_t>();
}

bool flag(const json &j, const char *key) {
    const json &v = field(j, key);
    require(v.is_boolean(), ErrorCode::Validation, std::string("JSON key '") + key + "' is not a boolean");
    return v.get<bool>();
}

std::vector<double> reals(const json &j, const char *key) {
    const json &v = field(j, key);
    require(v.is_array(), ErrorCode::Validation, std::string("JSON key '") + key + "' is not an array");
    std::vector<double> out;
    for (const auto &x : v) {
        require(x.is_number() || x.is_null(), ErrorCode::Validation,
                std::string("JSON array '") + key + "' holds a non-number");
        out.push_back(x.is_null() ? std::numeric_limits<double>::quiet_NaN() : x.get<double>());
    }
    return out;
}

}  // namespace

montecarlo::RunSummary parse_run_summary_json(std::string_view text) {
    const json j = parse_object(text);
    montecarlo::RunSummary r;
    r.n = count(j, "n");
    r.clicks1 = count(j, "clicks1");
    r.clicks2 = count(j, "clicks2");
    r.coincidences = count(j, "coincidences");
    r.anticoincidence_rate = real(j, "anticoincidence_rate");
    r.arrivals = count(j, "arrivals");
    r.collector_rate = real(j, "collector_rate");
    r.theta = real(j, "theta");
    r.intensity_scale = real(j, "intensity_scale");
    return r;
}

montecarlo::FringeData parse_fringe_data_json(std::string_view text) {
    const json j = parse_object(text);
    montecarlo::FringeData d;
    d.theta_grid = reals(j, "theta_grid");
    d.mean_intensity = reals(j, "mean_intensity");
    d.standard_error = reals(j, "stderr");
    require(d.theta_grid.size() == d.mean_intensity.size() && d.theta_grid.size() == d.standard_error.size(),
            ErrorCode::Validation, "fringe data arrays differ in length");
    d.visibility_estimate = real(j, "visibility_estimate");
    d.visibility_stderr = real(j, "visibility_stderr");
    d.visibility_degenerate = flag(j, "visibility_degenerate");
    return d;
}

experiments::CurrentPrediction parse_prediction_json(std::string_view text) {
    const json j = parse_object(text);
    experiments::CurrentPrediction p;
    const json &m = field(j, "model");
    require(m.is_string(), ErrorCode::Validation, "JSON key 'model' is not a string");
    const auto model = parse_model(m.get<std::string>());
    require(model.has_value(), ErrorCode::Validation, "unknown model '" + m.get<std::string>() + "'");
    p.model = *model;
    p.theta = real(j, "theta");
    p.a = real(j, "A");
    p.b = real(j, "B");
    p.c = real(j, "C");
    p.collector_current = real(j, "collector_current");
    p.interference_present = flag(j, "interference_present");
    return p;
}

}  // namespace welcherweg
