// SPDX-License-Identifier: Apache-2.0
//
// a2a-pathloss: low-altitude air-to-air mmWave path loss modelling
// Copyright (C) 2026 The a2a-pathloss authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Scenario files. A scenario is a JSON object; every key is optional and
// unknown keys are rejected. Values resolve as flag > file > default.

#pragma once

#include "a2a/antenna.hpp"
#include "a2a/environment.hpp"
#include "a2a/geometry.hpp"
#include "a2a/montecarlo.hpp"
#include "a2a/pathloss.hpp"
#include "a2a/cli/table.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace a2a::cli
{

// Malformed scenario: JSON syntax error (with line and column) or a bad field
// (with its dotted path).
class ScenarioError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Scenario
{
    double frequency_hz = 28.0e9;
    std::vector<double> h_t{10.0};
    std::vector<double> h_r{100.0};
    std::vector<double> d;        // filled by finalize() when left empty
    std::vector<double> sigma_h;  // overrides the environment's sigma_h when set
    Environment environment = Environment::urban();
    double gain = 1.0;
    PathLossOptions options;
    bool baseline_3gpp = true;
    AntennaConfig antenna;
    std::vector<double> sigma_w_deg{0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 27.7};
    int cdf_points = 101;
    McConfig mc;
    OutputFormat format = OutputFormat::csv;
    std::string out_path; // empty: standard output

    Carrier carrier() const { return Carrier(frequency_hz); }

    // Environment with the i-th sigma_h override applied.
    Environment environment_at(std::size_t sigma_index) const
    {
        if (sigma_h.empty())
            return environment;
        return Environment(sigma_h.at(sigma_index), environment.beta_h(), environment.label());
    }
};

// Sweep axis: the one geometry or environment variable with more than one value.
enum class Axis
{
    h_t,
    h_r,
    d,
    sigma_h
};

inline std::string_view to_string(Axis axis)
{
    switch (axis)
    {
    case Axis::h_t:
        return "h_t";
    case Axis::h_r:
        return "h_r";
    case Axis::d:
        return "d";
    case Axis::sigma_h:
        return "sigma_h";
    }
    return "d";
}

struct SweepPoint
{
    double h_t;
    double h_r;
    double d;
    std::size_t sigma_index;
    double axis_value;
};

inline constexpr double default_fixed_distance = 500.0; // m, used when another axis is swept

inline std::vector<double> linspace(double start, double stop, std::size_t count)
{
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = count == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    return out;
}

namespace detail
{
using json = nlohmann::json;

inline std::string join_path(const std::string &prefix, std::string_view key)
{
    return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
}

[[noreturn]] inline void field_error(const std::string &path, const std::string &message)
{
    throw ScenarioError("field '" + path + "': " + message);
}

inline void reject_unknown(const json &obj, const std::string &path, std::initializer_list<std::string_view> allowed)
{
    for (const auto &item : obj.items())
    {
        bool known = false;
        for (const auto key : allowed)
            known = known || item.key() == key;
        if (!known)
            field_error(join_path(path, item.key()), "unknown key");
    }
}

inline const json &require_object(const json &value, const std::string &path)
{
    if (!value.is_object())
        field_error(path, "expected an object");
    return value;
}

inline double read_number(const json &value, const std::string &path)
{
    if (!value.is_number())
        field_error(path, "expected a number");
    const double x = value.get<double>();
    if (!std::isfinite(x))
        field_error(path, "expected a finite number");
    return x;
}

inline std::uint64_t read_unsigned(const json &value, const std::string &path)
{
    if (!value.is_number_integer() || (value.is_number_integer() && !value.is_number_unsigned() && value.get<std::int64_t>() < 0))
        field_error(path, "expected a non-negative integer");
    return value.get<std::uint64_t>();
}

inline bool read_bool(const json &value, const std::string &path)
{
    if (!value.is_boolean())
        field_error(path, "expected true or false");
    return value.get<bool>();
}

inline std::string read_string(const json &value, const std::string &path)
{
    if (!value.is_string())
        field_error(path, "expected a string");
    return value.get<std::string>();
}

// A value list: number, array of numbers, or {"start", "stop", "count"} /
// {"start", "stop", "step"}.
inline std::vector<double> read_values(const json &value, const std::string &path)
{
    if (value.is_number())
        return {read_number(value, path)};
    if (value.is_array())
    {
        if (value.empty())
            field_error(path, "expected at least one value");
        std::vector<double> out;
        for (std::size_t i = 0; i < value.size(); ++i)
            out.push_back(read_number(value[i], path + "[" + std::to_string(i) + "]"));
        return out;
    }
    if (value.is_object())
    {
        reject_unknown(value, path, {"start", "stop", "count", "step"});
        if (!value.contains("start") || !value.contains("stop"))
            field_error(path, "a range needs 'start' and 'stop'");
        const double start = read_number(value["start"], path + ".start");
        const double stop = read_number(value["stop"], path + ".stop");
        if (value.contains("count") == value.contains("step"))
            field_error(path, "a range needs exactly one of 'count' or 'step'");
        if (value.contains("count"))
        {
            const auto count = read_unsigned(value["count"], path + ".count");
            if (count < 1)
                field_error(path + ".count", "must be >= 1");
            return linspace(start, stop, count);
        }
        const double step = read_number(value["step"], path + ".step");
        if (!(step > 0.0) || !(stop >= start))
            field_error(path + ".step", "must be positive with stop >= start");
        const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        std::vector<double> out(count);
        for (std::size_t i = 0; i < count; ++i)
            out[i] = start + step * static_cast<double>(i);
        return out;
    }
    field_error(path, "expected a number, an array of numbers or a range object");
}

inline void read_environment(const json &value, Scenario &sc)
{
    const std::string path = "environment";
    if (value.is_string())
    {
        try
        {
            sc.environment = Environment::preset(value.get<std::string>());
        }
        catch (const std::invalid_argument &e)
        {
            field_error(path, e.what());
        }
        return;
    }
    require_object(value, path);
    reject_unknown(value, path, {"preset", "sigma_h", "beta_h"});
    Environment base = sc.environment;
    if (value.contains("preset"))
    {
        try
        {
            base = Environment::preset(read_string(value["preset"], path + ".preset"));
        }
        catch (const std::invalid_argument &e)
        {
            field_error(path + ".preset", e.what());
        }
    }
    double beta = base.beta_h();
    if (value.contains("beta_h"))
        beta = read_number(value["beta_h"], path + ".beta_h");
    double sigma = base.sigma_h();
    sc.sigma_h.clear();
    if (value.contains("sigma_h"))
    {
        auto values = read_values(value["sigma_h"], path + ".sigma_h");
        for (const double s : values)
            if (!(s >= 0.0))
                field_error(path + ".sigma_h", "must be >= 0");
        if (values.size() == 1)
            sigma = values.front();
        else
            sc.sigma_h = std::move(values);
    }
    if (!(beta >= 0.0))
        field_error(path + ".beta_h", "must be >= 0");
    const bool custom = value.contains("sigma_h") || value.contains("beta_h");
    sc.environment = Environment(sigma, beta, custom ? "custom" : base.label());
}

inline void read_antenna(const json &value, Scenario &sc)
{
    const std::string path = "antenna";
    require_object(value, path);
    reject_unknown(value, path, {"elements", "exponent", "sigma_w_deg", "gain_floor"});
    if (value.contains("elements"))
    {
        const auto n = read_unsigned(value["elements"], path + ".elements");
        if (n < 1 || n > 4096)
            field_error(path + ".elements", "must lie in [1, 4096]");
        sc.antenna.elements = static_cast<int>(n);
    }
    if (value.contains("exponent"))
        sc.antenna.exponent = read_number(value["exponent"], path + ".exponent");
    if (value.contains("gain_floor"))
        sc.antenna.gain_floor = read_number(value["gain_floor"], path + ".gain_floor");
    if (value.contains("sigma_w_deg"))
    {
        sc.sigma_w_deg = read_values(value["sigma_w_deg"], path + ".sigma_w_deg");
        for (const double s : sc.sigma_w_deg)
            if (!(s >= 0.0))
                field_error(path + ".sigma_w_deg", "must be >= 0");
    }
    try
    {
        sc.antenna.validate();
    }
    catch (const std::domain_error &e)
    {
        field_error(path, e.what());
    }
}

inline void read_mc(const json &value, Scenario &sc)
{
    const std::string path = "mc";
    require_object(value, path);
    reject_unknown(value, path, {"trials", "seed", "count_mode", "threads"});
    if (value.contains("trials"))
    {
        sc.mc.trials = read_unsigned(value["trials"], path + ".trials");
        if (sc.mc.trials < 1)
            field_error(path + ".trials", "must be >= 1");
    }
    if (value.contains("seed"))
        sc.mc.seed = read_unsigned(value["seed"], path + ".seed");
    if (value.contains("threads"))
        sc.mc.threads = static_cast<unsigned>(read_unsigned(value["threads"], path + ".threads"));
    if (value.contains("count_mode"))
    {
        try
        {
            sc.mc.count_mode = parse_count_mode(read_string(value["count_mode"], path + ".count_mode"));
        }
        catch (const std::invalid_argument &e)
        {
            field_error(path + ".count_mode", e.what());
        }
    }
}

inline void read_output(const json &value, Scenario &sc)
{
    const std::string path = "output";
    require_object(value, path);
    reject_unknown(value, path, {"format", "path"});
    if (value.contains("format"))
    {
        try
        {
            sc.format = parse_output_format(read_string(value["format"], path + ".format"));
        }
        catch (const std::invalid_argument &e)
        {
            field_error(path + ".format", e.what());
        }
    }
    if (value.contains("path"))
        sc.out_path = read_string(value["path"], path + ".path");
}

inline std::vector<double> read_heights(const json &value, const std::string &path)
{
    auto values = read_values(value, path);
    for (const double h : values)
        if (!(h >= 0.0))
            field_error(path, "heights must be >= 0");
    return values;
}
} // namespace detail

// Apply defaults that depend on other fields, then check cross-field rules.
inline void finalize(Scenario &sc)
{
    if (sc.d.empty())
    {
        const bool other_swept = sc.h_t.size() > 1 || sc.h_r.size() > 1 || sc.sigma_h.size() > 1;
        sc.d = other_swept ? std::vector<double>{default_fixed_distance} : linspace(10.0, 1000.0, 100);
    }
    int swept = (sc.h_t.size() > 1) + (sc.h_r.size() > 1) + (sc.d.size() > 1) + (sc.sigma_h.size() > 1);
    if (swept > 1)
        throw ScenarioError("at most one of h_t, h_r, d and environment.sigma_h may hold more than one value");
    for (const double x : sc.d)
        if (!(x > 0.0))
            throw ScenarioError("field 'd': distances must be positive");
    if (!(sc.frequency_hz > 0.0))
        throw ScenarioError("field 'frequency_hz': must be positive");
    if (!(sc.gain > 0.0))
        throw ScenarioError("field 'gain': must be positive");
    if (!(sc.options.reflection_coefficient >= 0.0 && sc.options.reflection_coefficient <= 1.0))
        throw ScenarioError("field 'reflection_coefficient': must lie in [0, 1]");
    if (!(sc.options.loss_ceiling_db > 0.0))
        throw ScenarioError("field 'loss_ceiling_db': must be positive");
    if (sc.cdf_points < 2)
        throw ScenarioError("field 'cdf_points': must be >= 2");
}

inline Axis swept_axis(const Scenario &sc)
{
    if (sc.h_t.size() > 1)
        return Axis::h_t;
    if (sc.h_r.size() > 1)
        return Axis::h_r;
    if (sc.sigma_h.size() > 1)
        return Axis::sigma_h;
    return Axis::d;
}

inline std::vector<SweepPoint> sweep_points(const Scenario &sc)
{
    const Axis axis = swept_axis(sc);
    std::size_t count = 1;
    switch (axis)
    {
    case Axis::h_t:
        count = sc.h_t.size();
        break;
    case Axis::h_r:
        count = sc.h_r.size();
        break;
    case Axis::d:
        count = sc.d.size();
        break;
    case Axis::sigma_h:
        count = sc.sigma_h.size();
        break;
    }
    auto pick = [](const std::vector<double> &v, std::size_t i) { return v.size() > 1 ? v[i] : v.front(); };
    std::vector<SweepPoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        SweepPoint p{pick(sc.h_t, i), pick(sc.h_r, i), pick(sc.d, i), sc.sigma_h.size() > 1 ? i : 0, 0.0};
        switch (axis)
        {
        case Axis::h_t:
            p.axis_value = p.h_t;
            break;
        case Axis::h_r:
            p.axis_value = p.h_r;
            break;
        case Axis::d:
            p.axis_value = p.d;
            break;
        case Axis::sigma_h:
            p.axis_value = sc.sigma_h[i];
            break;
        }
        out.push_back(p);
    }
    return out;
}

// Parse scenario text over `base`; the result is finalized.
inline Scenario parse_scenario(std::string_view text, Scenario base = {})
{
    using detail::json;
    json root;
    try
    {
        root = json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error &e)
    {
        // The library message carries "at line L, column C".
        throw ScenarioError(std::string("parse error: ") + e.what());
    }
    if (!root.is_object())
        throw ScenarioError("parse error: the scenario must be a JSON object");

    detail::reject_unknown(root, "",
                           {"schema_version", "frequency_hz", "h_t", "h_r", "d", "environment", "gain",
                            "reflection_coefficient", "loss_ceiling_db", "blend", "order_statistic", "baseline_3gpp",
                            "antenna", "cdf_points", "mc", "output"});

    Scenario sc = std::move(base);
    if (root.contains("schema_version"))
    {
        if (detail::read_unsigned(root["schema_version"], "schema_version") != static_cast<std::uint64_t>(schema_version))
            detail::field_error("schema_version", "unsupported version (expected 1)");
    }
    if (root.contains("frequency_hz"))
        sc.frequency_hz = detail::read_number(root["frequency_hz"], "frequency_hz");
    if (root.contains("h_t"))
        sc.h_t = detail::read_heights(root["h_t"], "h_t");
    if (root.contains("h_r"))
        sc.h_r = detail::read_heights(root["h_r"], "h_r");
    if (root.contains("d"))
        sc.d = detail::read_values(root["d"], "d");
    if (root.contains("environment"))
        detail::read_environment(root["environment"], sc);
    if (root.contains("gain"))
        sc.gain = detail::read_number(root["gain"], "gain");
    if (root.contains("reflection_coefficient"))
        sc.options.reflection_coefficient = detail::read_number(root["reflection_coefficient"], "reflection_coefficient");
    if (root.contains("loss_ceiling_db"))
        sc.options.loss_ceiling_db = detail::read_number(root["loss_ceiling_db"], "loss_ceiling_db");
    if (root.contains("blend"))
    {
        const auto tag = detail::read_string(root["blend"], "blend");
        if (tag == "db")
            sc.options.blend = BlendDomain::decibel;
        else if (tag == "linear")
            sc.options.blend = BlendDomain::linear;
        else
            detail::field_error("blend", "expected \"db\" or \"linear\"");
    }
    if (root.contains("order_statistic"))
    {
        const auto tag = detail::read_string(root["order_statistic"], "order_statistic");
        if (tag == "corrected")
            sc.options.order_statistic = OrderStatisticForm::corrected;
        else if (tag == "literal")
            sc.options.order_statistic = OrderStatisticForm::literal;
        else
            detail::field_error("order_statistic", "expected \"corrected\" or \"literal\"");
    }
    if (root.contains("baseline_3gpp"))
        sc.baseline_3gpp = detail::read_bool(root["baseline_3gpp"], "baseline_3gpp");
    if (root.contains("antenna"))
        detail::read_antenna(root["antenna"], sc);
    if (root.contains("cdf_points"))
    {
        const auto n = detail::read_unsigned(root["cdf_points"], "cdf_points");
        if (n < 2 || n > 100000)
            detail::field_error("cdf_points", "must lie in [2, 100000]");
        sc.cdf_points = static_cast<int>(n);
    }
    if (root.contains("mc"))
        detail::read_mc(root["mc"], sc);
    if (root.contains("output"))
        detail::read_output(root["output"], sc);

    finalize(sc);
    return sc;
}

// Errors are prefixed with the file path.
inline Scenario load_scenario(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ScenarioError(path + ": cannot open scenario file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try
    {
        return parse_scenario(buf.str());
    }
    catch (const ScenarioError &e)
    {
        throw ScenarioError(path + ": " + e.what());
    }
}

// Command-line overrides; unset members keep the scenario value.
struct Overrides
{
    std::optional<std::string> out_path;
    std::optional<OutputFormat> format;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::string> preset;
    std::optional<unsigned> threads;
};

inline void apply_overrides(Scenario &sc, const Overrides &ov)
{
    if (ov.out_path)
        sc.out_path = *ov.out_path;
    if (ov.format)
        sc.format = *ov.format;
    if (ov.seed)
        sc.mc.seed = *ov.seed;
    if (ov.trials)
    {
        if (*ov.trials < 1)
            throw ScenarioError("--trials must be >= 1");
        sc.mc.trials = *ov.trials;
    }
    if (ov.threads)
        sc.mc.threads = *ov.threads;
    if (ov.preset)
    {
        try
        {
            sc.environment = Environment::preset(*ov.preset);
        }
        catch (const std::invalid_argument &e)
        {
            throw ScenarioError(std::string("--preset: ") + e.what());
        }
        sc.sigma_h.clear();
    }
    finalize(sc);
}

} // namespace a2a::cli
