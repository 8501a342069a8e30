// Copyright 2026 The spinlock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Config files (key = value, '#' comments), figure presets and the mapping
// from flat settings to a SweepSpec. Shared by the command-line tool and tests.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spinlock/sweep.hpp"

namespace spinlock {

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Ordered key/value settings; later assignments override earlier ones.
class Settings {
public:
    void set(std::string key, std::string value) { values_[std::move(key)] = std::move(value); }
    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::string& get(const std::string& key) const { return values_.at(key); }
    void erase(const std::string& key) { values_.erase(key); }
    const std::map<std::string, std::string>& values() const { return values_; }

    void merge(const Settings& other) {
        for (const auto& [k, v] : other.values_) values_[k] = v;
    }

private:
    std::map<std::string, std::string> values_;
};

inline const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{
        "preset", "scheme",     "a",       "phi",   "phi_deg", "tbar",    "beta",     "periods", "theta",
        "observables", "population", "generations", "sigma0", "decay", "elitism", "seed", "threads", "phi_grid",
    };
    return keys;
}

inline std::string valid_keys_message() {
    std::string s;
    for (const auto& k : config_keys()) s += (s.empty() ? "" : ", ") + k;
    return s + ", axis.<a|phi|tbar|beta|periods|theta>";
}

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

inline bool is_known_key(const std::string& key) {
    if (key.rfind("axis.", 0) == 0) {
        try {
            parse_parameter(key.substr(5));
            return true;
        } catch (const Error&) {
            return false;
        }
    }
    const auto& keys = config_keys();
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

inline double parse_plain_real(const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (s.empty() || end != begin + s.size()) throw ConfigError("not a number: '" + s + "'");
    return v;
}

}  // namespace detail

/// Real number, optionally written with pi: "0.5", "pi", "pi/4", "3*pi/4", "2pi".
inline double parse_real(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    const auto p = s.find("pi");
    if (p == std::string::npos) return detail::parse_plain_real(s);
    double coef = 1.0, denom = 1.0;
    std::string head = s.substr(0, p), tail = s.substr(p + 2);
    if (!head.empty() && head.back() == '*') head.pop_back();
    if (head == "-") coef = -1.0;
    else if (!head.empty()) coef = detail::parse_plain_real(head);
    if (!tail.empty()) {
        if (tail[0] != '/') throw ConfigError("not a number: '" + text + "'");
        denom = detail::parse_plain_real(tail.substr(1));
    }
    return coef * std::numbers::pi / denom;
}

inline long long parse_integer(const std::string& text) {
    const std::string s = detail::trim(text);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError("not an integer: '" + text + "'");
    return v;
}

/// "linspace(start, stop, count)" or a comma-separated list.
inline Axis parse_axis(Parameter p, const std::string& text) {
    const std::string s = detail::trim(text);
    if (s.rfind("linspace", 0) == 0) {
        const auto open = s.find('('), close = s.rfind(')');
        if (open == std::string::npos || close != s.size() - 1) throw ConfigError("malformed linspace: '" + s + "'");
        const auto args = detail::split(std::string_view(s).substr(open + 1, close - open - 1), ',');
        if (args.size() != 3) throw ConfigError("linspace takes (start, stop, count): '" + s + "'");
        const long long count = parse_integer(args[2]);
        if (count < 1 || count > 100000000) throw ConfigError("linspace count out of range: '" + s + "'");
        return Axis::linspace(p, parse_real(args[0]), parse_real(args[1]), static_cast<int>(count));
    }
    std::vector<double> values;
    for (const auto& item : detail::split(s, ',')) values.push_back(parse_real(item));
    return Axis::list(p, std::move(values));
}

/// Reads key = value lines; '#' starts a comment. Unknown keys are rejected.
inline Settings parse_config(std::istream& in) {
    Settings out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = detail::trim(std::string_view(line).substr(0, eq));
        const std::string value = detail::trim(std::string_view(line).substr(eq + 1));
        if (!detail::is_known_key(key))
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key +
                              "' (valid keys: " + valid_keys_message() + ")");
        out.set(key, value);
    }
    return out;
}

inline Settings parse_config_text(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

inline Settings load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

// Presets -----------------------------------------------------------------------

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig3", "fig4", "fig5a", "fig5b"};
    return names;
}

inline Settings preset(const std::string& name) {
    if (name == "fig3")
        return parse_config_text(
            "scheme = B\nphi = pi/4\nperiods = 1\n"
            "axis.tbar = linspace(pi/90, 4*pi/3, 120)\naxis.beta = linspace(0, 7, 71)\n"
            "observables = concurrence_closed\n");
    if (name == "fig4")
        return parse_config_text(
            "scheme = A\na = 3\ntbar = 1\nperiods = 1\n"
            "axis.beta = 1, 1.5, 2\naxis.theta = linspace(0, pi, 181)\n"
            "observables = conditional_entropy_curve\n");
    if (name == "fig5a")
        return parse_config_text(
            "scheme = A\na = 3\nperiods = 1\n"
            "axis.tbar = 0.5, 1\naxis.beta = linspace(0, 7, 141)\n"
            "observables = discord_exact\n");
    if (name == "fig5b")
        return parse_config_text(
            "scheme = A\na = 3\ntbar = 0.003\n"
            "axis.beta = 0.5, 1, 2, 3\naxis.periods = linspace(1, 2000, 2000)\n"
            "observables = discord_exact\n");
    std::string valid;
    for (const auto& n : preset_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw ConfigError("unknown preset '" + name + "' (valid: " + valid + ")");
}

// Settings -> SweepSpec ----------------------------------------------------------

/// Expands a "preset" key (other keys override the preset) and builds the spec.
/// Every program parameter must be given exactly once, as a scalar or an axis.
inline SweepSpec build_spec(const Settings& input) {
    Settings s;
    if (input.has("preset")) s = preset(input.get("preset"));
    s.merge(input);
    s.erase("preset");

    if (s.has("phi") && s.has("phi_deg")) throw ConfigError("give phi or phi_deg, not both");
    if (s.has("phi_deg")) {
        s.set("phi", format_real(parse_real(s.get("phi_deg")) * std::numbers::pi / 180.0));
        s.erase("phi_deg");
    }

    SweepSpec spec;
    if (!s.has("scheme")) throw ConfigError("missing key 'scheme'");
    const std::string scheme = s.get("scheme");
    if (scheme == "A" || scheme == "a") spec.base.scheme = Scheme::A;
    else if (scheme == "B" || scheme == "b") spec.base.scheme = Scheme::B;
    else throw ConfigError("scheme must be A or B, got '" + scheme + "'");
    const bool is_a = spec.base.scheme == Scheme::A;

    auto given = [&](const std::string& name) { return s.has(name) || s.has("axis." + name); };
    if (is_a && given("phi")) throw ConfigError("scheme A takes no phi (the pulses are fixed pi/2 pulses)");
    if (!is_a && given("a")) throw ConfigError("scheme B takes no a (all delays are 2 tau)");

    for (const auto& [param, name] : kParameterNames) {
        const std::string key(name);
        if (s.has(key) && s.has("axis." + key)) throw ConfigError("'" + key + "' given both as a value and as an axis");
        const bool needed = param == Parameter::Tbar || param == Parameter::Beta || param == Parameter::Periods ||
                            (param == Parameter::A && is_a) || (param == Parameter::Phi && !is_a);
        if (needed && !given(key)) throw ConfigError("missing '" + key + "' (value or axis." + key + ")");
        if (!s.has(key)) continue;
        const std::string& v = s.get(key);
        switch (param) {
            case Parameter::A: spec.base.a = parse_real(v); break;
            case Parameter::Phi: spec.base.phi = parse_real(v); break;
            case Parameter::Tbar: spec.base.tbar = parse_real(v); break;
            case Parameter::Beta: spec.base.beta = parse_real(v); break;
            case Parameter::Theta: spec.base.theta = parse_real(v); break;
            case Parameter::Periods: {
                const long long m = parse_integer(v);
                if (m < 0) throw ConfigError("periods must be >= 0");
                spec.base.periods = m;
                break;
            }
        }
    }
    // Axes always in the order a, phi, tbar, beta, periods, theta.
    for (const auto& [param, name] : kParameterNames) {
        const std::string key = "axis." + std::string(name);
        if (s.has(key)) spec.axes.push_back(parse_axis(param, s.get(key)));
    }
    if (!s.has("observables")) throw ConfigError("missing key 'observables'");
    for (const auto& name : detail::split(s.get("observables"), ',')) spec.observables.push_back(parse_observable(name));

    auto int_key = [&](const char* key, auto& field) {
        if (s.has(key)) field = static_cast<std::remove_reference_t<decltype(field)>>(parse_integer(s.get(key)));
    };
    int_key("population", spec.optimizer.population);
    int_key("generations", spec.optimizer.generations);
    int_key("elitism", spec.optimizer.elitism);
    int_key("phi_grid", spec.phi_grid);
    if (s.has("sigma0")) spec.optimizer.sigma0 = parse_real(s.get("sigma0"));
    if (s.has("decay")) spec.optimizer.decay = parse_real(s.get("decay"));
    if (s.has("seed")) {
        const long long seed = parse_integer(s.get("seed"));
        if (seed < 0) throw ConfigError("seed must be >= 0");
        spec.seed = static_cast<std::uint64_t>(seed);
    }
    if (s.has("threads")) {
        const long long t = parse_integer(s.get("threads"));
        if (t < 0 || t > 4096) throw ConfigError("threads must be in [0, 4096]");
        spec.threads = static_cast<unsigned>(t);
    }
    try {
        spec.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return spec;
}

/// Single-point spec for `eval`: the point's parameters become one-value axes
/// so they appear as CSV columns.
inline SweepSpec build_eval_spec(const Settings& s) {
    for (const auto& [k, v] : s.values())
        if (k.rfind("axis.", 0) == 0 || k == "preset") throw ConfigError("eval takes no '" + k + "'");
    SweepSpec spec = build_spec(s);
    const auto& b = spec.base;
    if (b.scheme == Scheme::A) spec.axes.push_back(Axis::list(Parameter::A, {b.a}));
    else spec.axes.push_back(Axis::list(Parameter::Phi, {b.phi}));
    spec.axes.push_back(Axis::list(Parameter::Tbar, {b.tbar}));
    spec.axes.push_back(Axis::list(Parameter::Beta, {b.beta}));
    spec.axes.push_back(Axis::list(Parameter::Periods, {static_cast<double>(b.periods)}));
    if (b.theta) spec.axes.push_back(Axis::list(Parameter::Theta, {*b.theta}));
    return spec;
}

inline nlohmann::json metadata_json(const CorrelationReport& report) {
    nlohmann::json j;
    j["spec_hash"] = report.metadata.spec_hash;
    j["code_version"] = report.metadata.code_version;
    j["seed"] = report.metadata.seed;
    j["rows"] = report.rows.size();
    j["errors"] = report.error_count();
    j["columns"] = report.columns;
    return j;
}

}  // namespace spinlock
