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

// Parameter sweeps over (a, phi, tbar, beta, periods, theta) producing
// deterministic CSV tables.

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "spinlock/discord.hpp"
#include "spinlock/entangle.hpp"
#include "spinlock/error.hpp"
#include "spinlock/mutation_optimizer.hpp"
#include "spinlock/pulsekit.hpp"

#ifndef SPINLOCK_VERSION
#define SPINLOCK_VERSION "0.1.0"
#endif

namespace spinlock {

enum class Observable {
    Magnetization,
    ConcurrenceOracle,
    ConcurrenceClosed,
    DiscordExact,
    DiscordOptimized,
    ConditionalEntropyCurve,
};

inline constexpr std::array<std::pair<Observable, std::string_view>, 6> kObservableNames{{
    {Observable::Magnetization, "magnetization"},
    {Observable::ConcurrenceOracle, "concurrence_oracle"},
    {Observable::ConcurrenceClosed, "concurrence_closed"},
    {Observable::DiscordExact, "discord_exact"},
    {Observable::DiscordOptimized, "discord_optimized"},
    {Observable::ConditionalEntropyCurve, "conditional_entropy_curve"},
}};

inline std::string_view to_string(Observable o) {
    for (const auto& [k, name] : kObservableNames)
        if (k == o) return name;
    return "?";
}

inline Observable parse_observable(std::string_view name) {
    for (const auto& [k, n] : kObservableNames)
        if (n == name) return k;
    std::string valid;
    for (const auto& [k, n] : kObservableNames) valid += (valid.empty() ? "" : ", ") + std::string(n);
    throw Error("unknown observable '" + std::string(name) + "' (valid: " + valid + ")");
}

enum class Parameter { A, Phi, Tbar, Beta, Periods, Theta };

inline constexpr std::array<std::pair<Parameter, std::string_view>, 6> kParameterNames{{
    {Parameter::A, "a"},
    {Parameter::Phi, "phi"},
    {Parameter::Tbar, "tbar"},
    {Parameter::Beta, "beta"},
    {Parameter::Periods, "periods"},
    {Parameter::Theta, "theta"},
}};

inline std::string_view to_string(Parameter p) {
    for (const auto& [k, name] : kParameterNames)
        if (k == p) return name;
    return "?";
}

inline Parameter parse_parameter(std::string_view name) {
    for (const auto& [k, n] : kParameterNames)
        if (n == name) return k;
    throw Error("unknown sweep parameter '" + std::string(name) + "' (valid: a, phi, tbar, beta, periods, theta)");
}

struct Axis {
    Parameter parameter;
    std::vector<double> values;

    static Axis list(Parameter p, std::vector<double> v) { return {p, std::move(v)}; }

    /// count points from start to stop inclusive; count = 1 gives {start}.
    static Axis linspace(Parameter p, double start, double stop, int count) {
        if (count < 1) throw Error("linspace count must be >= 1");
        std::vector<double> v(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
            v[i] = count == 1 ? start : start + (stop - start) * i / (count - 1);
        if (count > 1) v.back() = stop;
        return {p, std::move(v)};
    }
};

/// Scalar values for every parameter; an axis overrides the matching one.
struct PointParameters {
    Scheme scheme = Scheme::A;
    double a = 3.0;
    double phi = std::numbers::pi / 4;
    double tbar = 1.0;
    double beta = 1.0;
    long long periods = 1;
    std::optional<double> theta;
};

struct SweepSpec {
    PointParameters base;
    std::vector<Axis> axes;
    std::vector<Observable> observables;
    OptimizerConfig optimizer;
    int phi_grid = 0;
    unsigned threads = 1;  // 0: hardware concurrency
    std::uint64_t seed = 1;

    void validate() const {
        if (observables.empty()) throw Error("no observables requested");
        for (std::size_t i = 0; i < axes.size(); ++i) {
            if (axes[i].values.empty()) throw Error("axis '" + std::string(to_string(axes[i].parameter)) + "' is empty");
            for (std::size_t j = 0; j < i; ++j)
                if (axes[j].parameter == axes[i].parameter)
                    throw Error("duplicate axis '" + std::string(to_string(axes[i].parameter)) + "'");
        }
        for (std::size_t i = 0; i < observables.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (observables[i] == observables[j])
                    throw Error("duplicate observable '" + std::string(to_string(observables[i])) + "'");
        if (phi_grid < 0) throw Error("phi_grid must be >= 0");
        optimizer.validate();
    }

    std::size_t size() const {
        std::size_t n = 1;
        for (const auto& ax : axes) n *= ax.values.size();
        return n;
    }

    /// Output column names: axes, observables (discord_optimized adds theta_star), error.
    std::vector<std::string> columns() const {
        std::vector<std::string> c;
        for (const auto& ax : axes) c.emplace_back(to_string(ax.parameter));
        for (auto o : observables) {
            c.emplace_back(to_string(o));
            if (o == Observable::DiscordOptimized) c.emplace_back("theta_star");
        }
        c.emplace_back("error");
        return c;
    }
};

struct ReportRow {
    std::vector<double> parameters;
    std::vector<std::optional<double>> values;
    std::string error;
};

struct ReportMetadata {
    std::string spec_hash;
    std::string code_version = SPINLOCK_VERSION;
    std::uint64_t seed = 0;
};

struct CorrelationReport {
    std::vector<std::string> columns;
    std::vector<ReportRow> rows;
    ReportMetadata metadata;

    std::size_t error_count() const {
        std::size_t n = 0;
        for (const auto& r : rows) n += !r.error.empty();
        return n;
    }
};

// Formatting ------------------------------------------------------------------

inline std::string format_real(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline void write_csv(std::ostream& os, const CorrelationReport& report) {
    for (std::size_t i = 0; i < report.columns.size(); ++i) os << (i ? "," : "") << csv_field(report.columns[i]);
    os << "\r\n";
    for (const auto& row : report.rows) {
        for (double p : row.parameters) os << format_real(p) << ',';
        for (const auto& v : row.values) os << (v ? format_real(*v) : std::string()) << ',';
        os << csv_field(row.error) << "\r\n";
    }
}

inline std::string to_csv(const CorrelationReport& report) {
    std::ostringstream os;
    write_csv(os, report);
    return os.str();
}

// Hashing ---------------------------------------------------------------------

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

/// Canonical text form of everything that determines the report body.
inline std::string canonical_spec(const SweepSpec& s) {
    std::ostringstream os;
    const auto& b = s.base;
    os << "scheme=" << to_string(b.scheme) << ";a=" << format_real(b.a) << ";phi=" << format_real(b.phi)
       << ";tbar=" << format_real(b.tbar) << ";beta=" << format_real(b.beta) << ";periods=" << b.periods
       << ";theta=" << (b.theta ? format_real(*b.theta) : "none");
    for (const auto& ax : s.axes) {
        os << ";axis." << to_string(ax.parameter) << "=";
        for (std::size_t i = 0; i < ax.values.size(); ++i) os << (i ? "," : "") << format_real(ax.values[i]);
    }
    os << ";observables=";
    for (std::size_t i = 0; i < s.observables.size(); ++i) os << (i ? "," : "") << to_string(s.observables[i]);
    const auto& o = s.optimizer;
    os << ";population=" << o.population << ";generations=" << o.generations << ";sigma0=" << format_real(o.sigma0)
       << ";decay=" << format_real(o.decay) << ";elitism=" << o.elitism << ";phi_grid=" << s.phi_grid
       << ";seed=" << s.seed;
    return os.str();
}

inline std::string spec_hash(const SweepSpec& s) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(detail::fnv1a(canonical_spec(s))));
    return buf;
}

// Point evaluation ------------------------------------------------------------

/// Seed for the optimizer at grid index `index`.
inline std::uint64_t point_seed(std::uint64_t seed, std::size_t index) {
    return detail::splitmix64(seed ^ detail::splitmix64(index));
}

namespace detail {

inline bool near_angle(double phi, double target) { return std::abs(phi - target) <= 1e-12; }

inline void require_scheme_a_like(const PointParameters& p, std::string_view what) {
    if (p.scheme == Scheme::B && !near_angle(p.phi, std::numbers::pi / 2))
        throw Error(std::string(what) + " is available for scheme A (and scheme B at phi = pi/2) only");
}

/// Scheme B at phi = pi/2 evolves exactly like scheme A with a = 2.
inline double effective_a(const PointParameters& p) { return p.scheme == Scheme::A ? p.a : 2.0; }

}  // namespace detail

inline PulseProgram program_of(const PointParameters& p) {
    return p.scheme == Scheme::A ? PulseProgram::scheme_a(p.a, p.tbar, p.periods)
                                 : PulseProgram::scheme_b(p.phi, p.tbar, p.periods);
}

inline double concurrence_closed(const PointParameters& p) {
    program_of(p).validate();
    if (p.scheme == Scheme::A) return concurrence_scheme_a(p.a, static_cast<double>(p.periods), p.tbar, p.beta);
    if (detail::near_angle(p.phi, std::numbers::pi / 4))
        return concurrence_scheme_b_quarter(static_cast<double>(p.periods), p.tbar, p.beta);
    if (detail::near_angle(p.phi, std::numbers::pi / 2)) return concurrence_scheme_a(2.0, p.periods, p.tbar, p.beta);
    throw Error("concurrence_closed: no closed form for scheme B at phi = " + format_real(p.phi));
}

/// Evaluates one observable; DiscordOptimized yields two values (D, theta*).
inline std::vector<double> evaluate_observable(Observable o, const PointParameters& p, const OptimizerConfig& opt,
                                               int phi_grid) {
    if (!(p.beta >= 0.0) || !std::isfinite(p.beta)) throw Error("beta must be finite and >= 0");
    switch (o) {
        case Observable::Magnetization:
            return {magnetization_x(propagate(program_of(p), thermal_state(p.beta)))};
        case Observable::ConcurrenceOracle:
            return {concurrence_oracle(propagate(program_of(p), thermal_state(p.beta)))};
        case Observable::ConcurrenceClosed:
            return {concurrence_closed(p)};
        case Observable::DiscordExact:
            detail::require_scheme_a_like(p, "discord_exact");
            program_of(p).validate();
            return {discord_exact_x(detail::effective_a(p), static_cast<double>(p.periods), p.tbar, p.beta)};
        case Observable::DiscordOptimized: {
            detail::require_scheme_a_like(p, "discord_optimized");
            const auto rho = x_state_transform(propagate(program_of(p), thermal_state(p.beta)));
            const auto r = discord_of_state(rho, opt, phi_grid);
            return {r.D, r.theta_star};
        }
        case Observable::ConditionalEntropyCurve: {
            detail::require_scheme_a_like(p, "conditional_entropy_curve");
            if (!p.theta) throw Error("conditional_entropy_curve needs theta");
            const auto rho = x_state_transform(propagate(program_of(p), thermal_state(p.beta)));
            return {conditional_entropy(rho, Projector(*p.theta, 0.0))};
        }
    }
    throw Error("unhandled observable");
}

inline PointParameters point_at(const SweepSpec& spec, std::size_t index, std::vector<double>& coords) {
    PointParameters p = spec.base;
    coords.assign(spec.axes.size(), 0.0);
    for (std::size_t k = spec.axes.size(); k-- > 0;) {
        const auto& ax = spec.axes[k];
        const double v = ax.values[index % ax.values.size()];
        index /= ax.values.size();
        coords[k] = v;
        switch (ax.parameter) {
            case Parameter::A: p.a = v; break;
            case Parameter::Phi: p.phi = v; break;
            case Parameter::Tbar: p.tbar = v; break;
            case Parameter::Beta: p.beta = v; break;
            case Parameter::Theta: p.theta = v; break;
            case Parameter::Periods:
                if (!(v >= 0.0) || v != std::floor(v) || v > 9e15) throw Error("periods must be a non-negative integer");
                p.periods = static_cast<long long>(v);
                break;
        }
    }
    return p;
}

inline ReportRow evaluate_point(const SweepSpec& spec, std::size_t index) {
    ReportRow row;
    std::size_t width = 0;
    for (auto o : spec.observables) width += o == Observable::DiscordOptimized ? 2 : 1;
    row.values.assign(width, std::nullopt);

    PointParameters p;
    try {
        p = point_at(spec, index, row.parameters);
    } catch (const std::exception& e) {
        row.error = e.what();
        return row;
    }
    OptimizerConfig opt = spec.optimizer;
    opt.seed = point_seed(spec.seed, index);

    std::size_t col = 0;
    for (auto o : spec.observables) {
        const std::size_t n = o == Observable::DiscordOptimized ? 2 : 1;
        try {
            const auto v = evaluate_observable(o, p, opt, spec.phi_grid);
            for (std::size_t i = 0; i < n; ++i) {
                if (!std::isfinite(v[i])) throw Error(std::string(to_string(o)) + ": non-finite value");
            }
            for (std::size_t i = 0; i < n; ++i) row.values[col + i] = v[i];
        } catch (const std::exception& e) {
            if (!row.error.empty()) row.error += "; ";
            row.error += e.what();
        }
        col += n;
    }
    return row;
}

/// Evaluates every grid point; rows are in lexicographic axis order (last
/// axis fastest) regardless of the thread count.
inline CorrelationReport run_sweep(const SweepSpec& spec) {
    spec.validate();
    CorrelationReport report;
    report.columns = spec.columns();
    report.metadata.spec_hash = spec_hash(spec);
    report.metadata.seed = spec.seed;

    const std::size_t n = spec.size();
    report.rows.resize(n);
    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) report.rows[i] = evaluate_point(spec, i);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return report;
}

}  // namespace spinlock
