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

// Multiple-pulse spin-locking schemes as declarative programs, compiled to
// per-period propagators in the toggling frame.
//
// Scheme A:  P90(-y) - tau - (P90(x) - a tau - P90(x) - 2 tau -)^K
// Scheme B:  P90(-y) - tau - (Pphi(x) - 2 tau -)^K
//
// The preparation pulse is absorbed into the initial state (thermal_state),
// and pulses are instantaneous rotations.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "spinlock/hamiltonians.hpp"
#include "spinlock/qmat.hpp"

namespace spinlock {

enum class Scheme { A, B };

inline const char* to_string(Scheme s) { return s == Scheme::A ? "A" : "B"; }

struct PulseProgram {
    Scheme scheme = Scheme::A;
    double a = 2.0;                        // scheme A delay ratio
    double phi = std::numbers::pi / 2.0;   // scheme B flip angle, radians
    double tbar = 1.0;                     // d * tau
    long long periods = 0;                 // M

    static PulseProgram scheme_a(double a, double tbar, long long periods) {
        return {Scheme::A, a, std::numbers::pi / 2.0, tbar, periods};
    }
    static PulseProgram scheme_b(double phi, double tbar, long long periods) {
        return {Scheme::B, 2.0, phi, tbar, periods};
    }

    void validate() const {
        if (!std::isfinite(tbar) || tbar < 0.0) throw InvalidProgram("tbar must be >= 0");
        if (periods < 0) throw InvalidProgram("periods must be >= 0");
        if (scheme == Scheme::A) {
            if (!std::isfinite(a) || !(a > 0.0)) throw InvalidProgram("scheme A requires a > 0");
        } else {
            if (!std::isfinite(phi) || !(phi > 0.0) || !(phi < std::numbers::pi))
                throw InvalidProgram("scheme B requires 0 < phi < pi");
        }
    }
};

/// Smallest N <= max_pulses with N*phi a multiple of pi, if any.
inline std::optional<int> toggling_closure(double phi, int max_pulses = 64) {
    for (int n = 1; n <= max_pulses; ++n) {
        const double turns = n * phi / std::numbers::pi;
        if (std::abs(turns - std::round(turns)) < 1e-9 && std::round(turns) >= 1.0) return n;
    }
    return std::nullopt;
}

struct PeriodPropagator {
    enum class Mode {
        // u is the full toggling-frame period; propagate applies u^M.
        Frame,
        // Scheme B angle with no closing toggling frame: u is one lab-frame
        // pulse cycle exp(-2i tbar H_dz) exp(i phi Ix); propagate adds the
        // boundary half-delays and the frame correction.
        Cycle,
    };

    UnitaryMatrix4 u;
    double period_duration = 0.0;  // dimensionless
    int pulses_per_period = 0;
    Mode mode = Mode::Frame;
};

namespace detail {

inline UnitaryMatrix4 scheme_b_pulse(double phi) { return x_rotation(-phi); }

}  // namespace detail

inline PeriodPropagator compile_period(const PulseProgram& p) {
    p.validate();
    const double t = p.tbar;
    const auto hz = h_dz();
    const UnitaryMatrix4 half = expm_i(hz, t);

    if (p.scheme == Scheme::A) {
        // The pi/2 pulse pair toggles H_dz into H_dy for the a*tau window; the
        // leftover exp(-i pi Ix) commutes with H_dz and with the initial state.
        const UnitaryMatrix4 mid = expm_i(h_dy(), p.a * t);
        return {half * mid * half, (p.a + 2.0) * t, 2, PeriodPropagator::Mode::Frame};
    }

    if (const auto n = toggling_closure(p.phi)) {
        // Frames after k pulses: H_{k phi}, k = 1..n-1, each for 2 tau, with
        // half delays under H_dz at both ends.
        UnitaryMatrix4 u = half;
        for (int k = 1; k < *n; ++k) u = expm_i(h_rotated(k * p.phi), 2.0 * t) * u;
        u = half * u;
        return {u, 2.0 * (*n) * t, *n, PeriodPropagator::Mode::Frame};
    }

    const UnitaryMatrix4 cycle = expm_i(hz, 2.0 * t) * detail::scheme_b_pulse(p.phi);
    return {cycle, 2.0 * t, 1, PeriodPropagator::Mode::Cycle};
}

/// Literal pulse-by-pulse lab-frame product for one period:
/// F1 P F2 P ... F2 P F1 (n pulses). For scheme A P = exp(-i pi/2 Ix),
/// for scheme B P = exp(i phi Ix) and n is the toggling closure (or 1).
inline UnitaryMatrix4 literal_period_product(const PulseProgram& p) {
    p.validate();
    const double t = p.tbar;
    const auto hz = h_dz();
    const UnitaryMatrix4 f1 = expm_i(hz, t);
    if (p.scheme == Scheme::A) {
        const UnitaryMatrix4 pulse = x_rotation(std::numbers::pi / 2.0);
        return f1 * pulse * expm_i(hz, p.a * t) * pulse * f1;
    }
    const int n = toggling_closure(p.phi).value_or(1);
    const UnitaryMatrix4 pulse = detail::scheme_b_pulse(p.phi);
    const UnitaryMatrix4 f2 = expm_i(hz, 2.0 * t);
    UnitaryMatrix4 u = pulse * f1;
    for (int k = 1; k < n; ++k) u = pulse * f2 * u;
    return f1 * u;
}

/// Rotation relating the literal product to the toggling-frame period:
/// literal_period_product(p) == frame_correction(p) * compile_period(p).u
inline UnitaryMatrix4 frame_correction(const PulseProgram& p) {
    if (p.scheme == Scheme::A) return x_rotation(std::numbers::pi);
    const int n = toggling_closure(p.phi).value_or(1);
    return x_rotation(-n * p.phi);
}

/// Total toggling-frame propagator after p.periods periods.
inline UnitaryMatrix4 total_propagator(const PulseProgram& p) {
    const PeriodPropagator period = compile_period(p);
    if (p.periods == 0) return UnitaryMatrix4{};
    const UnitaryMatrix4 power = unitary_power(period.u, p.periods);
    if (period.mode == PeriodPropagator::Mode::Frame) return power;
    const UnitaryMatrix4 half = expm_i(h_dz(), p.tbar);
    const UnitaryMatrix4 undo = x_rotation(-static_cast<double>(p.periods) * p.phi).adjoint();
    return undo * half.adjoint() * power * half;
}

/// rho(M) = U^M rho0 U^M^dagger
inline DensityMatrix propagate(const PulseProgram& p, const DensityMatrix& rho0) {
    if (p.periods == 0) {
        p.validate();
        return rho0;
    }
    return evolve(total_propagator(p), rho0);
}

/// Tr{rho Ix}, in units of gamma*hbar.
inline double magnetization_x(const DensityMatrix& rho) {
    return (rho.matrix() * SpinOperators::get().Ix.matrix()).trace().real();
}

}  // namespace spinlock
