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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "spinlock/pulsekit.hpp"

namespace spinlock {
namespace {

using std::numbers::pi;

Mat4 g_transform() {
    Mat4 g;
    g << 1, 0, 0, 1,  //
        0, 1, 1, 0,   //
        0, 1, -1, 0,  //
        1, 0, 0, -1;
    return g / std::sqrt(2.0);
}

// Closed-form rho after M scheme A periods, written out entry by entry.
Mat4 scheme_a_state_reference(double a, long long m, double tbar, double beta) {
    const double c2 = 2 * std::cosh(beta / 2) * std::cosh(beta / 2);
    const double s2 = 2 * std::sinh(beta / 2) * std::sinh(beta / 2);
    const double sh = std::sinh(beta);
    const Complex ep = std::polar(sh, (3 * a - 6) / 2 * m * tbar);
    const Complex em = std::conj(ep);
    Mat4 r;
    r << c2, ep, ep, s2,  //
        em, c2, s2, em,   //
        em, s2, c2, em,   //
        s2, ep, ep, c2;
    return r / (8 * std::cosh(beta / 2) * std::cosh(beta / 2));
}

TEST(CompilePeriod, SchemeAZeroTimeIsIdentity) {
    const auto p = compile_period(PulseProgram::scheme_a(3.0, 0.0, 1));
    EXPECT_LT(max_abs(p.u.matrix() - Mat4::Identity()), 1e-15);
}

TEST(CompilePeriod, SchemeAExplicitMatrixAndDiagonalForm) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ua(0.1, 6.0), ut(0.01, 3.0);
    const Mat4 g = g_transform();
    for (int trial = 0; trial < 50; ++trial) {
        const double a = ua(rng), t = ut(rng);
        const auto period = compile_period(PulseProgram::scheme_a(a, t, 1));
        const Mat4& u = period.u.matrix();
        EXPECT_NEAR(period.period_duration, (a + 2) * t, 1e-15);

        const Complex e1 = std::polar(1.0, (a - 1) * t);
        const Complex e2 = std::polar(1.0, -(a - 4) / 2 * t);
        const Complex e3 = std::polar(1.0, -(a + 2) / 2 * t);
        Mat4 explicit_u;
        explicit_u << e3 + e1, 0, 0, e1 - e3,  //
            0, 1.0 + e2, e2 - 1.0, 0,          //
            0, e2 - 1.0, 1.0 + e2, 0,          //
            e1 - e3, 0, 0, e3 + e1;
        EXPECT_LT(max_abs(u - 0.5 * explicit_u), 1e-12);

        const Mat4 d = g * u * g;
        Eigen::Matrix<Complex, 4, 1> diag(e1, e2, 1.0, e3);
        EXPECT_LT(max_abs(d - Mat4(diag.asDiagonal())), 1e-12);

        // centrally symmetric
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) EXPECT_LT(std::abs(u(i, j) - u(3 - i, 3 - j)), 1e-12);
    }
}

TEST(CompilePeriod, SchemeAMatchesLiteralPulses) {
    const auto p = PulseProgram::scheme_a(3.3, 0.4, 1);
    const Mat4 lit = literal_period_product(p).matrix();
    const Mat4 frame = compile_period(p).u.matrix();
    EXPECT_LT(max_abs(lit - frame_correction(p).matrix() * frame), 1e-12);
}

TEST(CompilePeriod, SchemeBQuarterPiMatchesFrameProduct) {
    const double t = 0.3;
    const auto p = PulseProgram::scheme_b(pi / 4, t, 1);
    const auto period = compile_period(p);
    EXPECT_EQ(period.pulses_per_period, 4);
    EXPECT_EQ(period.mode, PeriodPropagator::Mode::Frame);
    EXPECT_NEAR(period.period_duration, 8 * t, 1e-15);

    // Frame product from hand-entered Hamiltonians and the Taylor oracle.
    const Complex i3 = 3.0 * kI;
    Mat4 hq, h3q, hy;
    hq << 1.0, i3, i3, -3.0, -i3, -1.0, -1.0, -i3, -i3, -1.0, -1.0, -i3, -3.0, i3, i3, 1.0;
    h3q << 1.0, -i3, -i3, -3.0, i3, -1.0, -1.0, i3, i3, -1.0, -1.0, i3, -3.0, -i3, -i3, 1.0;
    hy << -1, 0, 0, -3, 0, 1, 1, 0, 0, 1, 1, 0, -3, 0, 0, -1;
    hq /= 8.0;
    h3q /= 8.0;
    hy /= 4.0;
    Mat4 hz;
    hz << 0.5, 0, 0, 0, 0, -0.5, -0.5, 0, 0, -0.5, -0.5, 0, 0, 0, 0, 0.5;
    using oracle::expm_taylor;
    const Mat4 eq_frame = expm_taylor(hz, t) * expm_taylor(h3q, 2 * t) * expm_taylor(hy, 2 * t) *
                          expm_taylor(hq, 2 * t) * expm_taylor(hz, t);
    EXPECT_LT(max_abs(period.u.matrix() - eq_frame), 1e-10);

    // Literal pulse-by-pulse product, pulses exp(i pi/4 Ix).
    const Mat4 pulse = expm_taylor(SpinOperators::get().Ix.matrix(), -pi / 4);
    const Mat4 f1 = expm_taylor(hz, t), f2 = expm_taylor(hz, 2 * t);
    const Mat4 literal = f1 * pulse * f2 * pulse * f2 * pulse * f2 * pulse * f1;
    EXPECT_LT(max_abs(literal_period_product(p).matrix() - literal), 1e-10);
    // exp(-i pi Ix) relates the two.
    const Mat4 rot = expm_taylor(SpinOperators::get().Ix.matrix(), pi);
    EXPECT_LT(max_abs(literal - rot * eq_frame), 1e-10);
    EXPECT_LT(max_abs(frame_correction(p).matrix() - rot), 1e-10);
}

TEST(CompilePeriod, SchemeBCycleModeForNonClosingAngle) {
    const auto p = PulseProgram::scheme_b(1.0, 0.25, 1);
    EXPECT_FALSE(toggling_closure(1.0).has_value());
    const auto period = compile_period(p);
    EXPECT_EQ(period.mode, PeriodPropagator::Mode::Cycle);
    EXPECT_EQ(period.pulses_per_period, 1);
    EXPECT_NEAR(period.period_duration, 0.5, 1e-15);
    const Mat4 expected = oracle::expm_taylor(h_dz().matrix(), 0.5) *
                          oracle::expm_taylor(SpinOperators::get().Ix.matrix(), -1.0);
    EXPECT_LT(max_abs(period.u.matrix() - expected), 1e-12);
}

TEST(TogglingClosure, DetectsRationalAngles) {
    EXPECT_EQ(toggling_closure(pi / 2), 2);
    EXPECT_EQ(toggling_closure(pi / 4), 4);
    EXPECT_EQ(toggling_closure(0.7853981633974483), 4);
    EXPECT_EQ(toggling_closure(2 * pi / 3), 3);
    EXPECT_EQ(toggling_closure(3 * pi / 4), 4);
}

TEST(CompilePeriod, InvalidPrograms) {
    EXPECT_THROW(compile_period(PulseProgram::scheme_a(0.0, 1.0, 1)), InvalidProgram);
    EXPECT_THROW(compile_period(PulseProgram::scheme_a(-1.0, 1.0, 1)), InvalidProgram);
    EXPECT_THROW(compile_period(PulseProgram::scheme_b(0.0, 1.0, 1)), InvalidProgram);
    EXPECT_THROW(compile_period(PulseProgram::scheme_b(pi, 1.0, 1)), InvalidProgram);
    EXPECT_THROW(compile_period(PulseProgram::scheme_a(3.0, -1.0, 1)), InvalidProgram);
    EXPECT_THROW(propagate(PulseProgram::scheme_a(3.0, 1.0, -1), thermal_state(1.0)), InvalidProgram);
    EXPECT_THROW(propagate(PulseProgram::scheme_a(0.0, 1.0, 0), thermal_state(1.0)), InvalidProgram);
}

TEST(Propagate, ZeroPeriodsReturnsInitialState) {
    const auto rho0 = thermal_state(1.3);
    const auto rho = propagate(PulseProgram::scheme_a(3.0, 0.7, 0), rho0);
    EXPECT_LT(max_abs(rho.matrix() - rho0.matrix()), 1e-15);
}

TEST(Propagate, SchemeAMatchesClosedFormState) {
    for (double a : {0.5, 1.0, 2.0, 3.0, 5.0})
        for (double beta : {0.0, 1.0, 4.0})
            for (double t : {0.1, 1.0, 2.0})
                for (long long m : {1LL, 5LL, 50LL, 1000LL}) {
                    const auto rho = propagate(PulseProgram::scheme_a(a, t, m), thermal_state(beta));
                    EXPECT_LT(max_abs(rho.matrix() - scheme_a_state_reference(a, m, t, beta)), 1e-10)
                        << a << " " << beta << " " << t << " " << m;
                }
}

TEST(Propagate, FrozenOffDiagonalEntry) {
    // a = 3, M = 1, tbar = 1, beta = 2: sinh(2) e^{1.5 i} / (8 cosh^2 1)
    const auto rho = propagate(PulseProgram::scheme_a(3.0, 1.0, 1), thermal_state(2.0));
    const Complex expected = std::polar(std::sinh(2.0), 1.5) / (8 * std::cosh(1.0) * std::cosh(1.0));
    EXPECT_LT(std::abs(rho(0, 1) - expected), 1e-12);
    EXPECT_NEAR(expected.real(), 0.01346825984969673, 1e-15);
    EXPECT_NEAR(expected.imag(), 0.18992158809820545, 1e-15);

    // Independent route: Taylor exponentials of the toggled product.
    using oracle::expm_taylor;
    const Mat4 u = expm_taylor(h_dz().matrix(), 1.0) * expm_taylor(h_dy().matrix(), 3.0) *
                   expm_taylor(h_dz().matrix(), 1.0);
    const Mat4 r = u * thermal_state(2.0).matrix() * u.adjoint();
    EXPECT_LT(std::abs(r(0, 1) - expected), 1e-12);
}

TEST(Propagate, EqualDelaysFreezeTheState) {
    const auto rho0 = thermal_state(3.0);
    const auto once = propagate(PulseProgram::scheme_a(2.0, 0.9, 1), rho0);
    for (long long m : {2LL, 17LL, 400LL}) {
        const auto rho = propagate(PulseProgram::scheme_a(2.0, 0.9, m), rho0);
        EXPECT_LT(max_abs(rho.matrix() - once.matrix()), 1e-10);
        EXPECT_LT(max_abs(rho.matrix() - rho0.matrix()), 1e-10);
    }
}

TEST(Propagate, SchemesCoincideForNinetyDegreePulses) {
    for (double t : {0.05, 0.4, 1.7})
        for (long long m : {1LL, 9LL, 120LL}) {
            const auto rho0 = thermal_state(2.2);
            const auto ra = propagate(PulseProgram::scheme_a(2.0, t, m), rho0);
            const auto rb = propagate(PulseProgram::scheme_b(pi / 2, t, m), rho0);
            EXPECT_LT(max_abs(ra.matrix() - rb.matrix()), 1e-10);
        }
}

TEST(Propagate, CycleModeMatchesLiteralSequence) {
    // Non-closing angle: K pulses, start at tau, stop at the middle of the last window.
    const double phi = 1.0, t = 0.2, beta = 2.0;
    const long long k = 7;
    using oracle::expm_taylor;
    const Mat4 ix = SpinOperators::get().Ix.matrix();
    const Mat4 pulse = expm_taylor(ix, -phi);
    const Mat4 f1 = expm_taylor(h_dz().matrix(), t), f2 = expm_taylor(h_dz().matrix(), 2 * t);
    Mat4 lab = pulse * f1;
    for (long long j = 1; j < k; ++j) lab = (pulse * f2 * lab).eval();
    lab = (f1 * lab).eval();
    const Mat4 toggled = expm_taylor(ix, k * phi) * lab;  // exp(-i K phi Ix) removes the pulses
    const Mat4 expected = toggled * thermal_state(beta).matrix() * toggled.adjoint();
    const auto rho = propagate(PulseProgram::scheme_b(phi, t, k), thermal_state(beta));
    EXPECT_LT(max_abs(rho.matrix() - expected), 1e-10);
}

TEST(Propagate, StateValidityOnRandomPrograms) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ua(0.05, 6.0), uphi(0.01, pi - 0.01), ut(0.001, 3.0),
        ubeta(0.0, 8.0);
    std::uniform_int_distribution<long long> um(0, 1000);
    for (int trial = 0; trial < 300; ++trial) {
        const bool a_scheme = trial % 2 == 0;
        const auto p = a_scheme ? PulseProgram::scheme_a(ua(rng), ut(rng), um(rng))
                                : PulseProgram::scheme_b(uphi(rng), ut(rng), um(rng));
        const auto rho = propagate(p, thermal_state(ubeta(rng)));
        EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
        EXPECT_GE(spectrum(rho.hermitian())[3], -1e-10);
    }
}

TEST(Magnetization, InitialStateAndLimits) {
    for (double beta : {0.0, 0.5, 2.0, 6.0}) {
        EXPECT_NEAR(magnetization_x(thermal_state(beta)), std::tanh(beta / 2), 1e-14);
        for (long long m : {1LL, 10LL, 300LL})
            EXPECT_NEAR(magnetization_x(propagate(PulseProgram::scheme_a(2.0, 0.8, m), thermal_state(beta))),
                        std::tanh(beta / 2), 1e-12);
    }
    EXPECT_EQ(magnetization_x(DensityMatrix::maximally_mixed()), 0.0);
}

TEST(Magnetization, ClosedFormOverGrid) {
    for (double a : {0.5, 1.0, 3.0, 5.0})
        for (double beta : {0.5, 2.0, 7.0})
            for (double t : {0.1, 1.0})
                for (long long m : {1LL, 3LL, 80LL}) {
                    const double mx =
                        magnetization_x(propagate(PulseProgram::scheme_a(a, t, m), thermal_state(beta)));
                    EXPECT_NEAR(mx, std::tanh(beta / 2) * std::cos((3 * a - 6) / 2 * m * t), 1e-10);
                }
    const double mx = magnetization_x(propagate(PulseProgram::scheme_a(3.0, 1.0, 1), thermal_state(2.0)));
    EXPECT_NEAR(mx, 0.053873039398786515, 1e-12);
}

}  // namespace
}  // namespace spinlock
