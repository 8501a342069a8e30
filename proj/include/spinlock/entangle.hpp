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

// Concurrence of two-spin states: the generic Wootters construction and the
// closed forms for the two spin-locking schemes.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "spinlock/hamiltonians.hpp"
#include "spinlock/pulsekit.hpp"
#include "spinlock/qmat.hpp"

namespace spinlock {

/// Square roots of the eigenvalues of rho * rho~, sorted descending.
struct WoottersSpectrum {
    std::array<double, 4> lambda{};

    static WoottersSpectrum sorted(std::array<double, 4> l) {
        std::sort(l.begin(), l.end(), std::greater<>());
        return {l};
    }

    /// 2 lambda_max - sum(lambda); may be negative.
    double margin() const { return 2.0 * lambda[0] - (lambda[0] + lambda[1] + lambda[2] + lambda[3]); }
    double concurrence() const { return std::max(0.0, margin()); }
};

/// (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)
inline Mat4 spin_flip(const DensityMatrix& rho) {
    static const Mat4 yy = tensor(pauli::y(), pauli::y());
    return yy * rho.matrix().conjugate() * yy;
}

namespace detail {

inline Mat4 psd_sqrt(const HermitianMatrix4& h) {
    const auto e = eig_hermitian(h);
    const Mat4& v = e.vectors.matrix();
    Eigen::Matrix<Complex, 4, 1> d;
    for (int i = 0; i < 4; ++i) d(i) = std::sqrt(std::max(0.0, e.values[i]));
    return v * d.asDiagonal() * v.adjoint();
}

}  // namespace detail

/// Eigenvalues of rho rho~ through the similar Hermitian matrix
/// sqrt(rho) rho~ sqrt(rho).
inline WoottersSpectrum wootters_spectrum(const DensityMatrix& rho) {
    constexpr double kDust = 1e-8;
    const Mat4 root = detail::psd_sqrt(rho.hermitian());
    const Mat4 proxy = root * spin_flip(rho) * root;
    const auto mu = detail::hermitian_spectrum<4>(Mat4(0.5 * (proxy + proxy.adjoint())));
    std::array<double, 4> l{};
    for (int i = 0; i < 4; ++i) {
        if (mu[i] < -kDust)
            throw NonPhysicalState("rho*rho~ eigenvalue " + std::to_string(mu[i]));
        l[i] = std::sqrt(std::max(0.0, mu[i]));
    }
    return WoottersSpectrum::sorted(l);
}

inline double concurrence_oracle(const DensityMatrix& rho) {
    return wootters_spectrum(rho).concurrence();
}

// Scheme A ----------------------------------------------------------------

/// Phase argument (3a - 6) M tbar / 2 that all scheme A observables depend on.
inline double scheme_a_phase(double a, double periods, double tbar) {
    return 1.5 * (a - 2.0) * periods * tbar;
}

inline WoottersSpectrum wootters_scheme_a(double a, double periods, double tbar, double beta) {
    const double t = std::tanh(beta / 2.0);
    const double x = scheme_a_phase(a, periods, tbar);
    const double c = std::cos(x);
    const double s = std::abs(std::sin(x));
    const double root = 0.5 * std::sqrt(std::max(0.0, (1 + t * t) * (1 + t * t) - 4 * t * t * c * c));
    const double low = (1.0 - t * t) / 4.0;
    return WoottersSpectrum::sorted({0.5 * (root + t * s), 0.5 * (root - t * s), low, low});
}

inline double concurrence_scheme_a(double a, double periods, double tbar, double beta) {
    const double t = std::tanh(beta / 2.0);
    const double x = scheme_a_phase(a, periods, tbar);
    return std::max(0.0, t * std::abs(std::sin(x)) - (1.0 - t * t) / 2.0);
}

// Scheme B, phi = pi/4 ------------------------------------------------------

/// Auxiliary functions of tbar and the state parameters p1, p3, p4, p6, p7.
/// The p's are entries of rho(8 M tau):
///   rho = [[1/2-p1, z, z, p7], [z*, p1, p6, z*], [z*, p6, p1, z*], [p7, z, z, 1/2-p1]]
/// with z = p4 + i p3.
struct SchemeBAuxiliaries {
    double s = 0, r = 0, q = 0, p = 0, Phi = 0;
    double p1 = 0, p3 = 0, p4 = 0, p6 = 0, p7 = 0;
};

inline SchemeBAuxiliaries scheme_b_auxiliaries(double periods, double tbar, double beta) {
    SchemeBAuxiliaries aux;
    const double th = std::tanh(beta / 2.0);
    const double m = periods;
    aux.s = std::sin(6 * tbar) - 2 * std::sin(3 * tbar);
    aux.r = std::cos(4.5 * tbar) - std::cos(1.5 * tbar);
    const double q2 = 26 - 24 * std::cos(6 * tbar) - 2 * std::cos(12 * tbar) + 16 * std::cos(9 * tbar) -
                      16 * std::cos(3 * tbar);
    aux.q = 0.5 * std::sqrt(std::max(0.0, q2));
    aux.p = 4 * std::cos(3 * tbar) - std::cos(6 * tbar) + 1;
    aux.Phi = std::atan2(aux.q, aux.p);

    // sin^2(M Phi) / q^2 and sin(2 M Phi) / q, with their q -> 0 limits.
    double sin2_over_q2 = 0.0;
    double sin2m_over_q = 0.0;
    if (aux.q > 1e-12) {
        const double sm = std::sin(m * aux.Phi);
        sin2_over_q2 = sm * sm / (aux.q * aux.q);
        sin2m_over_q = std::sin(2 * m * aux.Phi) / aux.q;
    } else if (std::abs(aux.p) > 1e-12) {
        sin2_over_q2 = m * m / (aux.p * aux.p);
        sin2m_over_q = 2 * m / aux.p;
    }

    const double sr = sin2_over_q2 * aux.s * aux.r * th;
    aux.p1 = 0.25 + sr;
    aux.p3 = 0.25 * sin2m_over_q * aux.s * th;
    aux.p4 = 0.25 * (1 - 2 * sin2_over_q2 * aux.s * aux.s) * th;
    aux.p6 = 0.25 * (th * th + 4 * sr);
    aux.p7 = 0.25 * (th * th - 4 * sr);
    return aux;
}

/// Wootters spectrum from the scheme B state parameters. The two block roots
/// are (S4 +- S3)/2; the smaller one is taken as |S3 - S4|/2 so it stays a
/// square root.
inline WoottersSpectrum wootters_scheme_b_quarter(double periods, double tbar, double beta) {
    const auto a = scheme_b_auxiliaries(periods, tbar, beta);
    const double d1 = 2 * a.p1 + a.p6 - 0.5 - a.p7;
    const double s3 = std::sqrt(d1 * d1 + 16 * a.p3 * a.p3);
    const double e = 0.5 + a.p6 + a.p7;
    const double s4 = std::sqrt(std::max(0.0, e * e - 16 * a.p4 * a.p4));
    const double u = std::abs(2 * a.p1 - a.p6 - 0.5 + a.p7);
    const double v = std::abs(0.5 - a.p6 - a.p7);
    return WoottersSpectrum::sorted({0.5 * (s3 + s4), 0.5 * std::abs(s3 - s4), 0.5 * (u + v),
                                     0.5 * std::abs(u - v)});
}

inline double concurrence_scheme_b_quarter(double periods, double tbar, double beta) {
    return wootters_scheme_b_quarter(periods, tbar, beta).concurrence();
}

// Temperature helpers -------------------------------------------------------

namespace constants {
inline constexpr double kHbar = 1.054e-34;      // J s
inline constexpr double kBoltzmann = 1.38e-23;  // J / K
}  // namespace constants

/// beta at which tanh(beta/2) = sqrt(2) - 1, i.e. |ln(sqrt(2) - 1)|.
inline double critical_beta() { return std::log(1.0 + std::numbers::sqrt2); }

/// Critical temperature in kelvin for Larmor angular frequency omega0 (rad/s).
inline double critical_temperature(double omega0) {
    if (!(omega0 > 0.0)) throw Error("omega0 must be positive");
    return constants::kHbar * omega0 / (constants::kBoltzmann * critical_beta());
}

/// Concurrence inferred from the locked magnetization (units of gamma*hbar).
inline double concurrence_from_magnetization(double mx, double beta) {
    const double t = std::tanh(beta / 2.0);
    if (std::abs(mx) > t + 1e-12)
        throw MagnetizationOutOfRange("|mx| = " + std::to_string(std::abs(mx)) +
                                      " exceeds tanh(beta/2) = " + std::to_string(t));
    return std::max(0.0, std::sqrt(std::max(0.0, t * t - mx * mx)) - (1.0 - t * t) / 2.0);
}

}  // namespace spinlock
