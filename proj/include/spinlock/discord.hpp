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

// Quantum discord of the scheme A state: the high-temperature expression,
// the exact X-state expression, and a measurement-angle search built on
// generic projective measurements.
//
// Measurements act on the second spin; D = S(rho_B) - S(rho) + min S_cond.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>

#include "spinlock/entangle.hpp"
#include "spinlock/mutation_optimizer.hpp"
#include "spinlock/pulsekit.hpp"
#include "spinlock/qmat.hpp"

namespace spinlock {

// Entropies (bits) ------------------------------------------------------------

/// -sum p log2 p with 0 log 0 = 0. Entries below -1e-12 are rejected, the
/// rest are clamped to [0, 1].
inline double shannon_entropy(std::span<const double> probs) {
    constexpr double kDust = 1e-12;
    double h = 0.0;
    for (double p : probs) {
        if (p < -kDust) throw NonPhysicalState("negative probability " + std::to_string(p));
        p = std::clamp(p, 0.0, 1.0);
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

inline double binary_entropy(double p) {
    const std::array<double, 2> v{p, 1.0 - p};
    return shannon_entropy(v);
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
    const auto ev = spectrum(rho.hermitian());
    return shannon_entropy(ev);
}

inline double von_neumann_entropy(const Mat2& rho) {
    const auto ev = spectrum2(rho);
    return shannon_entropy(ev);
}

// High-temperature form -------------------------------------------------------

/// rho ~ I/4 + A1x/4 (sx(x)I + I(x)sx) + Azy/4 (sy(x)sz + sz(x)sy), valid for beta << 1.
struct BlochDecomposition {
    double A1x = 0.0;
    double Azy = 0.0;
    double x = 0.0;

    static BlochDecomposition scheme_a(double a, double periods, double tbar, double beta) {
        const double x = scheme_a_phase(a, periods, tbar);
        return {0.5 * beta * std::cos(x), -0.5 * beta * std::sin(x), x};
    }

    Mat4 matrix() const {
        const Mat2 id = pauli::identity();
        return 0.25 * Mat4::Identity() +
               0.25 * A1x * (tensor(pauli::x(), id) + tensor(id, pauli::x())) +
               0.25 * Azy * (tensor(pauli::y(), pauli::z()) + tensor(pauli::z(), pauli::y()));
    }
};

/// beta^2 sin^2(x) / (8 ln 2)
inline double discord_high_temperature(double a, double periods, double tbar, double beta) {
    const double s = std::sin(scheme_a_phase(a, periods, tbar));
    return beta * beta * s * s / (8.0 * std::numbers::ln2);
}

/// Second-order conditional entropy for a measurement along unit vector n.
inline double conditional_entropy_high_t(const std::array<double, 3>& n, const BlochDecomposition& d) {
    const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (std::abs(norm - 1.0) > 1e-10) throw InvalidProjector("Bloch vector is not a unit vector");
    return 1.0 - (d.A1x * d.A1x + d.Azy * d.Azy * (1.0 - n[0] * n[0])) / (2.0 * std::numbers::ln2);
}

// Projective measurements ---------------------------------------------------

/// Rank-1 projector pair on one qubit, Pi0 = (I + n.sigma)/2 with
/// n = (sin theta cos Phi, sin theta sin Phi, cos theta).
class Projector {
public:
    Projector(double theta, double phi_angle) : theta_(theta) {
        if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi)
            throw InvalidProjector("theta must lie in [0, pi]");
        if (!std::isfinite(phi_angle)) throw InvalidProjector("Phi must be finite");
        const double two_pi = 2.0 * std::numbers::pi;
        phi_ = phi_angle - two_pi * std::floor(phi_angle / two_pi);
    }

    static Projector from_bloch(const std::array<double, 3>& n) {
        const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        if (std::abs(norm - 1.0) > 1e-10) throw InvalidProjector("Bloch vector is not a unit vector");
        return {std::acos(std::clamp(n[2] / norm, -1.0, 1.0)), std::atan2(n[1], n[0])};
    }

    double theta() const { return theta_; }
    double phi_angle() const { return phi_; }

    Mat2 pi0() const {
        const double c = std::cos(theta_ / 2.0);
        const double s = std::sin(theta_ / 2.0);
        const Complex off = 0.5 * std::sin(theta_) * std::polar(1.0, -phi_);
        Mat2 m;
        m << c * c, off, std::conj(off), s * s;
        return m;
    }
    Mat2 pi1() const { return Mat2(pauli::identity() - pi0()); }
    Mat2 operator[](int k) const { return k == 0 ? pi0() : pi1(); }

private:
    double theta_;
    double phi_ = 0.0;
};

struct MeasuredEnsemble {
    std::array<double, 2> p{};
    // Empty when the outcome probability is below 1e-14.
    std::array<std::optional<DensityMatrix>, 2> states;
};

/// Ensemble {p_k, rho_k} after measuring `side` with the projector pair.
inline MeasuredEnsemble measured_ensemble(const DensityMatrix& rho, const Projector& proj,
                                          Spin side = Spin::Second) {
    MeasuredEnsemble out;
    for (int k = 0; k < 2; ++k) {
        const Mat4 q = side == Spin::Second ? tensor(pauli::identity(), proj[k])
                                            : tensor(proj[k], pauli::identity());
        const Mat4 post = q * rho.matrix() * q;
        const double pk = post.trace().real();
        out.p[k] = pk;
        if (pk > 1e-14) out.states[k] = DensityMatrix(Mat4(post / pk));
    }
    return out;
}

/// sum_k p_k S(rho_k)
inline double conditional_entropy(const DensityMatrix& rho, const Projector& proj,
                                  Spin side = Spin::Second) {
    const auto ens = measured_ensemble(rho, proj, side);
    double s = 0.0;
    for (int k = 0; k < 2; ++k)
        if (ens.states[k]) s += ens.p[k] * von_neumann_entropy(*ens.states[k]);
    return s;
}

// X-state route ---------------------------------------------------------------

/// R rho R^dagger with R = H (x) H.
inline DensityMatrix x_state_transform(const DensityMatrix& rho) {
    static const UnitaryMatrix4 r(tensor(pauli::hadamard(), pauli::hadamard()));
    return evolve(r, rho);
}

/// Brute-force scheme A state after M periods, mapped to X form.
inline DensityMatrix scheme_a_x_state(double a, long long periods, double tbar, double beta) {
    return x_state_transform(propagate(PulseProgram::scheme_a(a, tbar, periods), thermal_state(beta)));
}

/// Diagonal (abar, b, b, dpar) and corner magnitude u of the transformed state.
struct XStateParams {
    double abar = 0.25;
    double b = 0.25;
    double dpar = 0.25;
    double u = 0.0;

    static XStateParams scheme_a(double a, double periods, double tbar, double beta) {
        const double t = std::tanh(beta / 2.0);
        const double x = scheme_a_phase(a, periods, tbar);
        return {0.25 + 0.5 * t * std::cos(x) + 0.25 * t * t, 0.25 - 0.25 * t * t,
                0.25 - 0.5 * t * std::cos(x) + 0.25 * t * t, -0.5 * t * std::sin(x)};
    }

    /// sqrt((abar - dpar)^2 + 4 u^2)
    double radius() const { return std::sqrt((abar - dpar) * (abar - dpar) + 4.0 * u * u); }

    double entropy_total() const {
        const double r = radius();
        const std::array<double, 4> ev{(abar + dpar + r) / 2.0, (abar + dpar - r) / 2.0, b, b};
        return shannon_entropy(ev);
    }
    /// S(rho_A) = S(rho_B)
    double entropy_marginal() const {
        const std::array<double, 2> ev{abar + b, b + dpar};
        return shannon_entropy(ev);
    }
    /// Conditional entropy for the sigma_x measurement (theta = pi/2).
    double conditional_entropy_min() const { return binary_entropy((1.0 + radius()) / 2.0); }
};

inline double discord_exact_x(double a, double periods, double tbar, double beta) {
    const auto xs = XStateParams::scheme_a(a, periods, tbar, beta);
    return xs.entropy_marginal() - xs.entropy_total() + xs.conditional_entropy_min();
}

/// S_cond(theta) at Phi = 0 on the transformed scheme A state.
inline double conditional_entropy_theta(double a, long long periods, double tbar, double beta,
                                        double theta) {
    return conditional_entropy(scheme_a_x_state(a, periods, tbar, beta), Projector(theta, 0.0));
}

struct DiscordResult {
    double D = 0.0;
    double theta_star = 0.0;  // optimiser's best theta
    double phi_star = 0.0;
    double s_cond_min = 0.0;
    bool converged = false;
};

/// Discord of an arbitrary state, measuring spin 2 and minimising S_cond over
/// theta (at Phi = 0, or over `phi_grid` evenly spaced Phi values when > 0).
/// The theta = 0 and theta = pi/2 boundary projectors always enter the minimum.
inline DiscordResult discord_of_state(const DensityMatrix& rho, const OptimizerConfig& opt,
                                      int phi_grid = 0) {
    const double s_b = von_neumann_entropy(partial_trace(rho, Spin::First));
    const double s_ab = von_neumann_entropy(rho);

    DiscordResult best;
    best.s_cond_min = std::numeric_limits<double>::infinity();
    const int n_phi = std::max(1, phi_grid);
    bool all_converged = true;
    for (int j = 0; j < n_phi; ++j) {
        const double phi = phi_grid > 0 ? 2.0 * std::numbers::pi * j / phi_grid : 0.0;
        auto objective = [&](double theta) { return conditional_entropy(rho, Projector(theta, phi)); };
        const auto r = minimize_random_mutation(objective, 0.0, std::numbers::pi, opt);
        all_converged = all_converged && r.converged;
        if (j == 0 || r.value < best.s_cond_min) {
            best.s_cond_min = r.value;
            best.theta_star = r.argmin;
            best.phi_star = phi;
        }
    }
    const double s0 = conditional_entropy(rho, Projector(0.0, 0.0));
    const double s90 = conditional_entropy(rho, Projector(std::numbers::pi / 2.0, 0.0));
    const double s_min = std::min({best.s_cond_min, s0, s90});
    best.s_cond_min = s_min;
    best.D = s_b - s_ab + s_min;
    best.converged = all_converged;
    return best;
}

inline DiscordResult discord_optimized(double a, long long periods, double tbar, double beta,
                                       const OptimizerConfig& opt, int phi_grid = 0) {
    return discord_of_state(scheme_a_x_state(a, periods, tbar, beta), opt, phi_grid);
}

}  // namespace spinlock
