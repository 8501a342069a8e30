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

// Secular dipolar Hamiltonian of an isolated spin pair and its rotations
// about x. Times are dimensionless (tbar = d * tau), so d defaults to 1.

#include <cmath>
#include <numbers>

#include "spinlock/qmat.hpp"

namespace spinlock {

/// Dipolar coupling constant d > 0.
class CouplingConstant {
public:
    constexpr CouplingConstant() = default;
    explicit CouplingConstant(double d) : d_(d) {
        if (!(d > 0.0) || !std::isfinite(d)) throw Error("coupling constant must be positive");
    }
    constexpr double value() const { return d_; }

private:
    double d_ = 1.0;
};

/// Single-spin angular momentum components (spin 1/2, eigenvalues +-1/2)
/// embedded in the two-spin space.
struct SpinOperators {
    HermitianMatrix4 I1x, I1y, I1z;
    HermitianMatrix4 I2x, I2y, I2z;
    HermitianMatrix4 Ix;  // I1x + I2x

    static const SpinOperators& get() {
        static const SpinOperators ops = build();
        return ops;
    }

    /// I1 . I2
    Mat4 scalar_product() const {
        return I1x.matrix() * I2x.matrix() + I1y.matrix() * I2y.matrix() +
               I1z.matrix() * I2z.matrix();
    }

private:
    static SpinOperators build() {
        const Mat2 id = pauli::identity();
        const Mat2 sx = 0.5 * pauli::x();
        const Mat2 sy = 0.5 * pauli::y();
        const Mat2 sz = 0.5 * pauli::z();
        SpinOperators s;
        s.I1x = HermitianMatrix4(tensor(sx, id));
        s.I1y = HermitianMatrix4(tensor(sy, id));
        s.I1z = HermitianMatrix4(tensor(sz, id));
        s.I2x = HermitianMatrix4(tensor(id, sx));
        s.I2y = HermitianMatrix4(tensor(id, sy));
        s.I2z = HermitianMatrix4(tensor(id, sz));
        s.Ix = HermitianMatrix4(Mat4(s.I1x.matrix() + s.I2x.matrix()));
        return s;
    }
};

/// H_dz = d (3 I1z I2z - I1.I2)
inline HermitianMatrix4 h_dz(CouplingConstant d = {}) {
    const auto& s = SpinOperators::get();
    const Mat4 h = 3.0 * s.I1z.matrix() * s.I2z.matrix() - s.scalar_product();
    return HermitianMatrix4(Mat4(d.value() * h));
}

/// Rotation exp(-i phi Ix).
inline UnitaryMatrix4 x_rotation(double phi) {
    return expm_i(SpinOperators::get().Ix, phi);
}

/// exp(-i phi Ix) H_dz exp(i phi Ix). H_dz commutes with exp(i pi Ix), so
/// the angle is reduced mod pi first.
inline HermitianMatrix4 h_rotated(double phi, CouplingConstant d = {}) {
    const double reduced = phi - std::numbers::pi * std::floor(phi / std::numbers::pi);
    if (reduced == 0.0) return h_dz(d);
    return HermitianMatrix4(conjugate(x_rotation(reduced), h_dz(d).matrix()));
}

/// H_dy = h_rotated(pi/2)
inline HermitianMatrix4 h_dy(CouplingConstant d = {}) {
    return h_rotated(std::numbers::pi / 2.0, d);
}

/// Equilibrium state after the preparation pulse:
/// exp(beta I1x) (x) exp(beta I2x) / (4 cosh^2(beta/2)).
inline DensityMatrix thermal_state(double beta) {
    if (!std::isfinite(beta) || beta < 0.0) throw Error("beta must be finite and non-negative");
    // exp(beta sx / 2) normalised by 2 cosh(beta/2) is (I + tanh(beta/2) sx) / 2.
    const double t = std::tanh(beta / 2.0);
    const Mat2 single = 0.5 * (pauli::identity() + t * pauli::x());
    return DensityMatrix(tensor(single, single));
}

}  // namespace spinlock
