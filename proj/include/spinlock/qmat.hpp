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

// Dense 2x2 / 4x4 complex linear algebra for two spin-1/2 systems.
//
// Basis ordering is fixed everywhere: |00>, |01>, |10>, |11>, with the first
// tensor factor acting on spin 1.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "spinlock/error.hpp"

namespace spinlock {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix<Complex, 2, 2>;
using Mat4 = Eigen::Matrix<Complex, 4, 4>;

inline constexpr Complex kI{0.0, 1.0};

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kReconstruction = 1e-10;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPositivity = 1e-10;
}  // namespace tol

/// Largest entrywise modulus.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Complex z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    }
    return true;
}

template <typename A, typename B>
auto commutator(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    return (a * b - b * a).eval();
}

namespace pauli {
inline Mat2 identity() { return Mat2::Identity(); }
inline Mat2 x() {
    Mat2 m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}
inline Mat2 y() {
    Mat2 m;
    m << 0.0, -kI, kI, 0.0;
    return m;
}
inline Mat2 z() {
    Mat2 m;
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}
inline Mat2 hadamard() {
    Mat2 m;
    m << 1.0, 1.0, 1.0, -1.0;
    return m / std::sqrt(2.0);
}
}  // namespace pauli

/// Kronecker product a (x) b; `a` acts on spin 1.
inline Mat4 tensor(const Mat2& a, const Mat2& b) {
    Mat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

/// A 4x4 matrix known to be Hermitian to within tol::kHermitian. Stored
/// exactly Hermitian (the input is symmetrised after the check).
class HermitianMatrix4 {
public:
    HermitianMatrix4() : m_(Mat4::Zero()) {}

    explicit HermitianMatrix4(const Mat4& m) {
        if (!all_finite(m)) throw NotHermitian("non-finite entry");
        const double asym = max_abs(m - m.adjoint());
        if (asym > tol::kHermitian)
            throw NotHermitian("max |M - M^dagger| = " + std::to_string(asym));
        m_ = 0.5 * (m + m.adjoint());
    }

    const Mat4& matrix() const { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }

private:
    Mat4 m_;
};

class UnitaryMatrix4 {
public:
    UnitaryMatrix4() : m_(Mat4::Identity()) {}

    explicit UnitaryMatrix4(const Mat4& m) : m_(m) {
        if (!all_finite(m)) throw NotUnitary("non-finite entry");
        const double dev = max_abs(m.adjoint() * m - Mat4::Identity());
        if (dev > tol::kUnitary) throw NotUnitary("max |U^dagger U - I| = " + std::to_string(dev));
    }

    const Mat4& matrix() const { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }
    UnitaryMatrix4 adjoint() const { return UnitaryMatrix4(m_.adjoint().eval(), Unchecked{}); }

    friend UnitaryMatrix4 operator*(const UnitaryMatrix4& a, const UnitaryMatrix4& b) {
        return UnitaryMatrix4(a.m_ * b.m_);
    }

private:
    struct Unchecked {};
    UnitaryMatrix4(const Mat4& m, Unchecked) : m_(m) {}
    Mat4 m_;
};

struct HermitianEigen4 {
    std::array<double, 4> values;  // descending
    UnitaryMatrix4 vectors;        // columns are eigenvectors
};

namespace detail {

// Column phase gauge: first component with modulus above `eps` made positive real.
inline void fix_phase(Mat4& v) {
    constexpr double eps = 1e-12;
    for (int c = 0; c < 4; ++c) {
        for (int r = 0; r < 4; ++r) {
            const double mag = std::abs(v(r, c));
            if (mag > eps) {
                v.col(c) *= std::conj(v(r, c)) / mag;
                break;
            }
        }
    }
}

template <int N>
std::array<double, N> hermitian_spectrum(const Eigen::Matrix<Complex, N, N>& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Complex, N, N>> es(m, Eigen::EigenvaluesOnly);
    std::array<double, N> out{};
    for (int i = 0; i < N; ++i) out[i] = es.eigenvalues()(N - 1 - i);
    return out;
}

}  // namespace detail

/// h = V diag(values) V^dagger with eigenvalues sorted descending.
inline HermitianEigen4 eig_hermitian(const HermitianMatrix4& h) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(h.matrix());
    if (es.info() != Eigen::Success) throw NotHermitian("eigensolver did not converge");
    // Eigen returns ascending order; reverse it.
    HermitianEigen4 out;
    Mat4 v;
    for (int i = 0; i < 4; ++i) {
        out.values[i] = es.eigenvalues()(3 - i);
        v.col(i) = es.eigenvectors().col(3 - i);
    }
    detail::fix_phase(v);
    out.vectors = UnitaryMatrix4(v);
    return out;
}

/// Eigenvalues only, descending.
inline std::array<double, 4> spectrum(const HermitianMatrix4& h) {
    return detail::hermitian_spectrum<4>(h.matrix());
}

/// exp(-i t h), computed exactly from the eigendecomposition of h.
inline UnitaryMatrix4 expm_i(const HermitianMatrix4& h, double t) {
    const auto e = eig_hermitian(h);
    const Mat4& v = e.vectors.matrix();
    Eigen::Matrix<Complex, 4, 1> phases;
    for (int i = 0; i < 4; ++i) phases(i) = std::polar(1.0, -t * e.values[i]);
    return UnitaryMatrix4(v * phases.asDiagonal() * v.adjoint());
}

/// u^n for a unitary u and integer n >= 0, via the Schur form of the (normal)
/// matrix u. Eigenphases are renormalised to unit modulus so the result stays
/// unitary for large n.
inline UnitaryMatrix4 unitary_power(const UnitaryMatrix4& u, long long n) {
    if (n < 0) return unitary_power(u.adjoint(), -n);
    if (n == 0) return UnitaryMatrix4{};
    if (n == 1) return u;
    Eigen::ComplexSchur<Mat4> schur(u.matrix());
    const Mat4& q = schur.matrixU();
    Eigen::Matrix<Complex, 4, 1> diag;
    for (int i = 0; i < 4; ++i) {
        const double phase = std::arg(schur.matrixT()(i, i));
        diag(i) = std::polar(1.0, static_cast<double>(n) * phase);
    }
    return UnitaryMatrix4(q * diag.asDiagonal() * q.adjoint());
}

/// Conjugation u m u^dagger.
inline Mat4 conjugate(const UnitaryMatrix4& u, const Mat4& m) {
    return u.matrix() * m * u.matrix().adjoint();
}

/// A valid two-qubit state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
public:
    DensityMatrix() : m_(Mat4::Identity() / 4.0) {}

    explicit DensityMatrix(const Mat4& m) {
        HermitianMatrix4 h;
        try {
            h = HermitianMatrix4(m);
        } catch (const NotHermitian& e) {
            throw InvalidDensityMatrix(e.what());
        }
        const double tr = h.matrix().trace().real();
        if (std::abs(tr - 1.0) > tol::kTrace)
            throw InvalidDensityMatrix("trace = " + std::to_string(tr));
        const double min_eig = spectrum(h)[3];
        if (min_eig < -tol::kPositivity)
            throw InvalidDensityMatrix("min eigenvalue = " + std::to_string(min_eig));
        m_ = h.matrix();
    }

    static DensityMatrix maximally_mixed() { return DensityMatrix{}; }

    static DensityMatrix pure(const Eigen::Matrix<Complex, 4, 1>& psi) {
        const Eigen::Matrix<Complex, 4, 1> n = psi.normalized();
        return DensityMatrix(n * n.adjoint());
    }

    const Mat4& matrix() const { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }
    HermitianMatrix4 hermitian() const { return HermitianMatrix4(m_); }

private:
    Mat4 m_;
};

inline DensityMatrix evolve(const UnitaryMatrix4& u, const DensityMatrix& rho) {
    return DensityMatrix(conjugate(u, rho.matrix()));
}

enum class Spin { First = 1, Second = 2 };

/// Reduced 2x2 state after tracing out spin `which`.
inline Mat2 partial_trace(const DensityMatrix& rho, Spin which) {
    const Mat4& m = rho.matrix();
    Mat2 out = Mat2::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                if (which == Spin::Second)
                    out(i, j) += m(2 * i + k, 2 * j + k);
                else
                    out(i, j) += m(2 * k + i, 2 * k + j);
            }
        }
    }
    return out;
}

/// Eigenvalues of a Hermitian 2x2 matrix, descending.
inline std::array<double, 2> spectrum2(const Mat2& m) {
    return detail::hermitian_spectrum<2>(Mat2(0.5 * (m + m.adjoint())));
}

}  // namespace spinlock
