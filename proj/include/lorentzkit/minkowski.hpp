#pragma once

// Linear algebra of Minkowski space R^4_1 with signature (-,+,+,+) and c = 1.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "lorentzkit/error.hpp"

namespace lorentzkit {

/// A point or vector of R^4_1, components (x0, x1, x2, x3).
class FourVector {
public:
    constexpr FourVector() = default;
    FourVector(double x0, double x1, double x2, double x3) : x_{x0, x1, x2, x3} {
        for (double v : x_) {
            if (!std::isfinite(v)) fail(ErrorKind::Numerical, "non-finite FourVector component");
        }
    }

    static FourVector basis(std::size_t i) {
        FourVector v;
        v.x_.at(i) = 1.0;
        return v;
    }

    double operator[](std::size_t i) const { return x_[i]; }
    const std::array<double, 4>& components() const { return x_; }

    /// Rest-space part (x1, x2, x3).
    std::array<double, 3> spatial() const { return {x_[1], x_[2], x_[3]}; }

    friend FourVector operator+(const FourVector& a, const FourVector& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
    }
    friend FourVector operator-(const FourVector& a, const FourVector& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
    }
    friend FourVector operator*(double s, const FourVector& a) {
        return {s * a[0], s * a[1], s * a[2], s * a[3]};
    }
    friend FourVector operator*(const FourVector& a, double s) { return s * a; }
    friend bool operator==(const FourVector&, const FourVector&) = default;

private:
    std::array<double, 4> x_{};
};

/// <u,v> = -u0 v0 + u1 v1 + u2 v2 + u3 v3
inline double lorentz_product(const FourVector& u, const FourVector& v) {
    return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

inline double max_abs_difference(const FourVector& a, const FourVector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline constexpr double kFrameTolerance = 1e-12;

/// Four orthonormal vectors with e0 unit timelike and future-directed.
class MinkowskiFrame {
public:
    static MinkowskiFrame make(const FourVector& e0, const FourVector& e1, const FourVector& e2,
                               const FourVector& e3, double tol = kFrameTolerance) {
        const std::array<FourVector, 4> e{e0, e1, e2, e3};
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i; j < 4; ++j) {
                const double expected = (i != j) ? 0.0 : (i == 0 ? -1.0 : 1.0);
                const double got = lorentz_product(e[i], e[j]);
                if (std::abs(got - expected) > tol) {
                    fail(ErrorKind::Frame, "<e" + std::to_string(i) + ",e" + std::to_string(j) +
                                               "> = " + std::to_string(got) + ", expected " +
                                               std::to_string(expected));
                }
            }
        }
        // sign test, no tolerance
        if (!(lorentz_product(e0, FourVector::basis(0)) < 0.0)) {
            fail(ErrorKind::Frame, "e0 is not future-directed");
        }
        return MinkowskiFrame(e);
    }

    static MinkowskiFrame canonical() {
        return MinkowskiFrame({FourVector::basis(0), FourVector::basis(1), FourVector::basis(2),
                               FourVector::basis(3)});
    }

    const FourVector& operator[](std::size_t i) const { return e_[i]; }
    const FourVector& observer() const { return e_[0]; }

private:
    explicit MinkowskiFrame(std::array<FourVector, 4> e) : e_(std::move(e)) {}
    std::array<FourVector, 4> e_;
};

/// Dense row-major 4x4 linear map acting on FourVector components.
class LinearMap4 {
public:
    LinearMap4() = default;
    explicit LinearMap4(const std::array<double, 16>& rows) : m_(rows) {
        for (double v : m_) {
            if (!std::isfinite(v)) fail(ErrorKind::Numerical, "non-finite LinearMap4 entry");
        }
    }

    static LinearMap4 identity() { return diagonal(1.0, 1.0, 1.0, 1.0); }
    static LinearMap4 diagonal(double a, double b, double c, double d) {
        return LinearMap4({a, 0, 0, 0, 0, b, 0, 0, 0, 0, c, 0, 0, 0, 0, d});
    }

    double operator()(std::size_t row, std::size_t col) const { return m_[row * 4 + col]; }

    FourVector apply(const FourVector& v) const {
        std::array<double, 4> out{};
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) out[i] += (*this)(i, j) * v[j];
        }
        return {out[0], out[1], out[2], out[3]};
    }

    /// Image of the i-th canonical basis vector, L(d_i).
    FourVector column(std::size_t i) const {
        return {(*this)(0, i), (*this)(1, i), (*this)(2, i), (*this)(3, i)};
    }

    /// (this o other)(v) = this(other(v))
    LinearMap4 compose(const LinearMap4& other) const {
        std::array<double, 16> out{};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t k = 0; k < 4; ++k) out[i * 4 + j] += (*this)(i, k) * other(k, j);
        return LinearMap4(out);
    }

    double determinant() const {
        // Gaussian elimination with partial pivoting on a copy.
        std::array<double, 16> a = m_;
        double det = 1.0;
        for (std::size_t c = 0; c < 4; ++c) {
            std::size_t piv = c;
            for (std::size_t r = c + 1; r < 4; ++r)
                if (std::abs(a[r * 4 + c]) > std::abs(a[piv * 4 + c])) piv = r;
            if (a[piv * 4 + c] == 0.0) return 0.0;
            if (piv != c) {
                for (std::size_t k = 0; k < 4; ++k) std::swap(a[c * 4 + k], a[piv * 4 + k]);
                det = -det;
            }
            det *= a[c * 4 + c];
            for (std::size_t r = c + 1; r < 4; ++r) {
                const double f = a[r * 4 + c] / a[c * 4 + c];
                for (std::size_t k = c; k < 4; ++k) a[r * 4 + k] -= f * a[c * 4 + k];
            }
        }
        return det;
    }

    double max_abs_difference(const LinearMap4& o) const {
        double m = 0.0;
        for (std::size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(m_[i] - o.m_[i]));
        return m;
    }

private:
    std::array<double, 16> m_{};
};

/// Standard boost along x1 with relative speed v: dx0' = g dx0 - g v dx1, dx1' = -g v dx0 + g dx1.
inline LinearMap4 boost_1d(double v) {
    if (!(std::abs(v) < 1.0)) fail(ErrorKind::InvalidSpeed, "boost speed must satisfy |v| < 1");
    const double g = 1.0 / std::sqrt(1.0 - v * v);
    return LinearMap4({g, -g * v, 0, 0, -g * v, g, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
}

struct ExtendedLorentzVerdict {
    bool member = false;
    double determinant = 0.0;
    double time_image_norm = 0.0;  // <L(d0), L(d0)>
};

inline constexpr double kDeterminantTolerance = 1e-10;

/// Membership in the extended Lorentz group: det L = 1 and L(d0) timelike.
inline ExtendedLorentzVerdict is_extended_lorentz(const LinearMap4& L) {
    ExtendedLorentzVerdict v;
    v.determinant = L.determinant();
    const FourVector image = L.column(0);
    v.time_image_norm = lorentz_product(image, image);
    v.member = std::abs(v.determinant - 1.0) <= kDeterminantTolerance && v.time_image_norm < 0.0;
    return v;
}

/// dtau/dt = sqrt(-<L(d0), L(d0)>)
inline double proper_time_factor(const LinearMap4& L) {
    const FourVector image = L.column(0);
    const double n = lorentz_product(image, image);
    if (!(n < 0.0)) fail(ErrorKind::Causality, "L(d0) is not timelike");
    return std::sqrt(-n);
}

/// A velocity v(p) = speed * direction at one point of the rest-space.
class VelocityField {
public:
    VelocityField(double speed, std::array<double, 3> direction) : speed_(speed) {
        if (!(speed >= 0.0 && speed < 1.0)) {
            fail(ErrorKind::InvalidSpeed, "velocity field speed must lie in [0, 1)");
        }
        const double n = std::hypot(direction[0], direction[1], direction[2]);
        if (speed > 0.0) {
            if (!(n > 0.0)) fail(ErrorKind::Input, "zero direction for nonzero speed");
            for (double& d : direction) d /= n;
        } else if (n > 0.0) {
            for (double& d : direction) d /= n;
        }
        direction_ = direction;
    }

    double speed() const { return speed_; }
    const std::array<double, 3>& direction() const { return direction_; }
    FourVector direction4() const { return {0.0, direction_[0], direction_[1], direction_[2]}; }

private:
    double speed_;
    std::array<double, 3> direction_{};
};

struct VelocityLift {
    FourVector V;       // d0 + v * d_v
    FourVector N;       // (-1/<V,V>) (v d0 + d_v)
    double g00 = 0.0;   // <V,V> = -1 + v^2
    double g11 = 0.0;   // <N,N> = 1 / (1 - v^2)
    double g01 = 0.0;   // <V,N>, zero up to rounding
};

inline VelocityLift lift_velocity_field(const VelocityField& f) {
    const double v = f.speed();
    const FourVector d0 = FourVector::basis(0);
    const FourVector dv = f.direction4();
    VelocityLift out;
    out.V = d0 + v * dv;
    out.g00 = lorentz_product(out.V, out.V);
    out.N = (-1.0 / out.g00) * (v * d0 + dv);
    out.g11 = lorentz_product(out.N, out.N);
    out.g01 = lorentz_product(out.V, out.N);
    return out;
}

} // namespace lorentzkit
