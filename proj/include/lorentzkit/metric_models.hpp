#pragma once

// The two diagonal Lorentzian models on coordinates (x0, x1, x2, x3) = (t, r, phi, theta),
// in units where the Schwarzschild radius is 1:
//
//   Exterior (r > 1):     ds^2 = -(r-1)/r dt^2 + r/(r-1) dr^2 + r^2 dphi^2 + r^2 sin^2(phi) dtheta^2
//   Interior (0 < r < 1): ds^2 =  (r-1)/r dt^2 + r/(1-r) dr^2 + r^2 dphi^2 + r^2 sin^2(phi) dtheta^2
//
// Both have the form -f dt^2 + dr^2/f + r^2 dOmega^2 with the lapse
// f = (r-1)/r outside and f = (1-r)/r inside, so the signature is (-,+,+,+) on both.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "lorentzkit/error.hpp"

namespace lorentzkit {

enum class Region { Exterior, Interior };

inline std::string_view to_string(Region r) {
    return r == Region::Exterior ? "exterior" : "interior";
}

inline Region parse_region(std::string_view s) {
    if (s == "exterior") return Region::Exterior;
    if (s == "interior") return Region::Interior;
    fail(ErrorKind::Input, "unknown model '" + std::string(s) + "' (expected exterior|interior)");
}

class MetricModel {
public:
    constexpr explicit MetricModel(Region region) : region_(region) {}
    static constexpr MetricModel exterior() { return MetricModel(Region::Exterior); }
    static constexpr MetricModel interior() { return MetricModel(Region::Interior); }

    constexpr Region region() const { return region_; }
    std::string_view name() const { return to_string(region_); }

    bool contains(double r) const {
        return region_ == Region::Exterior ? (r > 1.0 && std::isfinite(r)) : (r > 0.0 && r < 1.0);
    }

    void require_domain(double r) const {
        if (!contains(r)) {
            fail(ErrorKind::Domain, "r = " + std::to_string(r) + " outside the " +
                                        std::string(name()) + " domain");
        }
    }

    /// f(r) = -g00 = 1/g11
    double lapse(double r) const { return region_ == Region::Exterior ? (r - 1.0) / r : (1.0 - r) / r; }
    double lapse_dr(double r) const { return (region_ == Region::Exterior ? 1.0 : -1.0) / (r * r); }
    double lapse_drr(double r) const {
        return (region_ == Region::Exterior ? -2.0 : 2.0) / (r * r * r);
    }

    friend constexpr bool operator==(MetricModel, MetricModel) = default;

private:
    Region region_;
};

struct MetricComponents {
    std::array<double, 4> g{};  // g00, g11, g22, g33
    bool degenerate = false;    // sin(phi) == 0, g33 vanishes
};

inline MetricComponents metric_components(MetricModel m, double r, double phi) {
    m.require_domain(r);
    const double f = m.lapse(r);
    const double s = std::sin(phi);
    MetricComponents c;
    c.g = {-f, 1.0 / f, r * r, r * r * s * s};
    c.degenerate = (s == 0.0);
    return c;
}

/// Christoffel symbols Gamma^k_ij at one point, symmetric in (i, j).
class ChristoffelTable {
public:
    double operator()(std::size_t k, std::size_t i, std::size_t j) const { return v_[index(k, i, j)]; }

    void set(std::size_t k, std::size_t i, std::size_t j, double value) {
        v_[index(k, i, j)] = value;
        v_[index(k, j, i)] = value;
    }

    double max_abs_difference(const ChristoffelTable& o) const {
        double m = 0.0;
        for (std::size_t n = 0; n < v_.size(); ++n) m = std::max(m, std::abs(v_[n] - o.v_[n]));
        return m;
    }

    /// max over entries of |a - b| / max(1, |a|)
    double max_mixed_difference(const ChristoffelTable& o) const {
        double m = 0.0;
        for (std::size_t n = 0; n < v_.size(); ++n) {
            m = std::max(m, std::abs(v_[n] - o.v_[n]) / std::max(1.0, std::abs(v_[n])));
        }
        return m;
    }

    /// The symbols that can be nonzero for a static spherically symmetric diagonal metric.
    static constexpr std::array<std::array<std::size_t, 3>, 9> nonzero_keys() {
        return {{{0, 0, 1}, {1, 0, 0}, {1, 1, 1}, {1, 2, 2}, {1, 3, 3}, {2, 1, 2}, {2, 3, 3}, {3, 1, 3}, {3, 2, 3}}};
    }

private:
    static constexpr std::size_t index(std::size_t k, std::size_t i, std::size_t j) {
        return (k * 4 + i) * 4 + j;
    }
    std::array<double, 64> v_{};
};

inline ChristoffelTable christoffel_analytic(MetricModel m, double r, double phi) {
    m.require_domain(r);
    const double f = m.lapse(r);
    const double fr = m.lapse_dr(r);
    const double s = std::sin(phi);
    const double c = std::cos(phi);

    ChristoffelTable t;
    t.set(0, 0, 1, fr / (2.0 * f));   // exterior: 1/(2r(r-1))
    t.set(1, 0, 0, f * fr / 2.0);     // exterior: (r-1)/(2r^3), interior: -(1-r)/(2r^3)
    t.set(1, 1, 1, -fr / (2.0 * f));  // exterior: -1/(2r(r-1))
    t.set(1, 2, 2, -r * f);           // exterior: -(r-1), interior: -(1-r)
    t.set(1, 3, 3, -r * f * s * s);
    t.set(2, 1, 2, 1.0 / r);
    t.set(2, 3, 3, -s * c);
    t.set(3, 1, 3, 1.0 / r);
    t.set(3, 2, 3, c / s);
    return t;
}

using Coordinates = std::array<double, 4>;

/// Gamma^k_ij = 1/2 sum_m g^km (d_j g_im + d_i g_jm - d_m g_ij) for a diagonal metric
/// x -> (g00, g11, g22, g33), with central differences of step `step` in every coordinate.
template <class DiagonalMetric>
ChristoffelTable christoffel_from_diagonal_metric(DiagonalMetric&& metric, const Coordinates& x,
                                                  double step) {
    std::array<std::array<double, 4>, 4> dg{};  // dg[m][i] = d g_ii / d x^m
    for (std::size_t m = 0; m < 4; ++m) {
        Coordinates xp = x;
        Coordinates xm = x;
        xp[m] += step;
        xm[m] -= step;
        const std::array<double, 4> gp = metric(xp);
        const std::array<double, 4> gm = metric(xm);
        for (std::size_t i = 0; i < 4; ++i) dg[m][i] = (gp[i] - gm[i]) / (2.0 * step);
    }
    const std::array<double, 4> g = metric(x);
    auto dgij = [&](std::size_t m, std::size_t i, std::size_t j) { return i == j ? dg[m][i] : 0.0; };

    ChristoffelTable t;
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i; j < 4; ++j) {
                // diagonal inverse: only m = k contributes
                const double val = 0.5 / g[k] * (dgij(j, i, k) + dgij(i, j, k) - dgij(k, i, j));
                t.set(k, i, j, val);
            }
        }
    }
    return t;
}

inline double default_fd_step(double r) { return 1e-5 * std::max(1.0, std::abs(r)); }

/// Finite-difference Christoffel table built only from metric_components.
inline ChristoffelTable christoffel_fd_oracle(MetricModel m, double r, double phi, double h_step) {
    if (!(h_step > 0.0)) fail(ErrorKind::Numerical, "finite-difference step must be positive");
    if (!m.contains(r - h_step) || !m.contains(r + h_step)) {
        fail(ErrorKind::Domain, "finite-difference stencil leaves the model domain");
    }
    auto metric = [m](const Coordinates& x) { return metric_components(m, x[1], x[2]).g; };
    return christoffel_from_diagonal_metric(metric, Coordinates{0.0, r, phi, 0.0}, h_step);
}

inline ChristoffelTable christoffel_fd_oracle(MetricModel m, double r, double phi) {
    return christoffel_fd_oracle(m, r, phi, default_fd_step(r));
}

} // namespace lorentzkit
