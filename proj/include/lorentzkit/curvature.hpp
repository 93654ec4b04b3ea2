#pragma once

// Curvature of the warped products P x_r S^2, where P is the (t, r) strip with
// ds^2 = E(r) dt^2 + G(r) dr^2. The Ricci tensor is assembled blockwise from the
// strip's Gauss curvature, the Hessian and Laplacian of r, and the unit sphere.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "lorentzkit/error.hpp"
#include "lorentzkit/metric_models.hpp"
#include "lorentzkit/numeric.hpp"

namespace lorentzkit {

/// Base-strip metric E dt^2 + G dr^2 with analytic r-derivatives on (r_min, r_max).
struct SurfaceMetric2D {
    std::function<double(double)> E;
    std::function<double(double)> G;
    std::function<double(double)> E_r;
    std::function<double(double)> G_r;
    std::function<double(double)> E_rr;
    double r_min = 0.0;
    double r_max = 0.0;

    void require_domain(double r) const {
        if (!(r > r_min && r < r_max)) {
            fail(ErrorKind::Domain, "r = " + std::to_string(r) + " outside the strip domain");
        }
    }
};

/// Strip of a model: E = -f, G = 1/f with the model's lapse f, so E G = -1.
inline SurfaceMetric2D strip_metric(MetricModel m) {
    SurfaceMetric2D s;
    s.E = [m](double r) { return -m.lapse(r); };
    s.G = [m](double r) { return 1.0 / m.lapse(r); };
    s.E_r = [m](double r) { return -m.lapse_dr(r); };
    s.G_r = [m](double r) {
        const double f = m.lapse(r);
        return -m.lapse_dr(r) / (f * f);
    };
    s.E_rr = [m](double r) { return -m.lapse_drr(r); };
    if (m.region() == Region::Exterior) {
        s.r_min = 1.0;
        s.r_max = std::numeric_limits<double>::infinity();
    } else {
        s.r_min = 0.0;
        s.r_max = 1.0;
    }
    return s;
}

struct HessianLaplacian {
    double h_tt = 0.0;       // H^r(d_t, d_t) = E_r / (2G)
    double h_rr = 0.0;       // H^r(d_r, d_r) = -G_r / (2G)
    double laplacian = 0.0;  // (1/2G)(E_r/E - G_r/G)
};

inline HessianLaplacian hessian_laplacian(const SurfaceMetric2D& sm, double r) {
    sm.require_domain(r);
    const double E = sm.E(r);
    const double G = sm.G(r);
    const double Er = sm.E_r(r);
    const double Gr = sm.G_r(r);
    return {Er / (2.0 * G), -Gr / (2.0 * G), (Er / E - Gr / G) / (2.0 * G)};
}

/// Gauss curvature of the strip from the orthogonal-coordinate formula
/// K = -(eps_G / (e g)) d/dr (e_r / g), e = sqrt|E|, g = sqrt|G|.
inline double gauss_curvature_base(const SurfaceMetric2D& sm, double r) {
    sm.require_domain(r);
    const double E = sm.E(r);
    const double G = sm.G(r);
    const double sE = E < 0.0 ? -1.0 : 1.0;
    const double sG = G < 0.0 ? -1.0 : 1.0;
    const double e = std::sqrt(std::abs(E));
    const double g = std::sqrt(std::abs(G));
    const double absE_r = sE * sm.E_r(r);
    const double absE_rr = sE * sm.E_rr(r);
    const double e_r = absE_r / (2.0 * e);
    const double e_rr = absE_rr / (2.0 * e) - absE_r * absE_r / (4.0 * e * e * e);
    const double g_r = sG * sm.G_r(r) / (2.0 * g);
    const double d_er_over_g = e_rr / g - e_r * g_r / (g * g);
    return -sG / (e * g) * d_er_over_g;
}

/// Independent route: finite-difference Christoffel symbols of the strip from E and G
/// alone, then K = R^r_{trt} / E with
/// R^r_{trt} = d_r Gamma^r_tt + Gamma^r_rr Gamma^r_tt - Gamma^r_tt Gamma^t_tr.
/// Five-point stencils; the step is rel_step times the distance to the nearest of 0 and
/// the strip boundary, since the coefficients blow up like 1/r and 1/|r-1|.
inline double gauss_curvature_fd_oracle(const SurfaceMetric2D& sm, double r, double rel_step = 1e-3) {
    sm.require_domain(r);
    const double reach = std::min({r, r - sm.r_min, sm.r_max - r});
    const double h = rel_step * reach;
    if (!(h > 0.0) || !std::isfinite(h)) fail(ErrorKind::Numerical, "finite-difference step under/overflow");
    if (!(r - 4.0 * h > sm.r_min && r + 4.0 * h < sm.r_max)) {
        fail(ErrorKind::Domain, "finite-difference stencil leaves the strip domain");
    }
    auto dE = [&](double x) { return numeric::five_point_difference(sm.E, x, h); };
    auto dG = [&](double x) { return numeric::five_point_difference(sm.G, x, h); };
    auto gamma_r_tt = [&](double x) { return -dE(x) / (2.0 * sm.G(x)); };
    const double g_r_tt = gamma_r_tt(r);
    const double g_r_rr = dG(r) / (2.0 * sm.G(r));
    const double g_t_tr = dE(r) / (2.0 * sm.E(r));
    const double d_g_r_tt = numeric::five_point_difference(gamma_r_tt, r, h);
    const double riem = d_g_r_tt + g_r_rr * g_r_tt - g_r_tt * g_t_tr;
    return riem / sm.E(r);
}

struct CurvatureReport {
    double r = 0.0;
    double K_base = 0.0;
    double hessian_tt = 0.0;
    double hessian_rr = 0.0;
    double laplacian_r = 0.0;
    double r_star = 0.0;
    double ric_tt = 0.0;                     // Ric(d_t, d_t)
    double ric_rr = 0.0;                     // Ric(d_r, d_r)
    double ric_horizontal = 0.0;             // c with Ric(X,Y) = c <X,Y> on the strip
    double ric_vertical_coeff = 0.0;         // c with Ric(V,W) = c <V,W> on the sphere
    double scalar = 0.0;
    double einstein_horizontal_coeff = 0.0;  // G(X,Y) = c <X,Y>
    double einstein_vertical_coeff = 0.0;    // G(V,W) = c <V,W>
};

/// Warped-product Ricci (dimension 2 base and fiber):
///   Ric(X,Y) = K <X,Y> - (2/r) H^r(X,Y)
///   Ric(V,W) = (1/r^2) <V,W> - r* <V,W>,  r* = Delta r / r + <grad r, grad r> / r^2
/// and the Einstein tensor G = Ric - S g / 2.
inline CurvatureReport ricci_warped(MetricModel m, double r) {
    m.require_domain(r);
    const SurfaceMetric2D sm = strip_metric(m);
    const HessianLaplacian hl = hessian_laplacian(sm, r);
    const double E = sm.E(r);
    const double G = sm.G(r);

    CurvatureReport c;
    c.r = r;
    c.K_base = gauss_curvature_base(sm, r);
    c.hessian_tt = hl.h_tt;
    c.hessian_rr = hl.h_rr;
    c.laplacian_r = hl.laplacian;
    c.r_star = hl.laplacian / r + (1.0 / G) / (r * r);
    c.ric_tt = c.K_base * E - 2.0 / r * hl.h_tt;
    c.ric_rr = c.K_base * G - 2.0 / r * hl.h_rr;
    c.ric_horizontal = c.ric_tt / E;
    c.ric_vertical_coeff = 1.0 / (r * r) - c.r_star;
    // frame contraction: eps_t Ric(e_t,e_t) + eps_r Ric(e_r,e_r) + 2 * vertical
    c.scalar = c.ric_tt / E + c.ric_rr / G + 2.0 * c.ric_vertical_coeff;
    c.einstein_horizontal_coeff = c.ric_horizontal - 0.5 * c.scalar;
    c.einstein_vertical_coeff = c.ric_vertical_coeff - 0.5 * c.scalar;
    return c;
}

/// Closed forms on the interior: K = -1/r^3, r* = -1/r^2, Ric_V = 2/r^2, S = 4/r^2,
/// G_H = -2/r^2, G_V = 0, Ric_H = 0.
inline CurvatureReport interior_curvature_closed_form(double r) {
    MetricModel::interior().require_domain(r);
    CurvatureReport c;
    const double r2 = r * r;
    c.r = r;
    c.K_base = -1.0 / (r2 * r);
    c.hessian_tt = (1.0 - r) / (2.0 * r2 * r);
    c.hessian_rr = -1.0 / (2.0 * r * (1.0 - r));
    c.laplacian_r = -1.0 / r2;
    c.r_star = -1.0 / r2;
    c.ric_tt = 0.0;
    c.ric_rr = 0.0;
    c.ric_horizontal = 0.0;
    c.ric_vertical_coeff = 2.0 / r2;
    c.scalar = 4.0 / r2;
    c.einstein_horizontal_coeff = -2.0 / r2;
    c.einstein_vertical_coeff = 0.0;
    return c;
}

struct DensityPressure {
    double density = 0.0;      // G(U0, U0)
    double pressure = 0.0;     // G(U1, U1)
    double contraction = 0.0;  // G^0_0 + G^1_1
};

/// Interior density and pressure read off the warped-product Einstein tensor in an
/// orthonormal strip frame U0 (timelike), U1 (radial).
inline DensityPressure einstein_density_pressure(double r) {
    MetricModel::interior().require_domain(r);
    const double gh = ricci_warped(MetricModel::interior(), r).einstein_horizontal_coeff;
    return {-gh, gh, 2.0 * gh};
}

using StripPoint = std::array<double, 4>;

/// Ambient product <a,b> of the semi-Euclidean space with signature (-1,-1,+1,+1).
inline double semi_euclidean_product(const StripPoint& a, const StripPoint& b) {
    return -a[0] * b[0] - a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

/// f(t,r) = 2 sqrt(k(r)) (cos t/2, sin t/2, cos psi/2, sin psi/2) with
///   exterior: k = (r-1)/r, psi = r + ln(r-1)
///   interior: k = (1-r)/r, psi = 1 - r - ln(1-r)
inline StripPoint strip_immersion(MetricModel m, double t, double r) {
    m.require_domain(r);
    const double k = m.lapse(r);
    const double psi = m.region() == Region::Exterior ? r + std::log(r - 1.0) : 1.0 - r - std::log(1.0 - r);
    const double s = 2.0 * std::sqrt(k);
    return {s * std::cos(t / 2.0), s * std::sin(t / 2.0), s * std::cos(psi / 2.0), s * std::sin(psi / 2.0)};
}

struct PullbackCheck {
    double max_abs_residual = 0.0;  // over the 2x2 (t, r) block
    std::array<double, 3> induced{};  // g_tt, g_tr, g_rr from finite differences
    std::array<double, 3> target{};   // strip metric E, 0, G
    double boundary_norm = 0.0;     // Euclidean norm of f at r = 1 +/- 1e-8 (limit -> 0)
};

/// Finite-difference pullback of the ambient product through strip_immersion compared
/// with the strip metric (E, G) = (-f, 1/f); rel_step is the relative central-difference step.
inline PullbackCheck immersion_pullback_check(MetricModel m, double r, double t, double rel_step = 1e-6) {
    m.require_domain(r);
    const double ht = rel_step * std::max(1.0, std::abs(t));
    const double hr = rel_step * r;
    if (!(ht > 0.0 && hr > 0.0) || !std::isfinite(ht) || !std::isfinite(hr)) {
        fail(ErrorKind::Numerical, "pullback step under/overflow");
    }
    if (!m.contains(r - hr) || !m.contains(r + hr)) {
        fail(ErrorKind::Domain, "pullback stencil leaves the model domain");
    }
    auto diff = [](const StripPoint& a, const StripPoint& b, double h) {
        StripPoint d{};
        for (std::size_t i = 0; i < 4; ++i) d[i] = (a[i] - b[i]) / (2.0 * h);
        return d;
    };
    const StripPoint ft = diff(strip_immersion(m, t + ht, r), strip_immersion(m, t - ht, r), ht);
    const StripPoint fr = diff(strip_immersion(m, t, r + hr), strip_immersion(m, t, r - hr), hr);

    PullbackCheck out;
    out.induced = {semi_euclidean_product(ft, ft), semi_euclidean_product(ft, fr), semi_euclidean_product(fr, fr)};
    const double f = m.lapse(r);
    out.target = {-f, 0.0, 1.0 / f};
    for (std::size_t i = 0; i < 3; ++i) {
        out.max_abs_residual = std::max(out.max_abs_residual, std::abs(out.induced[i] - out.target[i]));
    }
    const double r_edge = m.region() == Region::Exterior ? 1.0 + 1e-8 : 1.0 - 1e-8;
    const StripPoint edge = strip_immersion(m, t, r_edge);
    out.boundary_norm = std::hypot(std::hypot(edge[0], edge[1]), std::hypot(edge[2], edge[3]));
    return out;
}

} // namespace lorentzkit
