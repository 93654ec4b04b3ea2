#pragma once

// Sections of the future lightcone by spacelike affine hyperplanes H(a, tau):
// spheres of radius a cosh(phi) centred at a cosh(phi) tau, whose projections
// onto the rest-space of d0 are ellipses with a focus at the origin.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "lorentzkit/error.hpp"
#include "lorentzkit/minkowski.hpp"

namespace lorentzkit {

using Vec3 = std::array<double, 3>;

namespace detail {

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline FourVector spatial4(const Vec3& a) { return {0.0, a[0], a[1], a[2]}; }

} // namespace detail

/// r (1, cos(theta) sin(phi), sin(theta) sin(phi), cos(phi))
inline FourVector lightcone_point(double r, double polar, double azimuth) {
    if (!(r > 0.0)) fail(ErrorKind::Domain, "lightcone radius must be positive");
    const double s = std::sin(polar);
    return {r, r * std::cos(azimuth) * s, r * std::sin(azimuth) * s, r * std::cos(polar)};
}

/// An observer tau = cosh(phi) d0 + sinh(phi) e3 together with its adapted frame.
struct ObserverTau {
    FourVector tau;
    double phi = 0.0;  // hyperbolic angle, cosh(phi) = -<d0, tau>
    FourVector e1;     // {d0, e1, e2, e3} is a Minkowski frame with <tau,e1> = <tau,e2> = 0
    FourVector e2;
    FourVector e3;     // unit spacelike, in Span{d0, tau} and the rest-space of d0
    FourVector w;      // sinh(phi) d0 + cosh(phi) e3, unit, orthogonal to tau
};

inline ObserverTau build_observer(const FourVector& tau) {
    if (std::abs(lorentz_product(tau, tau) + 1.0) > kFrameTolerance) {
        fail(ErrorKind::Frame, "observer must be a unit timelike vector");
    }
    if (!(tau[0] > 0.0)) fail(ErrorKind::Frame, "observer must be future-directed");

    ObserverTau obs;
    obs.tau = tau;
    const double cosh_phi = -lorentz_product(FourVector::basis(0), tau);
    obs.phi = std::acosh(std::max(1.0, cosh_phi));

    const Vec3 spatial = tau.spatial();
    const double sn = detail::norm(spatial);
    Vec3 e3{0.0, 0.0, 1.0};
    if (sn > 0.0) e3 = {spatial[0] / sn, spatial[1] / sn, spatial[2] / sn};

    // e1: Gram-Schmidt from d1 (or d2 when d1 is parallel to e3), e2 = e3 x e1.
    Vec3 seed{1.0, 0.0, 0.0};
    if (std::abs(detail::dot(seed, e3)) > 0.9) seed = {0.0, 1.0, 0.0};
    const double proj = detail::dot(seed, e3);
    Vec3 e1{seed[0] - proj * e3[0], seed[1] - proj * e3[1], seed[2] - proj * e3[2]};
    const double n1 = detail::norm(e1);
    e1 = {e1[0] / n1, e1[1] / n1, e1[2] / n1};
    const Vec3 e2 = detail::cross(e3, e1);

    obs.e1 = detail::spatial4(e1);
    obs.e2 = detail::spatial4(e2);
    obs.e3 = detail::spatial4(e3);
    obs.w = std::sinh(obs.phi) * FourVector::basis(0) + std::cosh(obs.phi) * obs.e3;
    return obs;
}

/// Observer with hyperbolic angle phi along d3 (the frame used for tabulated sections).
inline ObserverTau observer_along_d3(double phi) {
    return build_observer({std::cosh(phi), 0.0, 0.0, std::sinh(phi)});
}

struct ConeSection {
    double a = 0.0;  // P = a d0
    ObserverTau observer;
    FourVector center;  // M = a cosh(phi) tau
    double radius = 0.0;  // a cosh(phi)
    double lambda1 = 0.0;  // -a e^{-phi}
    double lambda2 = 0.0;  // a e^{phi}
    // The two points where the line P + lambda w meets the cone.
    FourVector a1;  // a (1 + e^{-2 phi}) / 2 (d0 - e3)
    FourVector a2;  // a (1 + e^{2 phi}) / 2 (d0 + e3)
};

inline ConeSection section_sphere(double a, const ObserverTau& obs) {
    if (!(a > 0.0)) fail(ErrorKind::Domain, "section height a must be positive");
    const double phi = obs.phi;
    const FourVector d0 = FourVector::basis(0);
    ConeSection s;
    s.a = a;
    s.observer = obs;
    s.center = a * std::cosh(phi) * obs.tau;
    s.radius = a * std::cosh(phi);
    s.lambda1 = -a * std::exp(-phi);
    s.lambda2 = a * std::exp(phi);
    s.a1 = (a * (1.0 + std::exp(-2.0 * phi)) / 2.0) * (d0 - obs.e3);
    s.a2 = (a * (1.0 + std::exp(2.0 * phi)) / 2.0) * (d0 + obs.e3);
    return s;
}

/// X(polar, azimuth) = M + rho [cos(az) sin(pol) e1 + sin(az) sin(pol) e2 + cos(pol) w]
inline FourVector sphere_point(const ConeSection& s, double polar, double azimuth) {
    const auto& o = s.observer;
    const double sp = std::sin(polar);
    return s.center + s.radius * (std::cos(azimuth) * sp * o.e1 + std::sin(azimuth) * sp * o.e2 +
                                  std::cos(polar) * o.w);
}

/// d0-parallel projection into the rest-space of d0.
inline Vec3 project_rest(const FourVector& x) { return x.spatial(); }

/// Ellipse obtained by projecting the azimuth = 0 great circle (plane Span{e3, e1}).
struct ProjectedEllipse {
    double semi_major = 0.0;      // a cosh^2(phi), along e3
    double semi_minor = 0.0;      // a cosh(phi), along e1
    double focal_distance = 0.0;  // a cosh(phi) sinh(phi)
    double eccentricity = 0.0;    // tanh(phi)
    Vec3 center{};                // projection of M
};

inline ProjectedEllipse projected_ellipse(const ConeSection& s) {
    const double ch = std::cosh(s.observer.phi);
    const double sh = std::sinh(s.observer.phi);
    ProjectedEllipse e;
    e.semi_major = s.a * ch * ch;
    e.semi_minor = s.a * ch;
    e.focal_distance = s.a * ch * sh;
    e.eccentricity = std::tanh(s.observer.phi);
    e.center = project_rest(s.center);
    return e;
}

/// Samples the projected ellipse; polar angle runs over [0, 2 pi) so that samples
/// at index 0 and samples/2 (even counts) are the two vertices on the e3 axis.
inline std::vector<Vec3> project_to_rest_space(const ConeSection& s, std::size_t samples) {
    if (samples < 3) fail(ErrorKind::Domain, "need at least 3 samples");
    std::vector<Vec3> out;
    out.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples);
        const auto& o = s.observer;
        const FourVector x =
            s.center + s.radius * (std::sin(ang) * o.e1 + std::cos(ang) * o.w);
        out.push_back(project_rest(x));
    }
    return out;
}

struct MinimalObserver {
    FourVector tau;
    FourVector nu;
    double max_orthogonality_residual = 0.0;  // max |<tau,v_i>|, |<nu,v_i>|, |<tau,nu>|, |<nu,d0>|
    bool minimal_over_samples = false;        // t(phi)^0 >= tau^0 for the sampled angles
};

/// tau = (d0 + v1^0 v1 + v2^0 v2) / sqrt(1 + (v1^0)^2 + (v2^0)^2), nu spatial in V^perp,
/// oriented so that det[tau, v1, v2, nu] = -1.
inline MinimalObserver minimal_observer(const FourVector& v1, const FourVector& v2) {
    constexpr double tol = kFrameTolerance;
    if (std::abs(lorentz_product(v1, v1) - 1.0) > tol || std::abs(lorentz_product(v2, v2) - 1.0) > tol ||
        std::abs(lorentz_product(v1, v2)) > tol) {
        fail(ErrorKind::Frame, "minimal_observer needs an orthonormal spacelike pair");
    }
    const FourVector d0 = FourVector::basis(0);
    const double v10 = -lorentz_product(v1, d0);
    const double v20 = -lorentz_product(v2, d0);
    MinimalObserver m;
    m.tau = (1.0 / std::sqrt(1.0 + v10 * v10 + v20 * v20)) * (d0 + v10 * v1 + v20 * v2);

    Vec3 n = detail::cross(v1.spatial(), v2.spatial());
    const double nn = detail::norm(n);
    if (!(nn > 0.0)) fail(ErrorKind::Frame, "spatial parts of v1, v2 are parallel");
    n = {n[0] / nn, n[1] / nn, n[2] / nn};
    m.nu = detail::spatial4(n);

    const LinearMap4 cols({m.tau[0], v1[0], v2[0], m.nu[0], m.tau[1], v1[1], v2[1], m.nu[1],
                           m.tau[2], v1[2], v2[2], m.nu[2], m.tau[3], v1[3], v2[3], m.nu[3]});
    if (cols.determinant() > 0.0) m.nu = -1.0 * m.nu;

    for (double r : {lorentz_product(m.tau, v1), lorentz_product(m.tau, v2), lorentz_product(m.nu, v1),
                     lorentz_product(m.nu, v2), lorentz_product(m.tau, m.nu), lorentz_product(m.nu, d0),
                     lorentz_product(m.tau, m.tau) + 1.0, lorentz_product(m.nu, m.nu) - 1.0}) {
        m.max_orthogonality_residual = std::max(m.max_orthogonality_residual, std::abs(r));
    }

    m.minimal_over_samples = true;
    for (double phi : {-0.5, -0.1, 0.1, 0.5, 1.0}) {
        const FourVector t = std::cosh(phi) * m.tau + std::sinh(phi) * m.nu;
        if (t[0] < m.tau[0]) m.minimal_over_samples = false;
    }
    return m;
}

} // namespace lorentzkit
