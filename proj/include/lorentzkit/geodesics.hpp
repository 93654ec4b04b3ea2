#pragma once

// Geodesics of the exterior and interior models in the effective parameter eta,
// normalized by f(r) dt/deta = 1. The integrator works on the full second-order
// system x''^k = -Gamma^k_ij x'^i x'^j; the first integrals are only monitored.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "lorentzkit/error.hpp"
#include "lorentzkit/metric_models.hpp"
#include "lorentzkit/numeric.hpp"

namespace lorentzkit {

enum class Branch { Plus, Minus };

inline double sign_of(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

struct GeodesicState {
    double eta = 0.0;
    double t = 0.0;
    double r = 0.0;
    double phi = 0.0;    // polar angle
    double theta = 0.0;  // azimuth
    double dt = 0.0;
    double dr = 0.0;
    double dphi = 0.0;
    double dtheta = 0.0;
};

struct StateDerivative {
    double dt = 0.0;
    double dr = 0.0;
    double dphi = 0.0;
    double dtheta = 0.0;
    double ddt = 0.0;
    double ddr = 0.0;
    double ddphi = 0.0;
    double ddtheta = 0.0;
};

inline StateDerivative geodesic_rhs(MetricModel m, const GeodesicState& s) {
    m.require_domain(s.r);
    const ChristoffelTable g = christoffel_analytic(m, s.r, s.phi);
    const std::array<double, 4> v{s.dt, s.dr, s.dphi, s.dtheta};
    std::array<double, 4> acc{};
    for (std::size_t k = 0; k < 4; ++k) {
        double a = 0.0;
        for (const auto& key : ChristoffelTable::nonzero_keys()) {
            if (key[0] != k) continue;
            const std::size_t i = key[1];
            const std::size_t j = key[2];
            // symmetric pair counted twice off the diagonal
            a += (i == j ? 1.0 : 2.0) * g(k, i, j) * v[i] * v[j];
        }
        acc[k] = -a;
    }
    return {s.dt, s.dr, s.dphi, s.dtheta, acc[0], acc[1], acc[2], acc[3]};
}

struct Monitors {
    double ht = 0.0;  // f(r) t', 1 in the effective parameter
    double L = 0.0;   // r^2 sin^2(phi) theta'
    double E = 0.0;   // <alpha', alpha'>
};

inline Monitors monitors(MetricModel m, const GeodesicState& s) {
    const MetricComponents c = metric_components(m, s.r, s.phi);
    const double sp = std::sin(s.phi);
    return {m.lapse(s.r) * s.dt, s.r * s.r * sp * sp * s.dtheta,
            c.g[0] * s.dt * s.dt + c.g[1] * s.dr * s.dr + c.g[2] * s.dphi * s.dphi +
                c.g[3] * s.dtheta * s.dtheta};
}

struct TrajectorySample {
    GeodesicState state;
    Monitors monitor;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    double max_drift_ht = 0.0;
    double max_drift_L = 0.0;
    double max_drift_E = 0.0;
    bool left_domain = false;  // integration stopped before eta_end

    const GeodesicState& back() const { return samples.back().state; }
};

namespace detail {

inline GeodesicState advance(const GeodesicState& s, const StateDerivative& d, double h) {
    GeodesicState o = s;
    o.eta += h;
    o.t += h * d.dt;
    o.r += h * d.dr;
    o.phi += h * d.dphi;
    o.theta += h * d.dtheta;
    o.dt += h * d.ddt;
    o.dr += h * d.ddr;
    o.dphi += h * d.ddphi;
    o.dtheta += h * d.ddtheta;
    return o;
}

inline bool usable(MetricModel m, const GeodesicState& s) {
    return m.contains(s.r) && std::isfinite(s.t) && std::isfinite(s.phi) && std::isfinite(s.theta) &&
           std::isfinite(s.dt) && std::isfinite(s.dr) && std::isfinite(s.dphi) && std::isfinite(s.dtheta);
}

} // namespace detail

inline GeodesicState rk4_step(MetricModel m, const GeodesicState& s, double h) {
    const StateDerivative k1 = geodesic_rhs(m, s);
    const GeodesicState s2 = detail::advance(s, k1, h / 2.0);
    if (!detail::usable(m, s2)) fail(ErrorKind::Domain, "RK4 stage left the model domain");
    const StateDerivative k2 = geodesic_rhs(m, s2);
    const GeodesicState s3 = detail::advance(s, k2, h / 2.0);
    if (!detail::usable(m, s3)) fail(ErrorKind::Domain, "RK4 stage left the model domain");
    const StateDerivative k3 = geodesic_rhs(m, s3);
    const GeodesicState s4 = detail::advance(s, k3, h);
    if (!detail::usable(m, s4)) fail(ErrorKind::Domain, "RK4 stage left the model domain");
    const StateDerivative k4 = geodesic_rhs(m, s4);

    StateDerivative d;
    d.dt = (k1.dt + 2.0 * k2.dt + 2.0 * k3.dt + k4.dt) / 6.0;
    d.dr = (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr) / 6.0;
    d.dphi = (k1.dphi + 2.0 * k2.dphi + 2.0 * k3.dphi + k4.dphi) / 6.0;
    d.dtheta = (k1.dtheta + 2.0 * k2.dtheta + 2.0 * k3.dtheta + k4.dtheta) / 6.0;
    d.ddt = (k1.ddt + 2.0 * k2.ddt + 2.0 * k3.ddt + k4.ddt) / 6.0;
    d.ddr = (k1.ddr + 2.0 * k2.ddr + 2.0 * k3.ddr + k4.ddr) / 6.0;
    d.ddphi = (k1.ddphi + 2.0 * k2.ddphi + 2.0 * k3.ddphi + k4.ddphi) / 6.0;
    d.ddtheta = (k1.ddtheta + 2.0 * k2.ddtheta + 2.0 * k3.ddtheta + k4.ddtheta) / 6.0;
    return detail::advance(s, d, h);
}

inline constexpr double kDefaultStep = 1e-3;

/// Classical RK4 from s0.eta to eta_end. The step is shrunk so that a whole number of
/// steps lands on eta_end. Leaving the domain truncates the trajectory and sets left_domain.
inline Trajectory integrate(MetricModel m, const GeodesicState& s0, double eta_end,
                            double step = kDefaultStep) {
    if (!(step > 0.0) || !std::isfinite(step)) fail(ErrorKind::Input, "step must be positive");
    if (!(eta_end >= s0.eta)) fail(ErrorKind::Input, "eta_end must not precede the seed parameter");
    if (!detail::usable(m, s0)) fail(ErrorKind::Domain, "seed state outside the model domain");

    const double span = eta_end - s0.eta;
    const auto n = static_cast<std::size_t>(std::ceil(span / step - 1e-9));
    const double h = n == 0 ? 0.0 : span / static_cast<double>(n);

    Trajectory tr;
    tr.samples.reserve(n + 1);
    const Monitors m0 = monitors(m, s0);
    tr.samples.push_back({s0, m0});
    GeodesicState s = s0;
    for (std::size_t i = 0; i < n; ++i) {
        GeodesicState next;
        try {
            next = rk4_step(m, s, h);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Domain) throw;
            tr.left_domain = true;
            break;
        }
        if (!detail::usable(m, next)) {
            tr.left_domain = true;
            break;
        }
        next.eta = s0.eta + h * static_cast<double>(i + 1);
        s = next;
        const Monitors mi = monitors(m, s);
        tr.max_drift_ht = std::max(tr.max_drift_ht, std::abs(mi.ht - m0.ht));
        tr.max_drift_L = std::max(tr.max_drift_L, std::abs(mi.L - m0.L));
        tr.max_drift_E = std::max(tr.max_drift_E, std::abs(mi.E - m0.E));
        tr.samples.push_back({s, mi});
    }
    return tr;
}

/// eta at which r(eta) first crosses r_target, by cubic Hermite interpolation between samples.
inline double eta_at_radius(const Trajectory& tr, double r_target) {
    const auto& v = tr.samples;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const GeodesicState& a = v[i].state;
        const GeodesicState& b = v[i + 1].state;
        if ((a.r - r_target) * (b.r - r_target) > 0.0) continue;
        const double h = b.eta - a.eta;
        auto r_at = [&](double u) {
            const double u2 = u * u;
            const double u3 = u2 * u;
            return (2 * u3 - 3 * u2 + 1) * a.r + (u3 - 2 * u2 + u) * h * a.dr + (-2 * u3 + 3 * u2) * b.r +
                   (u3 - u2) * h * b.dr;
        };
        double lo = 0.0;
        double hi = 1.0;
        const bool rising = b.r > a.r;
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            if ((r_at(mid) < r_target) == rising) lo = mid;
            else hi = mid;
        }
        return a.eta + 0.5 * (lo + hi) * h;
    }
    fail(ErrorKind::Input, "trajectory never reaches r = " + std::to_string(r_target));
}

// ---- seeds -----------------------------------------------------------------------------

/// Radial seed with <alpha', alpha'> = -b2: t' = 1/f, r'^2 = 1 - b2 f, phi = pi/2.
inline GeodesicState radial_seed(MetricModel m, double r0, double b2, Branch dir, double t0 = 0.0) {
    m.require_domain(r0);
    const double f = m.lapse(r0);
    const double q = 1.0 - b2 * f;
    if (q < 0.0) fail(ErrorKind::TurningPoint, "1 - b2 f(r0) < 0, no radial motion at r0");
    GeodesicState s;
    s.t = t0;
    s.r = r0;
    s.phi = std::numbers::pi / 2.0;
    s.dt = 1.0 / f;
    s.dr = sign_of(dir) * std::sqrt(q);
    return s;
}

/// Equatorial seed with given r', L and t' = 1/f.
inline GeodesicState equatorial_seed(MetricModel m, double r0, double dr, double L) {
    m.require_domain(r0);
    GeodesicState s;
    s.r = r0;
    s.phi = std::numbers::pi / 2.0;
    s.dt = 1.0 / m.lapse(r0);
    s.dr = dr;
    s.dtheta = L / (r0 * r0);
    return s;
}

/// Rotates the initial data so that the plane spanned by position and velocity on the
/// unit sphere becomes the equator: phi = pi/2, phi' = 0, theta = 0, theta' = |n x n'| >= 0.
inline GeodesicState equatorial_reduction(const GeodesicState& s) {
    const double sp = std::sin(s.phi);
    const double cp = std::cos(s.phi);
    const double st = std::sin(s.theta);
    const double ct = std::cos(s.theta);
    const std::array<double, 3> e_phi{cp * ct, cp * st, -sp};
    const std::array<double, 3> e_theta{-st, ct, 0.0};
    std::array<double, 3> nd{};
    for (std::size_t i = 0; i < 3; ++i) nd[i] = s.dphi * e_phi[i] + sp * s.dtheta * e_theta[i];
    const double w = std::sqrt(nd[0] * nd[0] + nd[1] * nd[1] + nd[2] * nd[2]);

    GeodesicState o = s;
    o.phi = std::numbers::pi / 2.0;
    o.theta = 0.0;
    o.dphi = 0.0;
    o.dtheta = w;  // n' is orthogonal to n, so |n x n'| = |n'|
    return o;
}

// ---- closed forms ----------------------------------------------------------------------

/// t(r) = t0 +/- [(r + ln(r-1)) - (r0 + ln(r0-1))] on the exterior.
class NullRadialBranch {
public:
    NullRadialBranch(double r0, double t0, Branch b) : r0_(r0), t0_(t0), s_(sign_of(b)) {
        MetricModel::exterior().require_domain(r0);
    }
    double operator()(double r) const {
        MetricModel::exterior().require_domain(r);
        return t0_ + s_ * ((r + std::log(r - 1.0)) - (r0_ + std::log(r0_ - 1.0)));
    }
    double dt_dr(double r) const {
        MetricModel::exterior().require_domain(r);
        return s_ * r / (r - 1.0);
    }

private:
    double r0_;
    double t0_;
    double s_;
};

inline NullRadialBranch null_radial_closed_form(double r0, double t0, Branch b) { return {r0, t0, b}; }

/// Elapsed eta between two radii for r'^2 = 1 - b2 + b2/r, by quadrature of
/// sqrt(r / ((1-b2) r + b2)). Always returns a non-negative span.
inline double timelike_radial_quadrature(double b2, double r_from, double r_to) {
    if (!(r_from > 0.0 && r_to > 0.0)) fail(ErrorKind::Domain, "radii must be positive");
    auto denom = [b2](double r) { return (1.0 - b2) * r + b2; };
    // denom is linear in r: positive at both ends means positive in between
    if (!(denom(r_from) > 0.0 && denom(r_to) > 0.0)) {
        fail(ErrorKind::TurningPoint, "radial speed vanishes on the integration interval");
    }
    const double v = numeric::adaptive_simpson([&](double r) { return std::sqrt(r / denom(r)); }, r_from,
                                               r_to, 1e-13);
    return std::abs(v);
}

inline double exterior_lapse(double r) {
    MetricModel::exterior().require_domain(r);
    return (r - 1.0) / r;
}

/// Phi(r) = h^2 (1 - b2 h) / 2 with h = (r-1)/r.
inline double impedance(double r, double b2) {
    const double h = exterior_lapse(r);
    return 0.5 * h * h * (1.0 - b2 * h);
}

/// |dr/dt| = h sqrt(1 - b2 h) along a radial geodesic.
inline double radial_velocity_in_t(double r, double b2) {
    const double h = exterior_lapse(r);
    const double q = 1.0 - b2 * h;
    if (q < 0.0) fail(ErrorKind::TurningPoint, "1 - b2 h(r) < 0");
    return h * std::sqrt(q);
}

struct RadialSpeedMaximum {
    double r = 0.0;
    double impedance = 0.0;
    double speed = 0.0;
};

inline RadialSpeedMaximum radial_speed_maximum(double b2, double r_max = 100.0) {
    if (!(r_max > 1.0)) fail(ErrorKind::Domain, "r_max must exceed 1");
    auto phi = [b2](double r) { return impedance(r, b2); };
    const double lo = 1.0 + 1e-9;
    const numeric::Extremum e = numeric::grid_then_golden_maximize(phi, lo, r_max, 20000, 1e-12);
    return {e.x, e.value, radial_velocity_in_t(e.x, b2)};
}

/// dt_hat/dt = h sqrt((1 - b2 h) / (1 - h))
inline double newton_time_ratio(double r, double b2) {
    const double h = exterior_lapse(r);
    const double q = 1.0 - b2 * h;
    if (q < 0.0) fail(ErrorKind::TurningPoint, "1 - b2 h(r) < 0");
    return h * std::sqrt(q / (1.0 - h));
}

// ---- circular orbits -------------------------------------------------------------------

struct CircularOrbit {
    double r = 0.0;
    double L = 0.0;             // (r/(r-1)) sqrt(r/2)
    double v_orb = 0.0;         // sqrt(1/(2r))
    double residual = 0.0;      // r^3 - 2 L^2 (r-1)^2
    double period_t = 0.0;      // 2 pi r / v_orb
    double period_eta = 0.0;    // 2 pi r^2 / L
    double energy = 0.0;        // <alpha', alpha'> = -1/f + L^2/r^2
    GeodesicState seed;
};

inline constexpr double kCircularResidualTolerance = 1e-10;

inline CircularOrbit circular_orbit(double r) {
    MetricModel::exterior().require_domain(r);
    CircularOrbit c;
    c.r = r;
    c.L = r / (r - 1.0) * std::sqrt(r / 2.0);
    c.v_orb = std::sqrt(1.0 / (2.0 * r));
    c.residual = r * r * r - 2.0 * c.L * c.L * (r - 1.0) * (r - 1.0);
    if (std::abs(c.residual) > kCircularResidualTolerance * std::max(1.0, r * r * r)) {
        fail(ErrorKind::Numerical, "circular-orbit relation not satisfied");
    }
    c.period_t = 2.0 * std::numbers::pi * r / c.v_orb;
    c.period_eta = 2.0 * std::numbers::pi * r * r / c.L;
    c.energy = -r / (r - 1.0) + c.L * c.L / (r * r);
    c.seed = equatorial_seed(MetricModel::exterior(), r, 0.0, c.L);
    return c;
}

struct InteriorCircularVerdict {
    double r0 = 0.0;
    double gamma1_00 = 0.0;  // -(1-r)/(2 r^3)
    double gamma1_33 = 0.0;  // -(1-r) at phi = pi/2
    double dt_deta = 0.0;    // r0 / (1 - r0)
    bool impossible = false;
    std::vector<std::string> trace;
};

/// A circular equatorial geodesic needs r'' = 0 at r' = 0, i.e.
/// Gamma^1_00 t'^2 + Gamma^1_33 theta'^2 = 0. Both symbols are negative inside, so
/// t' = theta' = 0, contradicting t' = r0/(1-r0).
inline InteriorCircularVerdict interior_circular_verdict(double r0) {
    const MetricModel m = MetricModel::interior();
    m.require_domain(r0);
    const ChristoffelTable g = christoffel_analytic(m, r0, std::numbers::pi / 2.0);
    InteriorCircularVerdict v;
    v.r0 = r0;
    v.gamma1_00 = g(1, 0, 0);
    v.gamma1_33 = g(1, 3, 3);
    v.dt_deta = 1.0 / m.lapse(r0);
    const bool both_negative = v.gamma1_00 < 0.0 && v.gamma1_33 < 0.0;
    v.impossible = both_negative && v.dt_deta != 0.0;

    auto num = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return std::string(buf);
    };
    v.trace.push_back("circular equatorial motion at r0 = " + num(r0) + " requires r' = r'' = 0, phi = pi/2");
    v.trace.push_back("r'' = 0 reduces to Gamma^1_00 (t')^2 + Gamma^1_33 (theta')^2 = 0");
    v.trace.push_back("Gamma^1_00(r0) = " + num(v.gamma1_00) + ", Gamma^1_33(r0) = " + num(v.gamma1_33));
    if (both_negative) {
        v.trace.push_back("both symbols are negative, so t' = theta' = 0");
        v.trace.push_back("but dt/deta = r0/(1-r0) = " + num(v.dt_deta) + " != 0");
        v.trace.push_back("verdict: impossible");
    } else {
        v.trace.push_back("symbols are not both negative; no contradiction derived");
    }
    return v;
}

// ---- energy polynomial -----------------------------------------------------------------

/// r'^2 r^3 = P(r) for equatorial geodesics with energy E = <alpha',alpha'> and momentum L.
///   exterior: P = (1+E) r^3 - E r^2 - L^2 (r-1),  r'' =  E/(2r^2) + L^2 (2r-3)/(2r^4)
///   interior: P = (1-E) r^3 + E r^2 + L^2 (r-1),  r'' = -E/(2r^2) - L^2 (2r-3)/(2r^4)
struct EnergyPolynomial {
    double E = 0.0;
    double L = 0.0;
    Region region = Region::Exterior;
    std::array<double, 4> coeff{};  // c3, c2, c1, c0

    double P(double r) const { return ((coeff[0] * r + coeff[1]) * r + coeff[2]) * r + coeff[3]; }
    double r_prime_squared(double r) const { return P(r) / (r * r * r); }
    double r_double_prime(double r) const {
        const double s = region == Region::Exterior ? 1.0 : -1.0;
        const double r2 = r * r;
        return s * (E / (2.0 * r2) + L * L * (2.0 * r - 3.0) / (2.0 * r2 * r2));
    }
};

inline EnergyPolynomial energy_polynomial(double E, double L, Region region = Region::Exterior) {
    EnergyPolynomial p;
    p.E = E;
    p.L = L;
    p.region = region;
    const double L2 = L * L;
    if (region == Region::Exterior) p.coeff = {1.0 + E, -E, -L2, L2};
    else p.coeff = {1.0 - E, E, L2, -L2};
    return p;
}

// ---- non-extendable example ------------------------------------------------------------

struct NonExtendableVerdict {
    double a = 0.0;
    double L = 0.0;
    std::vector<double> radii;
    std::vector<double> energies;    // E solved from the r'' law at each radius
    std::vector<double> planar_L;    // x y' - x' y at each radius
    double spread = 0.0;             // max E - min E
    double planar_L_spread = 0.0;
    bool non_extendable = false;     // spread beyond tolerance
};

/// The curve (x, y) = (sqrt(2ar - a^2), r - a) with r' = (L/(ar)) sqrt(2ar - a^2) has
/// r'' = L^2 (a - r)/(a r^3). A geodesic needs one E for all r; solving the exterior r''
/// law pointwise gives E(r) = 2 L^2 (a - r)/(a r) - L^2 (2r - 3)/r^2.
inline NonExtendableVerdict nonextendable_example_check(double a, double L, std::span<const double> radii,
                                                        double tolerance = 1e-9) {
    if (!(a > 0.0)) fail(ErrorKind::Domain, "a must be positive");
    if (radii.size() < 2) fail(ErrorKind::Input, "need at least two radii");
    NonExtendableVerdict v;
    v.a = a;
    v.L = L;
    for (double r : radii) {
        const double q = 2.0 * a * r - a * a;
        if (!(q > 0.0)) fail(ErrorKind::Domain, "2ar - a^2 must be positive");
        const double rp = L / (a * r) * std::sqrt(q);
        const double rpp = L * L * (a - r) / (a * r * r * r);
        const double E = 2.0 * r * r * (rpp - L * L * (2.0 * r - 3.0) / (2.0 * r * r * r * r));
        const double x = std::sqrt(q);
        const double y = r - a;
        const double xp = a / std::sqrt(q) * rp;
        const double yp = rp;
        v.radii.push_back(r);
        v.energies.push_back(E);
        v.planar_L.push_back(x * yp - xp * y);
    }
    const auto [emin, emax] = std::minmax_element(v.energies.begin(), v.energies.end());
    v.spread = *emax - *emin;
    const auto [lmin, lmax] = std::minmax_element(v.planar_L.begin(), v.planar_L.end());
    v.planar_L_spread = *lmax - *lmin;
    v.non_extendable = v.spread > tolerance;
    return v;
}

} // namespace lorentzkit
