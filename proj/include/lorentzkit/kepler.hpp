#pragma once

// Newtonian orbit kinematics: areal velocity, third-law ratios, orbital and
// escape speeds, and the eccentricity/adiabatic mass factor.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "lorentzkit/error.hpp"

namespace lorentzkit::kepler {

class Ellipse {
public:
    Ellipse(double a, double b) : a_(a), b_(b) {
        if (!(b > 0.0 && b <= a)) fail(ErrorKind::Domain, "ellipse needs 0 < b <= a");
    }
    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return std::sqrt(a_ * a_ - b_ * b_); }
    double eccentricity() const { return std::sqrt(1.0 - (b_ / a_) * (b_ / a_)); }

private:
    double a_;
    double b_;
};

struct PolarSample {
    double t = 0.0;
    double r = 0.0;
    double theta = 0.0;  // radians, unwrapped
};

using PlanarTrajectory = std::vector<PolarSample>;

/// r^2 dtheta/dt at the interior samples (endpoints dropped). Uses the
/// three-point derivative, second order on non-uniform time grids.
inline std::vector<double> areal_velocity(std::span<const PolarSample> traj) {
    if (traj.size() < 3) fail(ErrorKind::Input, "areal_velocity needs at least 3 samples");
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (!(traj[i].r > 0.0)) fail(ErrorKind::Input, "trajectory radius must be positive");
        if (i > 0 && !(traj[i].t > traj[i - 1].t)) {
            fail(ErrorKind::Input, "trajectory time must be strictly increasing");
        }
    }
    std::vector<double> out;
    out.reserve(traj.size() - 2);
    for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
        const double h0 = traj[i].t - traj[i - 1].t;
        const double h1 = traj[i + 1].t - traj[i].t;
        const double dtheta = -h1 / (h0 * (h0 + h1)) * traj[i - 1].theta +
                              (h1 - h0) / (h0 * h1) * traj[i].theta +
                              h0 / (h1 * (h0 + h1)) * traj[i + 1].theta;
        out.push_back(traj[i].r * traj[i].r * dtheta);
    }
    return out;
}

/// (T1^2 / R1^3) / (T2^2 / R2^3); equals 1 for orbits around the same centre.
inline double third_law_ratio(double T1, double R1, double T2, double R2) {
    if (!(T1 > 0.0 && R1 > 0.0 && T2 > 0.0 && R2 > 0.0)) {
        fail(ErrorKind::Domain, "third_law_ratio needs positive periods and radii");
    }
    return (T1 * T1 / (R1 * R1 * R1)) / (T2 * T2 / (R2 * R2 * R2));
}

struct OrbitSpeeds {
    double v_orb = 0.0;
    double v_esc = 0.0;
};

/// v_orb = sqrt(alpha / r), v_esc = sqrt(2) v_orb
inline OrbitSpeeds orbital_and_escape_speed(double alpha, double r) {
    if (!(alpha > 0.0 && r > 0.0)) fail(ErrorKind::Domain, "alpha and r must be positive");
    const double v = std::sqrt(alpha / r);
    return {v, std::numbers::sqrt2 * v};
}

/// m / m0 = cosh^{lambda-1}(artanh e) = (1 - e^2)^{-(lambda-1)/2}
inline double adiabatic_mass_ratio(double e, double lambda) {
    if (!(e >= 0.0 && e < 1.0)) fail(ErrorKind::Domain, "eccentricity must lie in [0, 1)");
    if (!(lambda > 1.0)) fail(ErrorKind::Domain, "adiabatic coefficient must exceed 1");
    return std::pow(1.0 - e * e, -(lambda - 1.0) / 2.0);
}

/// Contracted-to-original ellipsoid volume ratio b/a = sqrt(1 - e^2).
inline double adiabatic_volume_ratio(const Ellipse& el) {
    const double v0 = 4.0 * std::numbers::pi * el.a() * el.b() * el.b() / 3.0;
    const double v = 4.0 * std::numbers::pi * el.b() * el.b() * el.b() / 3.0;
    return v / v0;
}

/// Mean angular rate over the trajectory, turned into a period and a mean radius
/// (average of the extreme radii). Used for third-law comparisons of sampled orbits.
struct OrbitSummary {
    double period = 0.0;
    double mean_radius = 0.0;
};

inline OrbitSummary summarize_orbit(std::span<const PolarSample> traj) {
    if (traj.size() < 2) fail(ErrorKind::Input, "need at least 2 samples");
    const double sweep = traj.back().theta - traj.front().theta;
    if (sweep == 0.0) fail(ErrorKind::Input, "trajectory does not revolve");
    double rmin = traj.front().r;
    double rmax = traj.front().r;
    for (const auto& s : traj) {
        rmin = std::min(rmin, s.r);
        rmax = std::max(rmax, s.r);
    }
    return {2.0 * std::numbers::pi * (traj.back().t - traj.front().t) / std::abs(sweep),
            0.5 * (rmin + rmax)};
}

} // namespace lorentzkit::kepler
