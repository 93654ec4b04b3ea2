#pragma once

// Named validation suites, one per acceptance criterion. Each suite measures a
// handful of deviations and compares them against a tolerance table that the
// caller may override by key.

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "lorentzkit/bohr_atom.hpp"
#include "lorentzkit/curvature.hpp"
#include "lorentzkit/error.hpp"
#include "lorentzkit/geodesics.hpp"
#include "lorentzkit/kepler.hpp"
#include "lorentzkit/metric_models.hpp"

namespace lorentzkit::validation {

enum class Compare { AtMost, Above };

struct Check {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    Compare compare = Compare::AtMost;
    bool passed = false;
};

struct SuiteReport {
    std::string name;
    int criterion = 0;
    std::string description;
    std::vector<Check> checks;
    std::string error;  // set when the suite threw
    double seconds = 0.0;

    bool passed() const {
        if (!error.empty() || checks.empty()) return false;
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

class Tolerances {
public:
    static Tolerances defaults() {
        Tolerances t;
        t.v_ = {
            {"null_radial.max_dt", 1e-8},
            {"null_radial.runtime_s", 1.0},
            {"conservation.max_drift", 1e-8},
            {"circular.L", 5e-10},
            {"circular.v_orb", 5e-8},
            {"circular.residual", 1e-10},
            {"circular.r_drift", 1e-9},
            {"radial_max.r", 1e-6},
            {"radial_max.phi", 1e-12},
            {"newton_time.quadrature", 1e-9},
            {"newton_time.ratio", 1e-14},
            {"interior_curvature.closed_form_rel", 1e-12},
            {"interior_curvature.fd_oracle", 1e-6},
            {"ricci_flat.max_abs", 1e-10},
            {"immersion.pullback", 1e-7},
            {"immersion.boundary_norm", 1e-3},
            {"bohr.beta_hat", 2e-6},
            {"bohr.ionization_rel", 5e-3},
            {"bohr.closed_forms_rel", 1e-12},
            {"bohr.a0_rel", 2e-3},
            {"bohr.mass_abs", 1e-9},
            {"bohr.neutron_ratio", 1e-5},
            {"kepler.third_law_rel", 1e-12},
            {"nonextendable.min_spread", 0.01},
            {"nonextendable.planar_L", 1e-10},
            {"christoffel.mixed", 1e-6},
        };
        return t;
    }

    double get(const std::string& key) const {
        const auto it = v_.find(key);
        if (it == v_.end()) fail(ErrorKind::Input, "unknown tolerance key '" + key + "'");
        return it->second;
    }

    void set(const std::string& key, double value) {
        if (v_.find(key) == v_.end()) fail(ErrorKind::Input, "unknown tolerance key '" + key + "'");
        if (!(value > 0.0) || !std::isfinite(value)) fail(ErrorKind::Input, "tolerance '" + key + "' must be positive");
        v_[key] = value;
    }

    const std::map<std::string, double>& values() const { return v_; }

private:
    std::map<std::string, double> v_;
};

namespace detail {

inline void add(SuiteReport& s, const Tolerances& tol, const std::string& key, double measured,
                Compare cmp = Compare::AtMost) {
    const double t = tol.get(key);
    const bool ok = cmp == Compare::AtMost ? (measured <= t) : (measured > t);
    s.checks.push_back({key, measured, t, cmp, ok && std::isfinite(measured)});
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

} // namespace detail

struct Context {
    Tolerances tol = Tolerances::defaults();
    bohr::PhysicalConstants constants = bohr::PhysicalConstants::codata2018();
};

inline SuiteReport null_radial_oracle(const Context& ctx) {
    SuiteReport s{"null_radial_oracle", 1, "integrated null radial geodesic r 2 -> 5 against t(r)", {}, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    const MetricModel m = MetricModel::exterior();
    const Trajectory tr = integrate(m, radial_seed(m, 2.0, 0.0, Branch::Plus), 3.0, 1e-3);
    const auto branch = null_radial_closed_form(2.0, 0.0, Branch::Plus);
    double worst = tr.left_domain ? detail::kInf : 0.0;
    for (const auto& x : tr.samples) worst = std::max(worst, std::abs(x.state.t - branch(x.state.r)));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    detail::add(s, ctx.tol, "null_radial.max_dt", worst);
    detail::add(s, ctx.tol, "null_radial.runtime_s", secs);
    return s;
}

inline std::vector<GeodesicState> conservation_seeds() {
    const MetricModel m = MetricModel::exterior();
    GeodesicState g;
    g.r = 10.0;
    g.phi = 1.0;
    g.theta = 0.3;
    g.dt = 1.0 / m.lapse(10.0);
    g.dr = -0.1;
    g.dphi = 0.02;
    g.dtheta = 0.03;
    return {g, circular_orbit(6.0).seed, radial_seed(m, 5.0, 1.0, Branch::Plus), equatorial_seed(m, 20.0, -0.3, 4.0),
            radial_seed(m, 3.0, 0.0, Branch::Plus)};
}

inline SuiteReport conservation_drift(const Context& ctx) {
    SuiteReport s{"conservation_drift", 2, "h t', L and E(alpha) drift over eta span 10 at step 1e-3", {}, {}, 0};
    double worst = 0.0;
    for (const auto& seed : conservation_seeds()) {
        const Trajectory tr = integrate(MetricModel::exterior(), seed, 10.0, 1e-3);
        if (tr.left_domain) worst = detail::kInf;
        worst = std::max({worst, tr.max_drift_ht, tr.max_drift_L, tr.max_drift_E});
    }
    detail::add(s, ctx.tol, "conservation.max_drift", worst);
    return s;
}

inline SuiteReport circular_orbit_suite(const Context& ctx) {
    SuiteReport s{"circular_orbit", 3, "circular geodesic at r = 3", {}, {}, 0};
    const CircularOrbit c = circular_orbit(3.0);
    detail::add(s, ctx.tol, "circular.L", std::abs(c.L - 1.837117307));
    detail::add(s, ctx.tol, "circular.v_orb", std::abs(c.v_orb - 0.4082483));
    detail::add(s, ctx.tol, "circular.residual", std::abs(c.residual));
    const Trajectory tr = integrate(MetricModel::exterior(), c.seed, c.period_eta, 1e-3);
    double drift = tr.left_domain ? detail::kInf : 0.0;
    for (const auto& x : tr.samples) drift = std::max(drift, std::abs(x.state.r - 3.0));
    detail::add(s, ctx.tol, "circular.r_drift", drift);
    return s;
}

inline SuiteReport radial_speed_maximum_suite(const Context& ctx) {
    SuiteReport s{"radial_speed_maximum", 4, "argmax of the impedance on (1, 100]", {}, {}, 0};
    const RadialSpeedMaximum m = radial_speed_maximum(1.0, 100.0);
    detail::add(s, ctx.tol, "radial_max.r", std::abs(m.r - 3.0));
    detail::add(s, ctx.tol, "radial_max.phi", std::abs(m.impedance - 2.0 / 27.0));
    return s;
}

inline SuiteReport newton_time_suite(const Context& ctx) {
    SuiteReport s{"newton_time", 5, "radial quadrature and dt_hat/dt = h for b2 = 1", {}, {}, 0};
    detail::add(s, ctx.tol, "newton_time.quadrature", std::abs(timelike_radial_quadrature(1.0, 1.0, 4.0) - 14.0 / 3.0));
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> u(1.001, 200.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double r = u(rng);
        worst = std::max(worst, std::abs(newton_time_ratio(r, 1.0) - (r - 1.0) / r));
    }
    detail::add(s, ctx.tol, "newton_time.ratio", worst);
    return s;
}

inline SuiteReport interior_curvature_suite(const Context& ctx) {
    SuiteReport s{"interior_curvature", 6, "interior K, r*, Ric, S and Einstein against closed forms", {}, {}, 0};
    double worst = 0.0;
    double fd = 0.0;
    const auto sm = strip_metric(MetricModel::interior());
    for (double r : {0.1, 0.25, 0.5, 0.9}) {
        const CurvatureReport w = ricci_warped(MetricModel::interior(), r);
        const CurvatureReport a = interior_curvature_closed_form(r);
        const double scale = 1.0 / (r * r);
        worst = std::max({worst, detail::rel(w.K_base, a.K_base), detail::rel(w.r_star, a.r_star),
                          detail::rel(w.ric_vertical_coeff, a.ric_vertical_coeff), detail::rel(w.scalar, a.scalar),
                          detail::rel(w.einstein_horizontal_coeff, a.einstein_horizontal_coeff),
                          std::abs(w.einstein_vertical_coeff) / scale, std::abs(w.ric_horizontal) / scale});
        const double k = gauss_curvature_base(sm, r);
        fd = std::max(fd, std::abs(gauss_curvature_fd_oracle(sm, r) - k) / std::max(1.0, std::abs(k)));
    }
    detail::add(s, ctx.tol, "interior_curvature.closed_form_rel", worst);
    detail::add(s, ctx.tol, "interior_curvature.fd_oracle", fd);
    return s;
}

inline SuiteReport exterior_ricci_flat(const Context& ctx) {
    SuiteReport s{"exterior_ricci_flat", 7, "warped-product Ricci entries vanish on the exterior", {}, {}, 0};
    double worst = 0.0;
    for (double r : {1.1, 1.5, 2.0, 3.0, 10.0, 100.0}) {
        const CurvatureReport c = ricci_warped(MetricModel::exterior(), r);
        worst = std::max({worst, std::abs(c.ric_tt), std::abs(c.ric_rr), std::abs(c.ric_vertical_coeff),
                          std::abs(c.scalar)});
    }
    detail::add(s, ctx.tol, "ricci_flat.max_abs", worst);
    return s;
}

inline SuiteReport immersion_pullbacks(const Context& ctx) {
    SuiteReport s{"immersion_pullbacks", 8, "finite-difference pullbacks of the strip immersions", {}, {}, 0};
    const double pe = immersion_pullback_check(MetricModel::exterior(), 2.0, 0.0).max_abs_residual;
    const double pi = immersion_pullback_check(MetricModel::interior(), 0.5, 0.0).max_abs_residual;
    detail::add(s, ctx.tol, "immersion.pullback", std::max(pe, pi));
    double edge = 0.0;
    for (double t : {0.0, 1.0, 10.0}) {
        const auto p = strip_immersion(MetricModel::exterior(), t, 1.0 + 1e-8);
        edge = std::max(edge, std::hypot(std::hypot(p[0], p[1]), std::hypot(p[2], p[3])));
    }
    detail::add(s, ctx.tol, "immersion.boundary_norm", edge);
    return s;
}

inline SuiteReport interior_impossibility(const Context&) {
    SuiteReport s{"interior_impossibility", 9, "no circular geodesics at 99 interior radii", {}, {}, 0};
    double bad = 0.0;
    for (int i = 1; i <= 99; ++i) {
        const auto v = interior_circular_verdict(0.01 * i);
        if (!(v.impossible && v.gamma1_00 < 0.0 && v.gamma1_33 < 0.0)) bad += 1.0;
    }
    s.checks.push_back({"interior.possible_points", bad, 0.0, Compare::AtMost, bad == 0.0});
    return s;
}

inline SuiteReport bohr_numbers(const Context& ctx) {
    SuiteReport s{"bohr_numbers", 10, "Bohr constants, ionization, radius and mass arithmetic", {}, {}, 0};
    const auto& k = ctx.constants;
    detail::add(s, ctx.tol, "bohr.beta_hat", std::abs(bohr::beta_hat_physical(k) - 0.007297));
    const double ion = bohr::ionization_energy(k, 1);
    detail::add(s, ctx.tol, "bohr.ionization_rel", detail::rel(ion, 2.18e-18));
    detail::add(s, ctx.tol, "bohr.closed_forms_rel", detail::rel(bohr::ionization_energy_via_radius(k, 1), ion));
    detail::add(s, ctx.tol, "bohr.a0_rel", detail::rel(bohr::bohr_radius(k), 5.29e-11));
    const auto m = bohr::mass_estimates(k);
    detail::add(s, ctx.tol, "bohr.mass_abs",
                std::max(std::abs(m.M_check_over_me - 1849.5), std::abs(m.M_proton_over_me - 1836.0)));
    detail::add(s, ctx.tol, "bohr.neutron_ratio", std::abs(m.neutron_ratio_rounded - 0.994655));
    return s;
}

inline SuiteReport kepler_third_law(const Context& ctx) {
    SuiteReport s{"kepler_third_law", 11, "T^2/r^3 of circular geodesics at r = 8 and r = 18", {}, {}, 0};
    const CircularOrbit a = circular_orbit(8.0);
    const CircularOrbit b = circular_orbit(18.0);
    const double ratio = kepler::third_law_ratio(a.period_t, 8.0, b.period_t, 18.0);
    detail::add(s, ctx.tol, "kepler.third_law_rel", std::abs(ratio - 1.0));
    return s;
}

inline SuiteReport nonextendable_example(const Context& ctx) {
    SuiteReport s{"nonextendable_example", 12, "the planar lightcone curve is not a geodesic", {}, {}, 0};
    const double radii[] = {1.5, 2.0, 3.0};
    const auto v = nonextendable_example_check(1.0, 1.0, radii);
    detail::add(s, ctx.tol, "nonextendable.min_spread", v.spread, Compare::Above);
    detail::add(s, ctx.tol, "nonextendable.planar_L", v.planar_L_spread);
    return s;
}

inline SuiteReport christoffel_oracle(const Context& ctx) {
    SuiteReport s{"christoffel_oracle", 13, "analytic vs finite-difference Christoffel tables", {}, {}, 0};
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_real_distribution<double> re(1.05, 20.0);
    std::uniform_real_distribution<double> ri(0.05, 0.95);
    std::uniform_real_distribution<double> up(0.2, std::numbers::pi - 0.2);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double r1 = re(rng), r2 = ri(rng), p1 = up(rng), p2 = up(rng);
        const auto ex = MetricModel::exterior();
        const auto in = MetricModel::interior();
        worst = std::max(worst, christoffel_fd_oracle(ex, r1, p1).max_mixed_difference(christoffel_analytic(ex, r1, p1)));
        worst = std::max(worst, christoffel_fd_oracle(in, r2, p2).max_mixed_difference(christoffel_analytic(in, r2, p2)));
    }
    detail::add(s, ctx.tol, "christoffel.mixed", worst);
    return s;
}

using Suite = std::function<SuiteReport(const Context&)>;

inline const std::vector<std::pair<std::string, Suite>>& registry() {
    static const std::vector<std::pair<std::string, Suite>> r{
        {"null_radial_oracle", null_radial_oracle},
        {"conservation_drift", conservation_drift},
        {"circular_orbit", circular_orbit_suite},
        {"radial_speed_maximum", radial_speed_maximum_suite},
        {"newton_time", newton_time_suite},
        {"interior_curvature", interior_curvature_suite},
        {"exterior_ricci_flat", exterior_ricci_flat},
        {"immersion_pullbacks", immersion_pullbacks},
        {"interior_impossibility", interior_impossibility},
        {"bohr_numbers", bohr_numbers},
        {"kepler_third_law", kepler_third_law},
        {"nonextendable_example", nonextendable_example},
        {"christoffel_oracle", christoffel_oracle},
    };
    return r;
}

/// Runs one suite, turning library errors into a failed report.
inline SuiteReport run_suite(const std::string& name, const Suite& suite, const Context& ctx) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    try {
        rep = suite(ctx);
    } catch (const Error& e) {
        rep.name = name;
        rep.error = e.what();
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline std::vector<SuiteReport> run_all(const Context& ctx) {
    std::vector<SuiteReport> out;
    for (const auto& [name, suite] : registry()) out.push_back(run_suite(name, suite, ctx));
    return out;
}

} // namespace lorentzkit::validation
