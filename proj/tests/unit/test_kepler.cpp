#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "lorentzkit/kepler.hpp"

using namespace lorentzkit;
using namespace lorentzkit::kepler;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Reference two-body propagator: x'' = -mu x / |x|^3 with classical RK4.
struct Body {
    double x, y, vx, vy;
};

Body deriv(const Body& b, double mu) {
    const double r3 = std::pow(b.x * b.x + b.y * b.y, 1.5);
    return {b.vx, b.vy, -mu * b.x / r3, -mu * b.y / r3};
}

Body axpy(const Body& b, const Body& d, double h) { return {b.x + h * d.x, b.y + h * d.y, b.vx + h * d.vx, b.vy + h * d.vy}; }

PlanarTrajectory two_body(double mu, Body b, double t_end, double h, std::size_t stride) {
    PlanarTrajectory out;
    double t = 0.0;
    double theta_prev = std::atan2(b.y, b.x);
    double unwrapped = theta_prev;
    const auto n = static_cast<std::size_t>(std::llround(t_end / h));
    for (std::size_t i = 0; i <= n; ++i) {
        if (i % stride == 0) {
            const double th = std::atan2(b.y, b.x);
            double d = th - theta_prev;
            if (d > std::numbers::pi) d -= 2 * std::numbers::pi;
            if (d < -std::numbers::pi) d += 2 * std::numbers::pi;
            unwrapped += d;
            theta_prev = th;
            out.push_back({t, std::hypot(b.x, b.y), unwrapped});
        }
        const Body k1 = deriv(b, mu);
        const Body k2 = deriv(axpy(b, k1, h / 2), mu);
        const Body k3 = deriv(axpy(b, k2, h / 2), mu);
        const Body k4 = deriv(axpy(b, k3, h), mu);
        b = {b.x + h / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x), b.y + h / 6 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y),
             b.vx + h / 6 * (k1.vx + 2 * k2.vx + 2 * k3.vx + k4.vx),
             b.vy + h / 6 * (k1.vy + 2 * k2.vy + 2 * k3.vy + k4.vy)};
        t += h;
    }
    return out;
}

}  // namespace

TEST_CASE("areal velocity of a uniform circle", "[kepler]") {
    PlanarTrajectory c;
    for (int i = 0; i < 50; ++i) c.push_back({0.1 * i, 2.0, 0.3 * 0.1 * i});
    for (double v : areal_velocity(c)) CHECK_THAT(v, WithinAbs(4.0 * 0.3, 1e-12));

    PlanarTrajectory radial;
    for (int i = 0; i < 10; ++i) radial.push_back({static_cast<double>(i), 1.0 + i, 0.4});
    for (double v : areal_velocity(radial)) CHECK(v == 0.0);
}

TEST_CASE("areal velocity on a non-uniform grid is exact for quadratics", "[kepler]") {
    PlanarTrajectory tr;
    for (double t : {0.0, 0.1, 0.35, 0.4, 0.9, 1.7}) tr.push_back({t, 1.0, 0.5 * t * t + t});
    const auto v = areal_velocity(tr);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK_THAT(v[i], WithinAbs(tr[i + 1].t + 1.0, 1e-12));
}

TEST_CASE("areal velocity is constant along a Kepler ellipse", "[kepler]") {
    // mu = 1, r0 = 1, v0 = 1.2: bound orbit with e = 0.44
    const double a = 1.0 / (2.0 - 1.44);
    const double T = 2 * std::numbers::pi * std::pow(a, 1.5);
    const auto tr = two_body(1.0, {1.0, 0.0, 0.0, 1.2}, T, T / 1e5, 10);
    const auto v = areal_velocity(tr);
    REQUIRE(v.size() > 1000);
    for (double x : v) CHECK_THAT(x, WithinRel(1.2, 1e-6));
    const OrbitSummary s = summarize_orbit(tr);
    CHECK_THAT(s.period, WithinRel(T, 1e-6));
}

TEST_CASE("areal velocity under affine time reparametrization", "[kepler]") {
    const auto tr = two_body(1.0, {1.0, 0.0, 0.0, 1.1}, 5.0, 1e-3, 5);
    const double p = 2.5, q = 7.0;
    PlanarTrajectory re = tr;
    for (auto& s : re) s.t = p * s.t + q;
    const auto a = areal_velocity(tr);
    const auto b = areal_velocity(re);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK_THAT(b[i] * p, WithinRel(a[i], 1e-12));
}

TEST_CASE("areal velocity input validation", "[kepler]") {
    PlanarTrajectory two{{0, 1, 0}, {1, 1, 1}};
    CHECK_THROWS_AS(areal_velocity(two), Error);
    PlanarTrajectory back{{0, 1, 0}, {1, 1, 1}, {0.5, 1, 2}};
    try {
        areal_velocity(back);
        FAIL("expected an input error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Input);
    }
}

TEST_CASE("third law ratio", "[kepler]") {
    CHECK(third_law_ratio(3, 2, 3, 2) == 1.0);
    auto period = [](double r) { return 2 * std::numbers::pi * std::sqrt(2.0) * std::pow(r, 1.5); };
    CHECK_THAT(third_law_ratio(period(8), 8, period(18), 18), WithinAbs(1.0, 1e-12));
    CHECK_THAT(third_law_ratio(5 * std::pow(3.0, 1.5), 3, 5 * std::pow(7.0, 1.5), 7), WithinAbs(1.0, 1e-12));
    CHECK_THROWS_AS(third_law_ratio(0, 1, 1, 1), Error);
}

TEST_CASE("orbital and escape speeds", "[kepler]") {
    const auto a = orbital_and_escape_speed(1, 1);
    CHECK(a.v_orb == 1.0);
    CHECK_THAT(a.v_esc, WithinAbs(std::sqrt(2.0), 1e-15));
    const auto b = orbital_and_escape_speed(0.5, 3);
    CHECK_THAT(b.v_orb, WithinAbs(std::sqrt(1.0 / 6), 1e-15));
    CHECK_THAT(b.v_esc, WithinAbs(std::sqrt(1.0 / 3), 1e-15));
    CHECK_THROWS_AS(orbital_and_escape_speed(-1, 1), Error);
}

TEST_CASE("adiabatic mass ratio", "[kepler]") {
    CHECK(adiabatic_mass_ratio(0.0, 1.4) == 1.0);
    CHECK_THAT(adiabatic_mass_ratio(0.6, 2.0), WithinAbs(1.25, 1e-14));
    CHECK_THAT(adiabatic_mass_ratio(0.6, 5.0 / 3.0), WithinAbs(std::pow(0.8, -2.0 / 3.0), 1e-14));
    CHECK_THAT(adiabatic_mass_ratio(0.6, 5.0 / 3.0), WithinAbs(1.1604, 1e-4));
    for (double e = 0.0; e < 0.99; e += 0.07) {
        CHECK_THAT(adiabatic_mass_ratio(e, 2.0) * std::sqrt(1 - e * e), WithinAbs(1.0, 1e-14));
        // cosh(artanh e)
        CHECK_THAT(adiabatic_mass_ratio(e, 2.0), WithinAbs(std::cosh(std::atanh(e)), 1e-12));
    }
    CHECK_THROWS_AS(adiabatic_mass_ratio(1.0, 2.0), Error);
    CHECK_THROWS_AS(adiabatic_mass_ratio(0.5, 1.0), Error);
}

TEST_CASE("adiabatic volume relation", "[kepler]") {
    for (double e : {0.0, 0.3, 0.6, 0.9}) {
        const double a = 2.0;
        const Ellipse el(a, a * std::sqrt(1 - e * e));
        CHECK_THAT(el.eccentricity(), WithinAbs(e, 1e-12));
        CHECK_THAT(adiabatic_volume_ratio(el), WithinAbs(std::sqrt(1 - e * e), 1e-14));
    }
    CHECK_THROWS_AS(Ellipse(1.0, 2.0), Error);
}
