#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lorentzkit/cone_sections.hpp"

using namespace lorentzkit;
using Catch::Matchers::WithinAbs;

namespace {
const double kLn2 = std::log(2.0);
double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
}  // namespace

TEST_CASE("lightcone parametrization", "[cone]") {
    CHECK(max_abs_difference(lightcone_point(1, 0, 0), FourVector{1, 0, 0, 1}) < 1e-15);
    CHECK(max_abs_difference(lightcone_point(2, std::numbers::pi / 2, 0), FourVector{2, 2, 0, 0}) < 1e-15);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 6.0);
    for (int i = 0; i < 100; ++i) {
        const FourVector p = lightcone_point(0.1 + u(rng), u(rng), u(rng));
        CHECK_THAT(lorentz_product(p, p), WithinAbs(0.0, 1e-12));
    }
    CHECK_THROWS_AS(lightcone_point(0.0, 0, 0), Error);
}

TEST_CASE("observer construction", "[cone]") {
    const ObserverTau rest = build_observer(FourVector::basis(0));
    CHECK(rest.phi == 0.0);
    CHECK(rest.e3 == FourVector::basis(3));
    CHECK(max_abs_difference(rest.w, rest.e3) < 1e-15);

    const ObserverTau o = build_observer({1.25, 0, 0, 0.75});
    CHECK_THAT(o.phi, WithinAbs(kLn2, 1e-12));
    CHECK(max_abs_difference(o.e3, FourVector::basis(3)) < 1e-15);
    CHECK(max_abs_difference(o.w, FourVector{0.75, 0, 0, 1.25}) < 1e-12);
    CHECK_THAT(lorentz_product(o.w, o.w), WithinAbs(1.0, 1e-12));
    CHECK_THAT(lorentz_product(o.tau, o.w), WithinAbs(0.0, 1e-12));
    CHECK_THAT(lorentz_product(o.w, o.e3), WithinAbs(std::cosh(o.phi), 1e-12));
    CHECK_THAT(lorentz_product(o.tau, o.e1), WithinAbs(0.0, 1e-15));
    CHECK_THAT(lorentz_product(o.tau, o.e2), WithinAbs(0.0, 1e-15));

    CHECK_THROWS_AS(build_observer({2, 0, 0, 0}), Error);
    CHECK_THROWS_AS(build_observer({-1, 0, 0, 0}), Error);
}

TEST_CASE("observer in a general direction", "[cone]") {
    const double phi = 0.7;
    const Vec3 d{1.0 / std::sqrt(3.0), -1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0)};
    const FourVector tau{std::cosh(phi), std::sinh(phi) * d[0], std::sinh(phi) * d[1], std::sinh(phi) * d[2]};
    const ObserverTau o = build_observer(tau);
    CHECK_THAT(o.phi, WithinAbs(phi, 1e-12));
    CHECK_NOTHROW(MinkowskiFrame::make(FourVector::basis(0), o.e1, o.e2, o.e3, 1e-12));
    CHECK_THAT(lorentz_product(o.tau, o.w), WithinAbs(0.0, 1e-12));
}

TEST_CASE("section spheres", "[cone]") {
    const ConeSection round = section_sphere(1.0, observer_along_d3(0.0));
    CHECK(max_abs_difference(round.a1, FourVector{1, 0, 0, -1}) < 1e-15);
    CHECK(max_abs_difference(round.a2, FourVector{1, 0, 0, 1}) < 1e-15);
    CHECK(max_abs_difference(round.center, FourVector::basis(0)) < 1e-15);
    CHECK(round.radius == 1.0);

    const ConeSection s = section_sphere(1.0, observer_along_d3(kLn2));
    CHECK_THAT(s.lambda1, WithinAbs(-0.5, 1e-15));
    CHECK_THAT(s.lambda2, WithinAbs(2.0, 1e-14));
    CHECK(max_abs_difference(s.center, FourVector{25.0 / 16, 0, 0, 15.0 / 16}) < 1e-14);
    CHECK_THAT(s.radius, WithinAbs(1.25, 1e-15));
    CHECK(max_abs_difference(s.a2, FourVector{2.5, 0, 0, 2.5}) < 1e-14);
    for (const FourVector& a : {s.a1, s.a2}) {
        CHECK_THAT(lorentz_product(a, a), WithinAbs(0.0, 1e-10));
        CHECK_THAT(lorentz_product(a - s.a * FourVector::basis(0), s.observer.tau), WithinAbs(0.0, 1e-10));
    }
    CHECK(max_abs_difference(0.5 * (s.a1 + s.a2), s.center) < 1e-14);
    // the end points are P + lambda_i w
    const FourVector P = s.a * FourVector::basis(0);
    CHECK(max_abs_difference(P + s.lambda1 * s.observer.w, s.a1) < 1e-14);
    CHECK(max_abs_difference(P + s.lambda2 * s.observer.w, s.a2) < 1e-14);
    CHECK_THROWS_AS(section_sphere(0.0, s.observer), Error);
}

TEST_CASE("sphere points lie on the cone", "[cone]") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> ph(0.0, 2.0);
    for (int k = 0; k < 10; ++k) {
        const ConeSection s = section_sphere(0.5 + ph(rng), observer_along_d3(ph(rng)));
        for (int i = 0; i < 50; ++i) {
            const FourVector x = sphere_point(s, ang(rng), ang(rng));
            CHECK_THAT(lorentz_product(x, x), WithinAbs(0.0, 1e-10 * std::max(1.0, x[0] * x[0])));
        }
    }
}

TEST_CASE("projected ellipse has a focus at the origin", "[cone]") {
    const ConeSection c = section_sphere(2.0, observer_along_d3(0.0));
    for (const Vec3& p : project_to_rest_space(c, 64)) CHECK_THAT(norm3(p), WithinAbs(2.0, 1e-14));

    const ConeSection s = section_sphere(1.0, observer_along_d3(kLn2));
    const ProjectedEllipse e = projected_ellipse(s);
    CHECK_THAT(e.semi_major, WithinAbs(25.0 / 16, 1e-14));
    CHECK_THAT(e.semi_minor, WithinAbs(1.25, 1e-14));
    CHECK_THAT(e.eccentricity, WithinAbs(0.6, 1e-14));
    const double ch = std::cosh(kLn2);
    CHECK_THAT(e.focal_distance * e.focal_distance, WithinAbs(ch * ch * (ch * ch - 1.0), 1e-13));

    const auto pts = project_to_rest_space(s, 4000);
    double dmin = 1e300, dmax = 0.0;
    for (const Vec3& p : pts) {
        dmin = std::min(dmin, norm3(p));
        dmax = std::max(dmax, norm3(p));
        // (x3 - c)^2 / A^2 + x1^2 / B^2 = 1
        const double q = std::pow((p[2] - e.focal_distance) / e.semi_major, 2) + std::pow(p[0] / e.semi_minor, 2);
        CHECK_THAT(q, WithinAbs(1.0, 1e-12));
    }
    CHECK_THAT(dmin, WithinAbs(norm3(project_rest(s.a1)), 1e-10));
    CHECK_THAT(dmax, WithinAbs(norm3(project_rest(s.a2)), 1e-10));
    CHECK_THAT((dmax - dmin) / (dmax + dmin), WithinAbs(std::tanh(kLn2), 1e-10));
    CHECK_THROWS_AS(project_to_rest_space(s, 2), Error);
}

TEST_CASE("eccentricity equals tanh phi", "[cone]") {
    for (double phi : {0.1, 0.5, 1.0, 2.0}) {
        const ConeSection s = section_sphere(1.0, observer_along_d3(phi));
        const auto pts = project_to_rest_space(s, 4);
        const double far = norm3(pts[0]);
        const double near = norm3(pts[2]);
        CHECK_THAT((far - near) / (far + near), WithinAbs(std::tanh(phi), 1e-10));
    }
}

TEST_CASE("minimal observer", "[cone]") {
    const MinimalObserver m = minimal_observer(FourVector::basis(1), FourVector::basis(2));
    CHECK(max_abs_difference(m.tau, FourVector::basis(0)) < 1e-15);
    // det[tau, v1, v2, nu] = -1 picks nu = -d3
    CHECK(m.nu[3] == -1.0);
    CHECK(m.minimal_over_samples);

    const MinimalObserver g = minimal_observer({0, 1, 0, 0}, {1, 0, std::sqrt(2.0), 0});
    CHECK(g.max_orthogonality_residual < 1e-12);
    CHECK(g.minimal_over_samples);
    CHECK_THAT(g.nu[0], WithinAbs(0.0, 1e-15));
    for (double phi : {-0.5, -0.1, 0.1, 0.5}) {
        CHECK(std::cosh(phi) * g.tau[0] + std::sinh(phi) * g.nu[0] >= g.tau[0]);
    }
    CHECK_THROWS_AS(minimal_observer({0, 1, 0, 0}, {0, 1, 0, 0}), Error);
    CHECK_THROWS_AS(minimal_observer({1, 0, 0, 0}, {0, 1, 0, 0}), Error);
}
