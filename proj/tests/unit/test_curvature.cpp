#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "lorentzkit/curvature.hpp"

using namespace lorentzkit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
double mixed(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }
}

TEST_CASE("strip metrics satisfy EG = -1", "[curvature]") {
    const auto in = strip_metric(MetricModel::interior());
    const auto ex = strip_metric(MetricModel::exterior());
    for (double r = 0.02; r < 0.99; r += 0.03) CHECK_THAT(in.E(r) * in.G(r), WithinAbs(-1.0, 1e-14));
    for (double r = 1.02; r < 100.0; r *= 1.3) CHECK_THAT(ex.E(r) * ex.G(r), WithinAbs(-1.0, 1e-14));
    // interior E is (r-1)/r
    CHECK_THAT(in.E(0.25), WithinAbs(-3.0, 1e-15));
}

TEST_CASE("Hessian and Laplacian of r on the interior strip", "[curvature]") {
    const auto h = hessian_laplacian(strip_metric(MetricModel::interior()), 0.5);
    CHECK_THAT(h.h_tt, WithinAbs(2.0, 1e-14));
    CHECK_THAT(h.h_rr, WithinAbs(-2.0, 1e-14));
    CHECK_THAT(h.laplacian, WithinAbs(-4.0, 1e-14));
    for (double r = 0.05; r < 0.96; r += 0.05) {
        const auto x = hessian_laplacian(strip_metric(MetricModel::interior()), r);
        CHECK_THAT(x.h_tt, WithinRel((1 - r) / (2 * r * r * r), 1e-12));
        CHECK_THAT(x.h_rr, WithinRel(-1 / (2 * r * (1 - r)), 1e-12));
        CHECK_THAT(x.laplacian, WithinRel(-1 / (r * r), 1e-12));
    }
    CHECK_THROWS_AS(hessian_laplacian(strip_metric(MetricModel::interior()), 1.2), Error);
}

TEST_CASE("Gauss curvature of the strips", "[curvature]") {
    const auto in = strip_metric(MetricModel::interior());
    const auto ex = strip_metric(MetricModel::exterior());
    CHECK_THAT(gauss_curvature_base(in, 0.5), WithinAbs(-8.0, 1e-12));
    // approaching the boundary
    CHECK_THAT(gauss_curvature_base(in, 1.0 - 1e-9), WithinAbs(-1.0, 1e-6));
    CHECK_THAT(gauss_curvature_base(ex, 2.0), WithinAbs(0.125, 1e-14));

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ui(0.05, 0.95);
    std::uniform_real_distribution<double> ue(1.05, 30.0);
    for (int i = 0; i < 20; ++i) {
        const double r = ui(rng);
        const double k = gauss_curvature_base(in, r);
        CHECK_THAT(k, WithinRel(-1.0 / (r * r * r), 1e-12));
        CHECK(mixed(gauss_curvature_fd_oracle(in, r), k) < 1e-6);
        const double s = ue(rng);
        CHECK(mixed(gauss_curvature_fd_oracle(ex, s), gauss_curvature_base(ex, s)) < 1e-6);
    }
}

TEST_CASE("interior Ricci and Einstein closed forms", "[curvature]") {
    const auto c = ricci_warped(MetricModel::interior(), 0.5);
    CHECK_THAT(c.ric_vertical_coeff, WithinAbs(8.0, 1e-12));
    CHECK_THAT(c.scalar, WithinAbs(16.0, 1e-12));
    CHECK_THAT(c.einstein_horizontal_coeff, WithinAbs(-8.0, 1e-12));

    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int i = 0; i < 20; ++i) {
        const double r = u(rng);
        const auto w = ricci_warped(MetricModel::interior(), r);
        const auto a = interior_curvature_closed_form(r);
        const double s = 1.0 / (r * r);
        CHECK(std::abs(w.ric_horizontal) < 1e-12 * s);
        CHECK(std::abs(w.ric_tt) < 1e-12 * s / r);
        CHECK(std::abs(w.ric_rr) < 1e-12 * s / r);
        CHECK_THAT(w.r_star, WithinRel(a.r_star, 1e-12));
        CHECK_THAT(w.ric_vertical_coeff, WithinRel(a.ric_vertical_coeff, 1e-12));
        CHECK_THAT(w.scalar, WithinRel(a.scalar, 1e-12));
        CHECK_THAT(w.scalar, WithinRel(2.0 * w.ric_vertical_coeff, 1e-12));
        CHECK_THAT(w.einstein_horizontal_coeff, WithinRel(a.einstein_horizontal_coeff, 1e-12));
        CHECK(std::abs(w.einstein_vertical_coeff) < 1e-12 * s);
        // G = Ric - S g / 2, coefficientwise
        CHECK_THAT(w.einstein_horizontal_coeff, WithinAbs(w.ric_horizontal - 0.5 * w.scalar, 1e-12 * s));
    }
}

TEST_CASE("exterior is Ricci flat", "[curvature]") {
    for (double r : {1.1, 1.5, 2.0, 3.0, 10.0, 100.0}) {
        const auto c = ricci_warped(MetricModel::exterior(), r);
        CHECK(std::abs(c.ric_tt) < 1e-10);
        CHECK(std::abs(c.ric_rr) < 1e-10);
        CHECK(std::abs(c.ric_horizontal) < 1e-10);
        CHECK(std::abs(c.ric_vertical_coeff) < 1e-10);
        CHECK(std::abs(c.scalar) < 1e-10);
        CHECK(std::abs(c.einstein_horizontal_coeff) < 1e-10);
        CHECK(std::abs(c.einstein_vertical_coeff) < 1e-10);
    }
}

TEST_CASE("density and pressure", "[curvature]") {
    const auto d = einstein_density_pressure(0.5);
    CHECK_THAT(d.density, WithinAbs(8.0, 1e-12));
    CHECK_THAT(d.pressure, WithinAbs(-8.0, 1e-12));
    CHECK_THAT(d.contraction, WithinAbs(-16.0, 1e-12));
    const auto edge = einstein_density_pressure(1.0 - 1e-9);
    CHECK_THAT(edge.density, WithinAbs(2.0, 1e-7));
    CHECK_THAT(edge.pressure, WithinAbs(-2.0, 1e-7));
    for (double r = 0.05; r < 1.0; r += 0.05) {
        const auto x = einstein_density_pressure(r);
        CHECK(std::abs(x.density + x.pressure) < 1e-12 * x.density);
        CHECK_THAT(x.contraction, WithinRel(-4.0 / (r * r), 1e-12));
    }
    CHECK_THROWS_AS(einstein_density_pressure(1.5), Error);
}

TEST_CASE("immersion pullbacks reproduce the strip metrics", "[curvature]") {
    const auto ext = immersion_pullback_check(MetricModel::exterior(), 2.0, 0.0);
    CHECK(ext.max_abs_residual < 1e-7);
    const auto in = immersion_pullback_check(MetricModel::interior(), 0.5, 0.0);
    CHECK(in.max_abs_residual < 1e-7);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ut(-5.0, 5.0);
    for (int i = 0; i < 10; ++i) {
        CHECK(immersion_pullback_check(MetricModel::exterior(), 1.5 + i, ut(rng)).max_abs_residual < 1e-7);
        // scale by the largest metric coefficient, |E| = (1-r)/r grows near r = 0
        const double r = 0.1 + 0.08 * i;
        const double scale = std::max(1.0, (1 - r) / r);
        CHECK(immersion_pullback_check(MetricModel::interior(), r, ut(rng)).max_abs_residual < 1e-7 * scale);
    }
    for (double t : {0.0, 1.0, 10.0}) {
        CHECK(immersion_pullback_check(MetricModel::exterior(), 2.0, t).boundary_norm < 1e-3);
        const auto p = strip_immersion(MetricModel::exterior(), t, 1.0 + 1e-8);
        CHECK(std::hypot(std::hypot(p[0], p[1]), std::hypot(p[2], p[3])) < 1e-3);
    }
    CHECK_THROWS_AS(immersion_pullback_check(MetricModel::exterior(), 1.0, 0.0), Error);
}

TEST_CASE("immersion lands on the quadric <f,f> = 0", "[curvature]") {
    // |f|^2 splits evenly between the two signatures
    const auto p = strip_immersion(MetricModel::exterior(), 0.3, 4.0);
    CHECK_THAT(semi_euclidean_product(p, p), WithinAbs(0.0, 1e-14));
}
