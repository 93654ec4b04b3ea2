#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "lorentzkit/minkowski.hpp"

using namespace lorentzkit;
using Catch::Matchers::WithinAbs;

TEST_CASE("lorentz product on the basis", "[minkowski]") {
    CHECK(lorentz_product(FourVector::basis(0), FourVector::basis(0)) == -1.0);
    CHECK(lorentz_product(FourVector::basis(1), FourVector::basis(2)) == 0.0);
    const FourVector p{1, 1, 0, 0};
    CHECK(lorentz_product(p, p) == 0.0);
}

TEST_CASE("lorentz product is bilinear and symmetric", "[minkowski]") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    auto rv = [&] { return FourVector{u(rng), u(rng), u(rng), u(rng)}; };
    for (int i = 0; i < 200; ++i) {
        const FourVector a = rv(), b = rv(), c = rv();
        const double s = u(rng);
        CHECK_THAT(lorentz_product(a, b) - lorentz_product(b, a), WithinAbs(0.0, 1e-12));
        CHECK_THAT(lorentz_product(s * a + b, c) - (s * lorentz_product(a, c) + lorentz_product(b, c)),
                   WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("four vectors reject non-finite components", "[minkowski]") {
    CHECK_THROWS_AS(FourVector(0, NAN, 0, 0), Error);
    CHECK_THROWS_AS(FourVector(INFINITY, 0, 0, 0), Error);
}

TEST_CASE("frames are validated at construction", "[minkowski]") {
    CHECK_NOTHROW(MinkowskiFrame::canonical());
    const LinearMap4 B = boost_1d(0.3);
    CHECK_NOTHROW(MinkowskiFrame::make(B.column(0), B.column(1), B.column(2), B.column(3)));
    // past-directed observer
    try {
        MinkowskiFrame::make(-1.0 * FourVector::basis(0), FourVector::basis(1), FourVector::basis(2),
                             FourVector::basis(3));
        FAIL("expected a frame error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Frame);
    }
    CHECK_THROWS_AS(MinkowskiFrame::make(FourVector::basis(0), FourVector{0, 1, 1e-9, 0}, FourVector::basis(2),
                                         FourVector::basis(3)),
                    Error);
}

TEST_CASE("boost_1d examples", "[minkowski]") {
    CHECK(boost_1d(0.0).max_abs_difference(LinearMap4::identity()) == 0.0);
    const LinearMap4 b = boost_1d(0.6);
    CHECK_THAT(b(0, 0), WithinAbs(1.25, 1e-15));
    CHECK_THAT(b(0, 1), WithinAbs(-0.75, 1e-15));
    CHECK(boost_1d(0.6).compose(boost_1d(-0.6)).max_abs_difference(LinearMap4::identity()) < 1e-14);
    try {
        boost_1d(1.0);
        FAIL("expected invalid-speed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidSpeed);
    }
    CHECK_THROWS_AS(boost_1d(-1.5), Error);
}

TEST_CASE("extended Lorentz membership", "[minkowski]") {
    CHECK(is_extended_lorentz(LinearMap4::identity()).member);
    CHECK(is_extended_lorentz(boost_1d(0.6)).member);
    const auto v = is_extended_lorentz(LinearMap4::diagonal(2, 1, 1, 1));
    CHECK_FALSE(v.member);
    CHECK(v.determinant == 2.0);
    // det 1 but d0 sent to a spacelike vector
    const LinearMap4 swap({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
    CHECK_FALSE(is_extended_lorentz(swap).member);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-0.99, 0.99);
    for (int i = 0; i < 100; ++i) CHECK(is_extended_lorentz(boost_1d(u(rng))).member);
}

TEST_CASE("boost block preserves the volume form and dilates time", "[minkowski]") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-0.95, 0.95);
    for (int i = 0; i < 50; ++i) {
        const double v = u(rng);
        const LinearMap4 b = boost_1d(v);
        CHECK_THAT(b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0), WithinAbs(1.0, 1e-12));
        // dx1' = 0 forces dx1 = v dx0, then dx0' = sqrt(1 - v^2) dx0
        const FourVector img = b.apply({1.0, v, 0.0, 0.0});
        CHECK_THAT(img[1], WithinAbs(0.0, 1e-12));
        CHECK_THAT(img[0], WithinAbs(std::sqrt(1.0 - v * v), 1e-12));
        // and the inverse direction
        const FourVector back = boost_1d(-v).apply({1.0, -v, 0.0, 0.0});
        CHECK_THAT(back[0], WithinAbs(std::sqrt(1.0 - v * v), 1e-12));
    }
}

TEST_CASE("proper time factor", "[minkowski]") {
    CHECK(proper_time_factor(LinearMap4::identity()) == 1.0);
    // boosts are isometries, so L(d0) stays unit
    CHECK_THAT(proper_time_factor(boost_1d(0.6)), WithinAbs(1.0, 1e-14));
    CHECK_THAT(proper_time_factor(LinearMap4::diagonal(0.5, 1, 1, 1)), WithinAbs(0.5, 1e-15));
    try {
        proper_time_factor(LinearMap4::diagonal(0, 1, 1, 1));
        FAIL("expected causality error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Causality);
    }
}

TEST_CASE("velocity field lifting", "[minkowski]") {
    const auto z = lift_velocity_field(VelocityField(0.0, {0, 0, 0}));
    CHECK(z.V == FourVector::basis(0));
    CHECK(z.g00 == -1.0);

    const auto l = lift_velocity_field(VelocityField(0.6, {1, 0, 0}));
    CHECK_THAT(l.g00, WithinAbs(-0.64, 1e-15));
    CHECK_THAT(l.g11, WithinAbs(1.5625, 1e-14));
    CHECK_THAT(l.g01, WithinAbs(0.0, 1e-15));

    const auto n = lift_velocity_field(VelocityField(std::sqrt(0.5), {0, 3, 4}));
    CHECK_THAT(n.g00, WithinAbs(-0.5, 1e-15));
    CHECK_THAT(n.g11, WithinAbs(2.0, 1e-14));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> sp(0.0, 0.999);
    std::normal_distribution<double> dir;
    for (int i = 0; i < 100; ++i) {
        const auto f = lift_velocity_field(VelocityField(sp(rng), {dir(rng), dir(rng), dir(rng)}));
        CHECK_THAT(f.g11 * f.g00, WithinAbs(-1.0, 1e-12));
        CHECK_THAT(f.g01, WithinAbs(0.0, 1e-12));
    }
    CHECK_THROWS_AS(VelocityField(1.0, {1, 0, 0}), Error);
    CHECK_THROWS_AS(VelocityField(-0.1, {1, 0, 0}), Error);
}
