#include "helpers.h"

#include "sector_metrics/geometry.h"

#include "../support/oracle.h"

using namespace sector_metrics;
using test::expi;
using test::near;

TEST_CASE("domain construction validates parameters") {
    CHECK(test::error_code_of([] { (void)Domain::sector(0.0); }) == ErrorCode::InvalidTheta);
    CHECK(test::error_code_of([] { (void)Domain::sector(2.0 * kPi); }) == ErrorCode::InvalidTheta);
    CHECK(test::error_code_of([] { (void)Domain::sector(-1.0); }) == ErrorCode::InvalidTheta);
    CHECK(test::error_code_of([] { (void)Domain::strip(0.0); }) == ErrorCode::OutOfRange);
    CHECK(Domain::half_plane().angle() == kPi);
    CHECK(Domain::strip(2.0).height() == 2.0);
}

TEST_CASE("membership is strict") {
    const Domain quarter = Domain::sector(kPi / 2);
    CHECK(quarter.contains({1.0, 1.0}));
    CHECK_FALSE(quarter.contains({1.0, 0.0}));
    CHECK_FALSE(quarter.contains({0.0, 1.0}));
    CHECK_FALSE(quarter.contains({-1.0, 1.0}));
    CHECK_FALSE(quarter.contains({0.0, 0.0}));

    const Domain reflex = Domain::sector(1.5 * kPi);
    CHECK(reflex.contains({-1.0, -1.0}));
    CHECK_FALSE(reflex.contains({1.0, -1.0}));

    CHECK(Domain::strip(1.0).contains({100.0, 0.5}));
    CHECK_FALSE(Domain::strip(1.0).contains({0.0, 1.0}));
    CHECK(Domain::punctured_plane().contains({-3.0, 0.0}));
    CHECK_FALSE(Domain::punctured_plane().contains({0.0, 0.0}));
    CHECK(Domain::unit_disk().contains({0.0, 0.0}));
    CHECK_FALSE(Domain::unit_disk().contains({1.0, 0.0}));
    CHECK_FALSE(Domain::half_plane().contains({std::nan(""), 1.0}));
}

TEST_CASE("convexity and scale invariance flags") {
    CHECK(Domain::sector(kPi).is_convex());
    CHECK_FALSE(Domain::sector(1.2 * kPi).is_convex());
    CHECK(Domain::strip(1.0).is_convex());
    CHECK_FALSE(Domain::punctured_plane().is_convex());
    CHECK(Domain::sector(0.3).is_scale_invariant());
    CHECK_FALSE(Domain::strip(kPi).is_scale_invariant());
}

TEST_CASE("principal argument lies in [0, 2pi)") {
    CHECK(principal_arg({1.0, 0.0}) == 0.0);
    CHECK(near(principal_arg({0.0, -1.0}), 1.5 * kPi, 1e-15));
    CHECK(near(principal_arg({-1.0, -0.0}), kPi, 1e-15));
}

TEST_CASE("reflection across lines through the origin") {
    const Ray real_axis(Point{}, Point{1.0, 0.0});
    const Ray imag_axis(Point{}, Point{0.0, 1.0});
    const Point a = reflect({1.0, 2.0}, real_axis);
    CHECK(near(a.real(), 1.0, 1e-15));
    CHECK(near(a.imag(), -2.0, 1e-15));
    const Point b = reflect({1.0, 0.0}, imag_axis);
    CHECK(near(b.real(), -1.0, 1e-15));
    CHECK(near(b.imag(), 0.0, 1e-15));
    const Point c = reflect(expi(3 * kPi / 8), Ray::from_angle(Point{}, 3 * kPi / 4));
    CHECK(std::abs(c - expi(9 * kPi / 8)) < 1e-15);
}

TEST_CASE("boundary distance") {
    CHECK(near(boundary_distance(Domain::sector(kPi / 2), {1.0, 1.0}), 1.0, 1e-15));
    // Foot of the perpendicular to the arg-0 ray is behind the vertex.
    CHECK(near(boundary_distance(Domain::sector(1.5 * kPi), {-1.0, 0.0}), 1.0, 1e-15));
    CHECK(near(boundary_distance(Domain::strip(kPi), {1.0, kPi / 3}), kPi / 3, 1e-15));
    CHECK(near(boundary_distance(Domain::punctured_plane(), {3.0, 4.0}), 5.0, 1e-15));
    CHECK(near(boundary_distance(Domain::unit_disk(), {0.0, 0.25}), 0.75, 1e-15));
    CHECK(test::error_code_of([] { (void)boundary_distance(Domain::half_plane(), {1.0, 0.0}); }) ==
          ErrorCode::PointNotInDomain);
}

TEST_CASE("Heron infimum on a single ray") {
    const Ray ray(Point{}, Point{1.0, 0.0});

    const BoundaryInfimum a = heron_on_ray({0.0, 1.0}, {0.0, 2.0}, ray);
    CHECK(near(a.value, 3.0, 1e-15));
    CHECK(std::abs(a.minimizer) < 1e-15);

    // The Heron point of the reflected pair falls behind the vertex.
    const BoundaryInfimum b = heron_on_ray(expi(3 * kPi / 8), expi(9 * kPi / 8), ray);
    CHECK(b.which == InfimumCase::RayEndpoint);
    CHECK(near(b.value, 2.0, 1e-15));

    const BoundaryInfimum c = heron_on_ray({1.0, 1.0}, {3.0, 1.0}, ray);
    CHECK(c.which == InfimumCase::HeronReflection);
    CHECK(near(c.value, 2.0 * std::sqrt(2.0), 1e-15));
    CHECK(std::abs(c.minimizer - Point{2.0, 0.0}) < 1e-15);

    const BoundaryInfimum d = heron_on_ray({1.0, 1.0}, {2.0, -1.0}, ray);
    CHECK(d.which == InfimumCase::SegmentCrossesBoundary);
    CHECK(near(d.value, std::sqrt(5.0), 1e-15));

    // Opposite sides, but the segment meets the line behind the origin.
    const BoundaryInfimum e = heron_on_ray({-1.0, 1.0}, {-2.0, -1.0}, ray);
    CHECK(e.which == InfimumCase::RayEndpoint);
    CHECK(near(e.value, std::sqrt(2.0) + std::sqrt(5.0), 1e-15));
}

TEST_CASE("boundary infimum for whole domains") {
    const BoundaryInfimum h = boundary_inf_sum(Domain::half_plane(), {0.0, 1.0}, {0.0, 2.0});
    CHECK(near(h.value, 3.0, 1e-15));
    CHECK(std::abs(h.minimizer) < 1e-15);

    const BoundaryInfimum p = boundary_inf_sum(Domain::punctured_plane(), {-1.0, 0.0}, {1.0, 0.0});
    CHECK(p.which == InfimumCase::SegmentCrossesBoundary);
    CHECK(near(p.value, 2.0, 1e-15));
    const BoundaryInfimum q = boundary_inf_sum(Domain::punctured_plane(), {1.0, 0.0}, {0.0, 1.0});
    CHECK(q.which == InfimumCase::PuncturedOrigin);
    CHECK(near(q.value, 2.0, 1e-15));

    const BoundaryInfimum s = boundary_inf_sum(Domain::sector(1.5 * kPi), expi(3 * kPi / 8), expi(9 * kPi / 8));
    CHECK(near(s.value, 2.0, 1e-15));
    CHECK(std::abs(s.minimizer) < 1e-15);

    // Disk: only center pairs, inf = 1 + (1 - |y|).
    CHECK(near(boundary_inf_sum(Domain::unit_disk(), {}, {0.3, 0.0}).value, 1.7, 1e-15));
    CHECK(test::error_code_of([] { (void)boundary_inf_sum(Domain::unit_disk(), {0.1, 0.0}, {0.3, 0.0}); }) ==
          ErrorCode::NumericFallbackRequired);
}

TEST_CASE("symmetric pairs report the minimizer with smaller argument") {
    const BoundaryInfimum b = boundary_inf_sum(Domain::sector(kPi / 2), expi(kPi / 8), expi(3 * kPi / 8));
    CHECK(b.which == InfimumCase::HeronReflection);
    CHECK(std::abs(b.minimizer.imag()) < 1e-15);
    CHECK(b.minimizer.real() > 0.0);
}

TEST_CASE("boundary infimum is exactly symmetric and matches the brute-force oracle") {
    std::mt19937_64 rng(7);
    const std::vector<Domain> domains{Domain::sector(kPi / 4), Domain::sector(2 * kPi / 3), Domain::half_plane(),
                                      Domain::sector(5 * kPi / 4), Domain::sector(1.9 * kPi)};
    for (const Domain& d : domains) {
        for (int i = 0; i < 100; ++i) {
            const Point x = test::random_in_sector(rng, d.angle());
            const Point y = test::random_in_sector(rng, d.angle());
            const double fwd = boundary_inf_sum(d, x, y).value;
            const double rev = boundary_inf_sum(d, y, x).value;
            CHECK(fwd == rev);
            const double ref = oracle::boundary_inf_sum(d, x, y, 20000);
            CHECK_MESSAGE(test::near(fwd, ref, 1e-8 * ref), d.describe(), " x=", x, " y=", y);
        }
    }
    for (double h : {1.0, kPi}) {
        const Domain strip = Domain::strip(h);
        for (int i = 0; i < 100; ++i) {
            const Point x = test::random_in_strip(rng, h);
            const Point y = test::random_in_strip(rng, h);
            const double v = boundary_inf_sum(strip, x, y).value;
            CHECK(v == boundary_inf_sum(strip, y, x).value);
            CHECK(test::near(v, oracle::boundary_inf_sum(strip, x, y, 20000), 1e-8 * v));
        }
    }
}

TEST_CASE("boundary distance agrees with the piecewise oracle") {
    std::mt19937_64 rng(11);
    for (double theta : {0.4, kPi / 2, kPi, 1.3 * kPi, 1.95 * kPi}) {
        const Domain d = Domain::sector(theta);
        for (int i = 0; i < 200; ++i) {
            const Point x = test::random_in_sector(rng, theta);
            CHECK(test::near(boundary_distance(d, x), oracle::boundary_distance(d, x), 1e-12 * std::abs(x)));
        }
    }
}
