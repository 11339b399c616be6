#include "helpers.h"

#include "sector_metrics/metrics.h"
#include "sector_metrics/moebius.h"
#include "sector_metrics/normalization.h"

using namespace sector_metrics;
using test::expi;
using test::near;

namespace {

double th_h(Point x, Point y) { return std::abs(x - y) / std::abs(x - std::conj(y)); }

void check_normal_form(const MoebiusMap& g, Point x, Point y) {
    const Point gx = g(x);
    const Point gy = g(y);
    CHECK(near(std::abs(gx), 1.0, 1e-10));
    CHECK(near(std::abs(gy), 1.0, 1e-10));
    CHECK(near(gx.imag(), gy.imag(), 1e-10));
    CHECK(gx.imag() > 0.0);
}

}  // namespace

TEST_CASE("Moebius maps: extended points, composition and inverse") {
    const MoebiusMap m(1.0, 2.0, -1.0, 2.0);
    CHECK(m.apply(Point{2.0, 0.0}).is_infinite());
    CHECK(std::abs(m.apply(ExtendedPoint::infinity()).value() - Point{-1.0, 0.0}) < 1e-15);
    CHECK(test::error_code_of([&] { (void)m(Point{2.0, 0.0}); }) == ErrorCode::DegenerateInput);
    CHECK(test::error_code_of([] { (void)ExtendedPoint::infinity().value(); }) == ErrorCode::DegenerateInput);

    const Point z{0.3, 1.7};
    CHECK(std::abs(m.inverse()(m(z)) - z) < 1e-14);
    const MoebiusMap n(Point{0, 1}, 3.0, 1.0, Point{2, -1});
    CHECK(std::abs(m.compose(n)(z) - m(n(z))) < 1e-14);
    CHECK(std::abs(MoebiusMap::identity()(z) - z) == 0.0);

    CHECK(test::error_code_of([] { (void)MoebiusMap(1.0, 2.0, 2.0, 4.0); }) == ErrorCode::DegenerateInput);
    CHECK(test::error_code_of([] { (void)MoebiusMap(0.0, 0.0, 0.0, 0.0); }) == ErrorCode::DegenerateInput);
}

TEST_CASE("three-point construction") {
    const MoebiusMap m = MoebiusMap::from_three_points(-2.0, 0.0, 2.0);
    CHECK(std::abs(m(-2.0)) < 1e-15);
    CHECK(std::abs(m(0.0) - 1.0) < 1e-15);
    CHECK(m.apply(Point{2.0, 0.0}).is_infinite());
    CHECK(m.preserves_upper_half_plane());
    CHECK_FALSE(MoebiusMap(0.0, 1.0, 1.0, 0.0).preserves_upper_half_plane());
    CHECK(MoebiusMap(0.0, -1.0, 1.0, 0.0).preserves_upper_half_plane());
}

TEST_CASE("orthogonal circles") {
    const OrthoCircles a = orthogonal_circles({1, 2}, {4, 1});
    CHECK(near(a.c1, 2.0, 1e-14));
    CHECK(near(a.r1, std::sqrt(5.0), 1e-14));
    CHECK(near(a.c2, 7.0, 1e-14));
    CHECK(near(a.r2, 2.0 * std::sqrt(5.0), 1e-14));
    const OrthoCircles b = orthogonal_circles({4, 1}, {1, 2});
    CHECK(near(a.c1, b.c1, 1e-14));
    CHECK(near(a.c2, b.c2, 1e-14));

    const OrthoCircles c = orthogonal_circles({0, 1}, {1, 2});
    CHECK(near(c.c1, 2.0, 1e-14));
    CHECK(near(c.c2, -1.0, 1e-14));
    CHECK(near(c.r2, 2.0, 1e-14));
    CHECK(near(c.r1 * c.r1 + c.r2 * c.r2, (c.c1 - c.c2) * (c.c1 - c.c2), 1e-12));

    CHECK(test::error_code_of([] { (void)orthogonal_circles({0, 1}, {2, 1}); }) == ErrorCode::DegenerateConfiguration);
    CHECK(test::error_code_of([] { (void)orthogonal_circles({0, 1}, {0, 2}); }) == ErrorCode::DegenerateConfiguration);
}

TEST_CASE("half-plane normalization, horizontal case") {
    const HalfPlaneNormalization n = normalize_halfplane_detailed({1, 1}, {3, 1});
    CHECK(n.which == HalfPlaneCase::Horizontal);
    CHECK(std::abs(n.map({1, 1}) - Point{-1, 1} / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(n.map({3, 1}) - Point{1, 1} / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("half-plane normalization, vertical case") {
    const HalfPlaneNormalization n = normalize_halfplane_detailed({0, 1}, {0, 4});
    CHECK(n.which == HalfPlaneCase::Vertical);
    // (z + 2) / (2 - z).
    CHECK(std::abs(n.map({0, 1}) - Point{3, 4} / 5.0) < 1e-15);
    CHECK(std::abs(n.map({0, 4}) - Point{-3, 4} / 5.0) < 1e-15);
}

TEST_CASE("half-plane normalization, orthogonal circles case") {
    const HalfPlaneNormalization n = normalize_halfplane_detailed({1, 2}, {4, 1});
    CHECK(n.which == HalfPlaneCase::OrthogonalCircles);
    check_normal_form(n.map, {1, 2}, {4, 1});
    // Same map as the printed formula, up to the common coefficient scale.
    const MoebiusMap ref = orthogonal_circles_map_reference(orthogonal_circles({1, 2}, {4, 1}), false);
    for (Point z : {Point{0.5, 0.5}, Point{3, 7}, Point{-2, 0.1}}) CHECK(std::abs(ref(z) - n.map(z)) < 1e-13);
    CHECK(test::error_code_of([] { (void)normalize_halfplane({0, 1}, {0, 1}); }) == ErrorCode::DegenerateInput);
}

TEST_CASE("half-plane normalization postconditions on random pairs") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const Point x = test::random_upper(rng);
        const Point y = test::random_upper(rng);
        const MoebiusMap g = normalize_halfplane(x, y);
        check_normal_form(g, x, y);
        CHECK(near(th_h(x, y), th_h(g(x), g(y)), 1e-10));
        if (i % 100 == 0) {
            CHECK(g.preserves_upper_half_plane(1e-10));
            for (int j = 0; j < 10; ++j) {
                const Point z{10 * u(rng), std::abs(10 * u(rng)) + 1e-3};
                CHECK(g(z).imag() > 0.0);
                const Point t{10 * u(rng), 0.0};
                CHECK(std::abs(g.apply(t).is_infinite() ? 0.0 : g(t).imag()) < 1e-10);
            }
        }
    }
}

TEST_CASE("circle 2 bisects the hyperbolic segment") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 500; ++i) {
        const Point x = test::random_upper(rng);
        const Point y = test::random_upper(rng);
        OrthoCircles k;
        try {
            k = orthogonal_circles(x, y);
        } catch (const Error&) {
            continue;
        }
        // Intersection of the two circles in the upper half-plane; for
        // orthogonal circles it sits at c1 + r1^2 / dc, height r1 r2 / |dc|.
        const double dc = k.c2 - k.c1;
        const Point q{k.c1 + k.r1 * k.r1 / dc, k.r1 * k.r2 / std::abs(dc)};
        const Domain h = Domain::half_plane();
        CHECK(near(rho(h, x, q), rho(h, q, y), 1e-8 * std::max(1.0, rho(h, x, y))));
    }
}

TEST_CASE("sector normalization") {
    const NormalizedPair a = normalize_sector(kPi / 2, expi(kPi / 8), expi(3 * kPi / 8));
    CHECK(near(a.k(), 0.5, 1e-12));
    CHECK(std::abs(a.images()[0] - expi(kPi / 8)) < 1e-12);

    const NormalizedPair b = normalize_sector(kPi, {0, 1}, {0, 4});
    CHECK(near(std::sin(b.k() * kPi / 2), 0.6, 1e-12));
    CHECK(near(b.k(), 2.0 / kPi * std::asin(0.6), 1e-12));

    for (double r : {1e-3, 7.0, 1e3}) {
        CHECK(near(normalize_sector(kPi / 2, r * expi(kPi / 8), r * expi(3 * kPi / 8)).k(), 0.5, 1e-12));
    }
    CHECK(test::error_code_of([] { (void)normalize_sector(1.0, expi(0.5), expi(0.5)); }) ==
          ErrorCode::DegenerateInput);
}

TEST_CASE("sector normalization preserves th(rho/2) and reaches sin(k pi/2)") {
    std::mt19937_64 rng(23);
    for (double theta : {0.4, kPi / 2, kPi, 1.3 * kPi, 1.9 * kPi}) {
        const Domain d = Domain::sector(theta);
        for (int i = 0; i < 2000; ++i) {
            const Point x = test::random_in_sector(rng, theta);
            const Point y = test::random_in_sector(rng, theta);
            const NormalizedPair n = normalize_sector(theta, x, y);
            const double th = tanh_half_rho(d, x, y);
            CHECK(n.k() > 0.0);
            CHECK(n.k() < 1.0);
            CHECK(near(th, std::sin(n.k() * kPi / 2), 1e-10));
            const auto& im = n.images();
            CHECK(near(std::abs(im[0]), 1.0, 1e-12));
            CHECK(near(std::abs(im[1]), 1.0, 1e-12));
            CHECK(near(principal_arg(im[0]) + principal_arg(im[1]), theta, 1e-10));
            // Beyond th = 1 - 1e-8 the images sit within rounding of the
            // boundary and evaluating the map is no longer meaningful.
            if (th < 1.0 - 1e-8) CHECK(near(tanh_half_rho(d, n.apply(x), n.apply(y)), th, 1e-10));
        }
    }
}

TEST_CASE("strip normalization") {
    CHECK(near(normalize_strip({0, kPi / 4}, {0, 3 * kPi / 4}).k(), 0.5, 1e-12));
    CHECK(near(normalize_strip({1, kPi / 4}, {1, 3 * kPi / 4}).k(), 0.5, 1e-12));
    CHECK(near(normalize_strip({0, kPi / 2}, {1, kPi / 2}).k(), 2.0 / kPi * std::asin(std::tanh(0.5)), 1e-12));

    std::mt19937_64 rng(24);
    const Domain strip = Domain::strip(kPi);
    for (int i = 0; i < 5000; ++i) {
        const Point x = test::random_in_strip(rng, kPi);
        const Point y = test::random_in_strip(rng, kPi);
        const NormalizedPair n = normalize_strip(x, y);
        CHECK(near(tanh_half_rho(strip, x, y), std::sin(n.k() * kPi / 2), 1e-10));
        const auto& im = n.images();
        // s of the normal form is k.
        CHECK(near(s_metric(strip, im[0], im[1]), n.k(), 1e-10));
        CHECK(near(im[0].imag() + im[1].imag(), kPi, 1e-10));
        CHECK(near(n.apply(x).imag(), im[0].imag(), 1e-9));
    }
}

TEST_CASE("equal k gives equal metrics") {
    const double theta = 1.1;
    const Domain d = Domain::sector(theta);
    const NormalizedPair a = normalize_sector(theta, {0.3, 0.2}, {2.0, 1.5});
    // Scaled copy of the same pair and its normal form share k.
    const NormalizedPair b = normalize_sector(theta, a.images()[0], a.images()[1]);
    CHECK(near(a.k(), b.k(), 1e-10));
    CHECK(near(tanh_half_rho(d, {0.3, 0.2}, {2.0, 1.5}), tanh_half_rho(d, a.images()[0], a.images()[1]), 1e-10));
}
