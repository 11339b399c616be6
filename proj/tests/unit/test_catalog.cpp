#include "helpers.h"

#include "sector_metrics/catalog.h"

#include <set>

using namespace sector_metrics;
using test::near;

TEST_CASE("catalog layout") {
    const auto& all = catalog();
    CHECK(all.size() >= 17);
    std::set<std::string> ids;
    for (const auto& r : all) CHECK(ids.insert(r.id).second);
    for (int n = 1; n <= 17; ++n) {
        const std::string base = "R" + std::to_string(n);
        CHECK(std::any_of(ids.begin(), ids.end(), [&](const std::string& id) {
            return id == base || id.rfind(base + ".", 0) == 0 || id.rfind(base + "-", 0) == 0;
        }));
    }
    CHECK(test::error_code_of([] { (void)find_record("R99"); }) == ErrorCode::OutOfRange);
    CHECK(find_record("R12").id == "R12");
    CHECK(default_theta_grid().size() == 10);
}

TEST_CASE("constants are ordered on every admissible angle") {
    for (const auto& r : catalog()) {
        if (!r.family.is_sector_family()) {
            CHECK(r.constant(Side::Lower, 0.0) <= r.constant(Side::Upper, 0.0));
            continue;
        }
        for (int i = 1; i < 400; ++i) {
            const double theta = 2.0 * kPi * i / 400.0;
            if (!r.family.admits(theta)) continue;
            CHECK(r.constant(Side::Lower, theta) <= r.constant(Side::Upper, theta) + 1e-15);
        }
    }
}

TEST_CASE("angle ranges") {
    CHECK(find_record("R14").family.admits(kPi));
    CHECK_FALSE(find_record("R14").family.admits(3.0));
    CHECK_FALSE(find_record("R12").family.admits(kPi));
    CHECK(find_record("R8").family.admits(kPi));
    CHECK_FALSE(find_record("R4").family.admits(kPi));
    CHECK(test::error_code_of([] { (void)find_record("R13").family.at(1.0); }) == ErrorCode::InvalidTheta);
    CHECK(find_record("R11.1").family.at(123.0).kind() == DomainKind::Strip);
}

TEST_CASE("constant values") {
    CHECK(near(find_record("R4").constant(Side::Upper, 1.5 * kPi), 2.0 * std::sin(3.0 * kPi / 8.0), 1e-15));
    CHECK(near(find_record("R7").constant(Side::Lower, 0.5 * kPi), 1.0 / (std::sqrt(2.0) * std::cos(kPi / 8.0)),
               1e-15));
    CHECK(near(find_record("R12").constant(Side::Upper, 0.5 * kPi), 2.0 * std::sin(kPi / 4.0), 1e-15));
    CHECK(near(find_record("R13").constant(Side::Lower, 1.5 * kPi), 2.0 / 3.0, 1e-15));
    CHECK(near(find_record("R17.1").constant(Side::Upper, 0.0), 0.5 * kPi, 1e-15));
    // Small angles push (pi/theta) sin(theta/2) toward pi/2.
    CHECK(std::abs(find_record("R12").constant(Side::Upper, 1e-3) - 0.5 * kPi) < 1e-6);
}

TEST_CASE("equality triple gives s = j* = p = 0.3 / 1.7") {
    const double t = 0.3 / 1.7;
    for (double theta : {kPi / 3, kPi / 2, kPi}) {
        const Domain d = Domain::sector(theta);
        const auto* w = find_record("R10.2").witness(Side::Lower);
        REQUIRE(w != nullptr);
        const PointPair p = w->generator(theta, 0.5);
        CHECK(near(s_metric(d, p[0], p[1]), t, 1e-14));
        CHECK(near(jstar_metric(d, p[0], p[1]), t, 1e-14));
        CHECK(near(point_pair(d, p[0], p[1]), t, 1e-14));
    }
}

TEST_CASE("parallel segment attains sqrt2 for p/j*") {
    const auto& r = find_record("R10.1");
    for (double theta : {kPi / 3, kPi / 2, kPi}) {
        const auto* w = r.witness(Side::Upper);
        REQUIRE(w != nullptr);
        const PointPair p = w->generator(theta, 0.5);
        CHECK(near(r.quotient(Domain::sector(theta), p[0], p[1]), std::sqrt(2.0), 1e-12));
    }
}

TEST_CASE("quotient of a coincident pair is NaN") {
    CHECK(std::isnan(find_record("R5-halfplane").quotient(Domain::half_plane(), {0, 1}, {0, 1})));
}
