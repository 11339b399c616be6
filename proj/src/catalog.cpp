#include "sector_metrics/catalog.h"

#include "sector_metrics/error.h"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace sector_metrics {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Ratio of |x - y| to the nearest-boundary radius in the equality-triple
// construction; s = j* = p = t / (2 - t) there.
constexpr double kTripleFraction = 0.3;

AngleRange open(double lo, double hi) { return {lo, hi, false, false}; }
AngleRange closed_lo(double lo, double hi) { return {lo, hi, true, false}; }
AngleRange closed_hi(double lo, double hi) { return {lo, hi, false, true}; }
AngleRange single(double at) { return {at, at, true, true}; }

std::function<double(double)> constant(double c) {
    return [c](double) { return c; };
}

// --- witness generators -----------------------------------------------------

// x at a point whose nearest boundary point z is known, y on [x, z].
PointPair triple_toward(Point x, Point z) { return {x, x + kTripleFraction * (z - x)}; }

PointPair sector_triple(double theta) {
    const Point x = std::polar(1.0, 0.5 * theta);
    const Point nearest = theta < kPi ? Point{x.real(), 0.0} : Point{};
    return triple_toward(x, nearest);
}

// s = sqrt2 j* and p = sqrt2 j*: a horizontal segment at height k0 with
// d(x) = d(y) = |x - y| / 2.
PointPair sector_parallel(double theta) {
    const double k0 = std::sin(std::min(0.5 * theta, 0.25 * kPi));
    return {Point{1.0, k0}, Point{1.0 + 2.0 * k0, k0}};
}

PointPair sector_quarter(double theta) {
    return {std::polar(1.0, 0.25 * theta), std::polar(1.0, 0.75 * theta)};
}

PointPair sector_symmetric(double theta, double k) {
    return {std::polar(1.0, (1.0 - k) * 0.5 * theta), std::polar(1.0, (1.0 + k) * 0.5 * theta)};
}

PointPair strip_symmetric(double k) {
    return {Point{0.0, (1.0 - k) * 0.5 * kPi}, Point{0.0, (1.0 + k) * 0.5 * kPi}};
}

WitnessFamily attained(std::string id, Side side, std::function<PointPair(double)> gen) {
    return {std::move(id), side, WitnessKind::Attained,
            [gen = std::move(gen)](double theta, double) { return gen(theta); }};
}

WitnessFamily fixed_pair(std::string id, Side side, Point x, Point y) {
    return {std::move(id), side, WitnessKind::Attained, [x, y](double, double) { return PointPair{x, y}; }};
}

WitnessFamily triple(Side side, const Domain& d) {
    switch (d.kind()) {
        case DomainKind::Strip:
            return fixed_pair("equality-triple", side, Point{0.0, 0.5 * d.height()},
                              Point{0.0, 0.5 * d.height() * (1.0 - kTripleFraction)});
        case DomainKind::HalfPlane:
            return fixed_pair("equality-triple", side, Point{0.0, 1.0}, Point{0.0, 1.0 - kTripleFraction});
        case DomainKind::PuncturedPlane:
            return fixed_pair("equality-triple", side, Point{1.0, 0.0}, Point{1.0 - kTripleFraction, 0.0});
        case DomainKind::UnitDisk:
            return fixed_pair("equality-triple", side, Point{}, Point{kTripleFraction, 0.0});
        case DomainKind::Sector: break;
    }
    return attained("equality-triple", side, sector_triple);
}

WitnessFamily sector_triple_witness(Side side) { return attained("equality-triple", side, sector_triple); }

WitnessFamily horizontal_pair(Side side) {
    return fixed_pair("horizontal-pair", side, Point{1.0, 1.0}, Point{3.0, 1.0});
}

WitnessFamily antipodal(Side side) {
    return fixed_pair("antipodal-pair", side, Point{-1.0, 0.0}, Point{1.0, 0.0});
}

WitnessFamily strip_vertical(Side side) {
    return fixed_pair("vertical-quarter-pair", side, Point{0.0, 0.25 * kPi}, Point{0.0, 0.75 * kPi});
}

WitnessFamily symmetric_sector(Side side, WitnessKind kind) {
    return {"symmetric-pair", side, kind, sector_symmetric};
}

WitnessFamily symmetric_strip(Side side, WitnessKind kind) {
    return {"symmetric-pair", side, kind, [](double, double k) { return strip_symmetric(k); }};
}

// --- constants ----------------------------------------------------------------

double two_sin_quarter(double t) { return 2.0 * std::sin(0.25 * t); }
double sqrt2_sin_quarter(double t) { return kSqrt2 * std::sin(0.25 * t); }
double inv_sqrt2_cos_quarter(double t) { return 1.0 / (kSqrt2 * std::cos(0.25 * t)); }
double pi_over_theta_sin_half(double t) { return kPi / t * std::sin(0.5 * t); }
double pi_over_theta(double t) { return kPi / t; }

using MK = MetricKind;

std::vector<InequalityRecord> build_catalog() {
    const DomainFamily strip = DomainFamily::fixed(Domain::strip(kPi));
    const DomainFamily half = DomainFamily::fixed(Domain::half_plane());
    const DomainFamily punctured = DomainFamily::fixed(Domain::punctured_plane());
    const DomainFamily disk = DomainFamily::fixed(Domain::unit_disk());
    const DomainFamily all_sectors = DomainFamily::sectors(open(0.0, 2.0 * kPi));
    const DomainFamily convex_sectors = DomainFamily::sectors(closed_hi(0.0, kPi));
    const DomainFamily acute = DomainFamily::sectors(open(0.0, kPi));
    const DomainFamily reflex = DomainFamily::sectors(open(kPi, 2.0 * kPi));
    const DomainFamily straight_or_reflex = DomainFamily::sectors(closed_lo(kPi, 2.0 * kPi));
    const DomainFamily straight = DomainFamily::sectors(single(kPi));

    const auto one = constant(1.0);
    const auto sqrt2 = constant(kSqrt2);
    const auto inv_sqrt2 = constant(1.0 / kSqrt2);

    std::vector<InequalityRecord> out;
    const auto add = [&out](std::string id, std::string statement, DomainFamily family, MK num, MK den,
                            std::function<double(double)> lo, std::function<double(double)> hi,
                            std::vector<WitnessFamily> witnesses) {
        out.push_back({std::move(id), std::move(statement), family, num, den, std::move(lo), std::move(hi),
                       std::move(witnesses)});
    };

    // j* <= p <= sqrt2 j* in every proper subdomain.
    const std::string r1 = "j* <= p <= sqrt2 j*";
    add("R1", r1, all_sectors, MK::PointPair, MK::JStar, one, sqrt2,
        {sector_triple_witness(Side::Lower), attained("parallel-segment", Side::Upper, sector_parallel)});
    add("R1-strip", r1, strip, MK::PointPair, MK::JStar, one, sqrt2,
        {triple(Side::Lower, Domain::strip(kPi)), horizontal_pair(Side::Upper)});
    add("R1-halfplane", r1, half, MK::PointPair, MK::JStar, one, sqrt2,
        {triple(Side::Lower, Domain::half_plane()), horizontal_pair(Side::Upper)});
    add("R1-punctured", r1, punctured, MK::PointPair, MK::JStar, one, sqrt2,
        {triple(Side::Lower, Domain::punctured_plane()), antipodal(Side::Upper)});

    // j* <= s <= 2 j* in every proper subdomain.
    const std::string r2 = "j* <= s <= 2 j*";
    const auto two = constant(2.0);
    add("R2", r2, all_sectors, MK::TriangularRatio, MK::JStar, one, two, {sector_triple_witness(Side::Lower)});
    add("R2-strip", r2, strip, MK::TriangularRatio, MK::JStar, one, two,
        {triple(Side::Lower, Domain::strip(kPi))});
    add("R2-halfplane", r2, half, MK::TriangularRatio, MK::JStar, one, two,
        {triple(Side::Lower, Domain::half_plane())});
    add("R2-punctured", r2, punctured, MK::TriangularRatio, MK::JStar, one, two,
        {triple(Side::Lower, Domain::punctured_plane()), antipodal(Side::Upper)});

    // Convex domains: j* <= s <= sqrt2 j*.
    const std::string r3 = "convex: j* <= s <= sqrt2 j*";
    add("R3", r3, convex_sectors, MK::TriangularRatio, MK::JStar, one, sqrt2,
        {sector_triple_witness(Side::Lower), attained("parallel-segment", Side::Upper, sector_parallel)});
    add("R3-strip", r3, strip, MK::TriangularRatio, MK::JStar, one, sqrt2,
        {triple(Side::Lower, Domain::strip(kPi)), horizontal_pair(Side::Upper)});
    add("R3-halfplane", r3, half, MK::TriangularRatio, MK::JStar, one, sqrt2,
        {triple(Side::Lower, Domain::half_plane()), horizontal_pair(Side::Upper)});
    add("R3-disk", r3, disk, MK::TriangularRatio, MK::JStar, one, sqrt2,
        {triple(Side::Lower, Domain::unit_disk())});

    add("R4", "s <= 2 sin(theta/4) j*, theta in (pi, 2pi)", reflex, MK::TriangularRatio, MK::JStar, one,
        two_sin_quarter,
        {sector_triple_witness(Side::Lower), attained("quarter-pair", Side::Upper, sector_quarter)});

    // p / sqrt2 <= s <= sqrt2 p in every proper subdomain.
    const std::string r5 = "p/sqrt2 <= s <= sqrt2 p";
    add("R5", r5, all_sectors, MK::TriangularRatio, MK::PointPair, inv_sqrt2, sqrt2, {});
    add("R5-strip", r5, strip, MK::TriangularRatio, MK::PointPair, inv_sqrt2, sqrt2,
        {strip_vertical(Side::Lower)});
    add("R5-halfplane", r5, half, MK::TriangularRatio, MK::PointPair, inv_sqrt2, sqrt2, {});
    add("R5-punctured", r5, punctured, MK::TriangularRatio, MK::PointPair, inv_sqrt2, sqrt2,
        {antipodal(Side::Upper)});

    // Convex domains satisfy s <= p; the lower side is the general p/sqrt2.
    const std::string r6 = "convex: s <= p";
    add("R6", r6, convex_sectors, MK::TriangularRatio, MK::PointPair, inv_sqrt2, one,
        {sector_triple_witness(Side::Upper)});
    add("R6-strip", r6, strip, MK::TriangularRatio, MK::PointPair, inv_sqrt2, one,
        {strip_vertical(Side::Lower), triple(Side::Upper, Domain::strip(kPi))});
    add("R6-halfplane", r6, half, MK::TriangularRatio, MK::PointPair, inv_sqrt2, one,
        {triple(Side::Upper, Domain::half_plane())});
    add("R6-disk", r6, disk, MK::TriangularRatio, MK::PointPair, inv_sqrt2, one,
        {triple(Side::Upper, Domain::unit_disk())});

    add("R7", "p / (sqrt2 cos(theta/4)) <= s, theta in (0, pi)", acute, MK::TriangularRatio, MK::PointPair,
        inv_sqrt2_cos_quarter, one,
        {attained("quarter-pair", Side::Lower, sector_quarter), sector_triple_witness(Side::Upper)});
    add("R8", "p <= s, theta in [pi, 2pi)", straight_or_reflex, MK::TriangularRatio, MK::PointPair, one,
        sqrt2_sin_quarter, {sector_triple_witness(Side::Lower)});
    add("R9", "s <= sqrt2 sin(theta/4) p, theta in (pi, 2pi)", reflex, MK::TriangularRatio, MK::PointPair,
        one, sqrt2_sin_quarter,
        {sector_triple_witness(Side::Lower), attained("quarter-pair", Side::Upper, sector_quarter)});

    // Sector bounds stated together, parts 1 to 5.
    add("R10.1", "j* <= p <= sqrt2 j*, theta in (0, 2pi)", all_sectors, MK::PointPair, MK::JStar, one, sqrt2,
        {sector_triple_witness(Side::Lower), attained("parallel-segment", Side::Upper, sector_parallel)});
    add("R10.2", "j* <= s <= sqrt2 j*, theta in (0, pi]", convex_sectors, MK::TriangularRatio, MK::JStar, one,
        sqrt2, {sector_triple_witness(Side::Lower), attained("parallel-segment", Side::Upper, sector_parallel)});
    add("R10.3", "j* <= s <= 2 sin(theta/4) j*, theta in (pi, 2pi)", reflex, MK::TriangularRatio, MK::JStar,
        one, two_sin_quarter,
        {sector_triple_witness(Side::Lower), attained("quarter-pair", Side::Upper, sector_quarter)});
    add("R10.4", "p / (sqrt2 cos(theta/4)) <= s <= p, theta in (0, pi]", convex_sectors, MK::TriangularRatio,
        MK::PointPair, inv_sqrt2_cos_quarter, one,
        {attained("quarter-pair", Side::Lower, sector_quarter), sector_triple_witness(Side::Upper)});
    add("R10.5", "p <= s <= sqrt2 sin(theta/4) p, theta in (pi, 2pi)", reflex, MK::TriangularRatio,
        MK::PointPair, one, sqrt2_sin_quarter,
        {sector_triple_witness(Side::Lower), attained("quarter-pair", Side::Upper, sector_quarter)});

    // Strip 0 < Im z < pi, items (1)-(3).
    add("R11.1", "strip: j* <= p <= sqrt2 j*", strip, MK::PointPair, MK::JStar, one, sqrt2,
        {triple(Side::Lower, Domain::strip(kPi)), horizontal_pair(Side::Upper)});
    add("R11.2", "strip: j* <= s <= sqrt2 j*", strip, MK::TriangularRatio, MK::JStar, one, sqrt2,
        {strip_vertical(Side::Lower), horizontal_pair(Side::Upper)});
    add("R11.3", "strip: p/sqrt2 <= s <= p", strip, MK::TriangularRatio, MK::PointPair, inv_sqrt2, one,
        {strip_vertical(Side::Lower), horizontal_pair(Side::Upper)});

    // Hyperbolic metric against s.
    add("R12", "s <= th(rho/2) <= (pi/theta) sin(theta/2) s, theta in (0, pi)", acute, MK::TanhHalfRho,
        MK::TriangularRatio, one, pi_over_theta_sin_half,
        {symmetric_sector(Side::Lower, WitnessKind::LimitOne), symmetric_sector(Side::Upper, WitnessKind::LimitZero)});
    add("R13", "(pi/theta) s <= th(rho/2) <= s, theta in (pi, 2pi)", reflex, MK::TanhHalfRho,
        MK::TriangularRatio, pi_over_theta, one,
        {symmetric_sector(Side::Lower, WitnessKind::LimitZero), symmetric_sector(Side::Upper, WitnessKind::LimitOne)});
    add("R14", "s = th(rho/2), theta = pi", straight, MK::TanhHalfRho, MK::TriangularRatio, one, one,
        {symmetric_sector(Side::Lower, WitnessKind::Attained), symmetric_sector(Side::Upper, WitnessKind::Attained)});

    // Hyperbolic metric against j*.
    add("R15.1", "j* <= th(rho/2) <= sqrt2 (pi/theta) sin(theta/2) j*, theta in (0, pi)", acute,
        MK::TanhHalfRho, MK::JStar, one, [](double t) { return kSqrt2 * pi_over_theta_sin_half(t); }, {});
    add("R15.2", "j* <= th(rho/2) <= sqrt2 j*, theta = pi", straight, MK::TanhHalfRho, MK::JStar, one, sqrt2,
        {sector_triple_witness(Side::Lower), attained("parallel-segment", Side::Upper, sector_parallel)});
    add("R15.3", "(pi/theta) j* <= th(rho/2) <= 2 sin(theta/4) j*, theta in (pi, 2pi)", reflex,
        MK::TanhHalfRho, MK::JStar, pi_over_theta, two_sin_quarter, {});

    // Hyperbolic metric against p.
    add("R16.1", "p / (sqrt2 cos(theta/4)) <= th(rho/2) <= (pi/theta) sin(theta/2) p, theta in (0, pi)",
        acute, MK::TanhHalfRho, MK::PointPair, inv_sqrt2_cos_quarter, pi_over_theta_sin_half, {});
    add("R16.2", "p = th(rho/2), theta = pi", straight, MK::TanhHalfRho, MK::PointPair, one, one,
        {symmetric_sector(Side::Lower, WitnessKind::Attained), symmetric_sector(Side::Upper, WitnessKind::Attained)});
    add("R16.3", "(pi/theta) p <= th(rho/2) <= sqrt2 sin(theta/4) p, theta in (pi, 2pi)", reflex,
        MK::TanhHalfRho, MK::PointPair, pi_over_theta, sqrt2_sin_quarter, {});

    // Strip 0 < Im z < pi.
    add("R17.1", "strip: s <= th(rho/2) <= (pi/2) s", strip, MK::TanhHalfRho, MK::TriangularRatio, one,
        constant(0.5 * kPi),
        {symmetric_strip(Side::Lower, WitnessKind::LimitOne), symmetric_strip(Side::Upper, WitnessKind::LimitZero)});
    add("R17.2", "strip: j* <= th(rho/2) <= (pi/sqrt2) j*", strip, MK::TanhHalfRho, MK::JStar, one,
        constant(kPi / kSqrt2), {});
    add("R17.3", "strip: p/sqrt2 <= th(rho/2) <= (pi/2) p", strip, MK::TanhHalfRho, MK::PointPair, inv_sqrt2,
        constant(0.5 * kPi), {});

    return out;
}

}  // namespace

std::string_view to_string(Side side) { return side == Side::Lower ? "lower" : "upper"; }

bool AngleRange::contains(double theta) const noexcept {
    const bool above = lo_closed ? theta >= lo : theta > lo;
    const bool below = hi_closed ? theta <= hi : theta < hi;
    return above && below;
}

DomainFamily DomainFamily::sectors(AngleRange range) {
    return {true, range, Domain::half_plane()};
}

DomainFamily DomainFamily::fixed(Domain domain) { return {false, {}, domain}; }

bool DomainFamily::admits(double theta) const noexcept { return !sector_family_ || range_.contains(theta); }

Domain DomainFamily::at(double theta) const {
    if (!sector_family_) return fixed_;
    if (!range_.contains(theta)) {
        throw Error(ErrorCode::InvalidTheta,
                    fmt::format("theta = {} outside {}{}, {}{}", theta, range_.lo_closed ? '[' : '(', range_.lo,
                                range_.hi, range_.hi_closed ? ']' : ')'));
    }
    return Domain::sector(theta);
}

std::string DomainFamily::describe() const {
    if (!sector_family_) return fixed_.describe();
    return fmt::format("sector theta in {}{:.6g}, {:.6g}{}", range_.lo_closed ? '[' : '(', range_.lo, range_.hi,
                       range_.hi_closed ? ']' : ')');
}

const WitnessFamily* InequalityRecord::witness(Side side) const noexcept {
    const auto it = std::find_if(witnesses.begin(), witnesses.end(),
                                 [side](const WitnessFamily& w) { return w.side == side; });
    return it == witnesses.end() ? nullptr : &*it;
}

double InequalityRecord::constant(Side side, double theta) const {
    return side == Side::Lower ? lower_const(theta) : upper_const(theta);
}

double InequalityRecord::quotient(const Domain& domain, Point x, Point y) const {
    const double num = evaluate(numerator, domain, x, y);
    const double den = evaluate(denominator, domain, x, y);
    if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return num / den;
}

const std::vector<InequalityRecord>& catalog() {
    static const std::vector<InequalityRecord> records = build_catalog();
    return records;
}

const InequalityRecord& find_record(std::string_view id) {
    for (const auto& r : catalog()) {
        if (r.id == id) return r;
    }
    throw Error(ErrorCode::OutOfRange, fmt::format("no inequality record with id '{}'", id));
}

std::vector<double> default_theta_grid() {
    return {kPi / 6.0,       kPi / 3.0,       kPi / 2.0,       2.0 * kPi / 3.0, kPi,
            9.0 * kPi / 8.0, 5.0 * kPi / 4.0, 3.0 * kPi / 2.0, 7.0 * kPi / 4.0, 15.0 * kPi / 8.0};
}

}  // namespace sector_metrics
