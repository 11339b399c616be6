#include "sector_metrics/normalization.h"

#include "sector_metrics/error.h"
#include "sector_metrics/metrics.h"

#include <algorithm>
#include <cmath>

namespace sector_metrics {

namespace {

constexpr double kDispatchEps = 1e-12;
constexpr double kClampK = 1e-15;
constexpr double kOrientationFloor = 1e-6;

void require_upper_half_plane(Point z) {
    if (!(z.imag() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::PointNotInDomain, "normalization needs points of the open upper half-plane");
    }
}

// w -> -1/w swaps the two unit-circle images across the imaginary axis.
const MoebiusMap& swap_map() {
    static const MoebiusMap m(0.0, -1.0, 1.0, 0.0);
    return m;
}

// Maps the geodesic through x and y onto the imaginary axis, rescales so
// the images are i/s and i s, and finishes with the vertical case. The small
// endpoint comes from the product of the endpoints, since c1 - r1 cancels
// badly when circle 1 is huge. Assembled as one coefficient set because the
// intermediate maps can be far more ill-conditioned than the result.
MoebiusMap stable_normalization(Point x, Point y) {
    const Point d = x - y;
    const Point mid = 0.5 * (x + y);
    const double c = mid.real() + mid.imag() * d.imag() / d.real();
    const Point small_pt = std::abs(x) < std::abs(y) ? x : y;
    const double r = std::abs(x - c);
    const double big = c >= 0.0 ? c + r : c - r;
    const double small = (2.0 * c * small_pt.real() - std::norm(small_pt)) / big;
    const double lo = std::min(big, small);
    const double hi = std::max(big, small);
    // T(z) = (z - lo) / (hi - z) sends the geodesic to the positive imaginary axis.
    const double sx = std::abs(x - lo) / std::abs(hi - x);
    const double sy = std::abs(y - lo) / std::abs(hi - y);
    const double sigma = std::sqrt(sx * sy);
    // (z + 1) / (1 - z) after z -> T(z) / sigma.
    return {1.0 - sigma, -lo + sigma * hi, -1.0 - sigma, lo + sigma * hi};
}

double clamp_k(double k) { return std::clamp(k, kClampK, 1.0 - kClampK); }

// Images e^{i phi} and -e^{-i phi} with phi = (1 - k) pi / 2. Far-apart pairs
// land next to +-1, where Im may round to zero or change sign.
double k_from_images(Point gx, Point gy) {
    const double phi_x = std::atan2(std::max(gx.imag(), 0.0), gx.real());
    const double phi_y = std::atan2(std::max(gy.imag(), 0.0), -gy.real());
    return clamp_k(1.0 - (phi_x + phi_y) / kPi);
}

// Orders the pair so that g(x) is the image with positive real part.
MoebiusMap orient(MoebiusMap g, Point hx) {
    if (g(hx).real() < 0.0) g = swap_map().compose(g);
    return g;
}

}  // namespace

OrthoCircles orthogonal_circles(Point x, Point y) {
    require_upper_half_plane(x);
    require_upper_half_plane(y);
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    const Point d = x - y;
    if (std::abs(d.imag()) < kDispatchEps * scale || std::abs(d.real()) < kDispatchEps * scale) {
        throw Error(ErrorCode::DegenerateConfiguration,
                    "L(x, y) is horizontal or vertical; no orthogonal circle pair");
    }
    const Point mid = 0.5 * (x + y);
    OrthoCircles out;
    // Perpendicular bisector of [x, y] meets the real axis at c1.
    out.c1 = mid.real() + mid.imag() * d.imag() / d.real();
    out.r1 = std::abs(x - out.c1);
    // L(x, y) meets the real axis at c2.
    out.c2 = x.real() - x.imag() * d.real() / d.imag();
    // r2^2 = (c1 - c2)^2 - r1^2 is the power of c2 with respect to circle 1,
    // which equals |c2 - x| |c2 - y| because x, y and c2 are collinear. The
    // product avoids the cancellation in the difference of squares.
    out.r2 = std::sqrt(std::abs(out.c2 - x) * std::abs(out.c2 - y));
    return out;
}

MoebiusMap orthogonal_circles_map_reference(const OrthoCircles& k, bool flip_r2) {
    const double r2 = flip_r2 ? -k.r2 : k.r2;
    return {k.r1, k.r1 * (r2 - k.c2), k.c1 + r2 - k.c2,
            k.r1 * k.r1 + k.c1 * k.c2 - k.c1 * k.c1 - k.c1 * r2};
}

HalfPlaneNormalization normalize_halfplane_detailed(Point x, Point y) {
    require_upper_half_plane(x);
    require_upper_half_plane(y);
    if (x == y) throw Error(ErrorCode::DegenerateInput, "cannot normalize a coincident pair");
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});

    if (std::abs(x.imag() - y.imag()) < kDispatchEps * scale) {
        const double a = 0.5 * (x.real() + y.real());
        const double r = std::abs(x - a);
        return {MoebiusMap(1.0, -a, 0.0, r), HalfPlaneCase::Horizontal};
    }
    if (std::abs(x.real() - y.real()) < kDispatchEps * scale) {
        const double a = 0.5 * (x.real() + y.real());
        const double r = std::sqrt(x.imag() * y.imag());
        return {MoebiusMap::from_three_points(a - r, a, a + r), HalfPlaneCase::Vertical};
    }

    // The circle formula loses accuracy when circle 1 is huge (nearly vertical
    // pairs). The normalizing map is unique up to swapping the two images, so
    // build it from well-conditioned steps and keep the formula's orientation.
    MoebiusMap g = stable_normalization(x, y);
    HalfPlaneCase which = HalfPlaneCase::OrthogonalCircles;
    try {
        const OrthoCircles k = orthogonal_circles(x, y);
        const bool plain = k.c1 - k.r1 < k.c2 - k.r2 && k.c2 - k.r2 < k.c1 + k.r1;
        const bool flipped = k.c1 - k.r1 < k.c2 + k.r2 && k.c2 + k.r2 < k.c1 + k.r1;
        if (plain || flipped) {
            which = plain ? HalfPlaneCase::OrthogonalCircles : HalfPlaneCase::OrthogonalCirclesFlipped;
            const double r2 = plain ? k.r2 : -k.r2;
            // e = c1 + r2 - c2. When the two terms nearly cancel use
            // (D + r2)(r2 - D) = -r1^2 with D = c1 - c2.
            const double gap = k.c1 - k.c2;
            const double e = (gap * r2 < 0.0) ? -k.r1 * k.r1 / (r2 - gap) : gap + r2;
            const MoebiusMap formula(k.r1, k.r1 * (e - k.c1), e, k.r1 * k.r1 - k.c1 * e);
            const double re = formula(x).real();
            if (std::abs(re) > kOrientationFloor && (re > 0.0) != (g(x).real() > 0.0)) g = swap_map().compose(g);
        }
    } catch (const Error&) {
        // Too close to horizontal or vertical for the circles; g stands.
    }
    return {g, which};
}

MoebiusMap normalize_halfplane(Point x, Point y) { return normalize_halfplane_detailed(x, y).map; }

NormalizedPair::NormalizedPair(Conjugation conj, double theta, MoebiusMap inner, double k,
                               std::array<Point, 2> images, double pre_shift)
    : conj_(conj), theta_(theta), inner_(inner), k_(k), images_(images), pre_shift_(pre_shift) {}

Point NormalizedPair::apply(Point z) const {
    if (conj_ == Conjugation::PowerMap) {
        return halfplane_to_sector(theta_, inner_(sector_to_halfplane(theta_, z * std::exp(-pre_shift_))));
    }
    const Point w = inner_(std::exp(z - pre_shift_));
    return {std::log(std::abs(w)), principal_arg(w)};
}

NormalizedPair normalize_sector(double theta, Point x, Point y) {
    const Domain sector = Domain::sector(theta);
    require_interior(sector, x);
    require_interior(sector, y);
    if (x == y) throw Error(ErrorCode::DegenerateInput, "cannot normalize a coincident pair");

    // Rescale so |x| |y| = 1; otherwise z^(pi/theta) can push the pair far
    // enough out that the inner map fails the determinant check.
    const double shift = 0.5 * (std::log(std::abs(x)) + std::log(std::abs(y)));
    const Point hx = sector_to_halfplane(theta, x * std::exp(-shift));
    const Point hy = sector_to_halfplane(theta, y * std::exp(-shift));
    const MoebiusMap g = orient(normalize_halfplane(hx, hy), hx);
    const Point gx = g(hx);
    const Point gy = g(hy);
    const double k = k_from_images(gx, gy);
    return {NormalizedPair::Conjugation::PowerMap, theta, g, k,
            {std::polar(1.0, (1.0 - k) * 0.5 * theta), std::polar(1.0, (1.0 + k) * 0.5 * theta)}, shift};
}

NormalizedPair normalize_strip(Point x, Point y) {
    const Domain strip = Domain::strip(kPi);
    require_interior(strip, x);
    require_interior(strip, y);
    if (x == y) throw Error(ErrorCode::DegenerateInput, "cannot normalize a coincident pair");

    // Translate the midpoint to Re z = 0 before exponentiating.
    const double shift = 0.5 * (x.real() + y.real());
    const Point hx = std::exp(x - shift);
    const Point hy = std::exp(y - shift);
    const MoebiusMap g = orient(normalize_halfplane(hx, hy), hx);
    const Point gx = g(hx);
    const Point gy = g(hy);
    const double k = k_from_images(gx, gy);
    return {NormalizedPair::Conjugation::Exponential, kPi, g, k,
            {Point{0.0, (1.0 - k) * 0.5 * kPi}, Point{0.0, (1.0 + k) * 0.5 * kPi}}, shift};
}

}  // namespace sector_metrics
