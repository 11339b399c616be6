#include "sector_metrics/moebius.h"

#include "sector_metrics/error.h"

#include <algorithm>
#include <array>
#include <cmath>

namespace sector_metrics {

Point ExtendedPoint::value() const {
    if (infinite_) throw Error(ErrorCode::DegenerateInput, "the point at infinity has no finite value");
    return value_;
}

MoebiusMap::MoebiusMap(Point a, Point b, Point c, Point d) {
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw Error(ErrorCode::DegenerateInput, "Moebius coefficients must be finite and not all zero");
    }
    a_ = a / scale;
    b_ = b / scale;
    c_ = c / scale;
    d_ = d / scale;
    if (std::abs(determinant()) <= 1e-14) {
        throw Error(ErrorCode::DegenerateInput, "Moebius map is singular (ad - bc = 0)");
    }
}

MoebiusMap MoebiusMap::identity() { return {1.0, 0.0, 0.0, 1.0}; }

MoebiusMap MoebiusMap::from_three_points(Point z1, Point z2, Point z3) {
    // Cross ratio: (z - z1)(z2 - z3) / ((z - z3)(z2 - z1)).
    const Point u = z2 - z3;
    const Point v = z2 - z1;
    return {u, -z1 * u, v, -z3 * v};
}

ExtendedPoint MoebiusMap::apply(ExtendedPoint z) const {
    if (z.is_infinite()) {
        if (c_ == Point{}) return ExtendedPoint::infinity();
        return a_ / c_;
    }
    const Point w = z.value();
    const Point den = c_ * w + d_;
    if (den == Point{}) return ExtendedPoint::infinity();
    return (a_ * w + b_) / den;
}

Point MoebiusMap::operator()(Point z) const { return apply(z).value(); }

MoebiusMap MoebiusMap::compose(const MoebiusMap& o) const {
    return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
}

MoebiusMap MoebiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

bool MoebiusMap::preserves_upper_half_plane(double tol) const {
    // Remove the common phase using the largest coefficient.
    const std::array<Point, 4> coeffs{a_, b_, c_, d_};
    const Point lead = *std::max_element(coeffs.begin(), coeffs.end(),
                                         [](Point l, Point r) { return std::abs(l) < std::abs(r); });
    const Point phase = std::conj(lead) / std::abs(lead);
    for (Point q : coeffs) {
        if (std::abs((q * phase).imag()) > tol) return false;
    }
    return (determinant() * phase * phase).real() > 0.0;
}

}  // namespace sector_metrics
