#pragma once

#include "sector_metrics/geometry.h"

namespace sector_metrics {

/// A point of the extended complex plane.
class ExtendedPoint {
public:
    ExtendedPoint(Point z) : value_(z), infinite_(false) {}  // NOLINT(google-explicit-constructor)
    static ExtendedPoint infinity() { return ExtendedPoint(); }

    [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }
    /// Finite value; throws Error(DegenerateInput) for the point at infinity.
    [[nodiscard]] Point value() const;

private:
    ExtendedPoint() : infinite_(true) {}

    Point value_{};
    bool infinite_;
};

/// z -> (a z + b) / (c z + d) with ad - bc != 0.
///
/// Coefficients are rescaled so the largest one has modulus 1.
class MoebiusMap {
public:
    MoebiusMap(Point a, Point b, Point c, Point d);

    static MoebiusMap identity();
    /// The unique map sending z1, z2, z3 to 0, 1, infinity.
    static MoebiusMap from_three_points(Point z1, Point z2, Point z3);

    [[nodiscard]] Point a() const noexcept { return a_; }
    [[nodiscard]] Point b() const noexcept { return b_; }
    [[nodiscard]] Point c() const noexcept { return c_; }
    [[nodiscard]] Point d() const noexcept { return d_; }
    [[nodiscard]] Point determinant() const noexcept { return a_ * d_ - b_ * c_; }

    [[nodiscard]] ExtendedPoint apply(ExtendedPoint z) const;
    /// Finite image; throws Error(DegenerateInput) when z is the pole -d/c.
    [[nodiscard]] Point operator()(Point z) const;

    /// (*this)(other(z)).
    [[nodiscard]] MoebiusMap compose(const MoebiusMap& other) const;
    [[nodiscard]] MoebiusMap inverse() const;

    /// True when the map sends the upper half-plane onto itself: real
    /// coefficients (up to a common phase) with positive determinant.
    [[nodiscard]] bool preserves_upper_half_plane(double tol = 1e-12) const;

private:
    Point a_, b_, c_, d_;
};

}  // namespace sector_metrics
