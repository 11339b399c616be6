#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace sector_metrics {

/// Plane coordinates. Stored points are always finite; the point at infinity
/// only appears as an ExtendedPoint produced by MoebiusMap.
using Point = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Absolute predicate tolerance, applied after scaling by max(1, |x|, |y|).
inline constexpr double kGeometryEps = 1e-12;

enum class DomainKind { HalfPlane, UnitDisk, Sector, Strip, PuncturedPlane };

std::string_view to_string(DomainKind kind);

/// One of the planar domains the library can evaluate metrics on.
///
/// Sector(theta) is {0 < arg z < theta} with the principal argument taken in
/// [0, 2*pi); Strip(h) is {0 < Im z < h}. Construction validates parameters.
class Domain {
public:
    static Domain half_plane();
    static Domain unit_disk();
    static Domain sector(double angle);
    static Domain strip(double height);
    static Domain punctured_plane();

    [[nodiscard]] DomainKind kind() const noexcept { return kind_; }
    /// Opening angle for sectors; pi for the half-plane, 0 otherwise.
    [[nodiscard]] double angle() const noexcept { return param_; }
    [[nodiscard]] double height() const noexcept { return param_; }

    /// Strict interior test; boundary points and non-finite values are rejected.
    [[nodiscard]] bool contains(Point z) const noexcept;

    [[nodiscard]] bool is_convex() const noexcept;
    [[nodiscard]] bool is_scale_invariant() const noexcept;

    [[nodiscard]] std::string describe() const;

    friend bool operator==(const Domain&, const Domain&) = default;

private:
    Domain(DomainKind kind, double param) : kind_(kind), param_(param) {}

    DomainKind kind_;
    double param_;
};

/// Principal argument in [0, 2*pi).
double principal_arg(Point z) noexcept;

/// Half-line starting at origin. The direction is normalized on construction.
class Ray {
public:
    Ray(Point origin, Point direction);
    static Ray from_angle(Point origin, double angle);

    [[nodiscard]] Point origin() const noexcept { return origin_; }
    [[nodiscard]] Point direction() const noexcept { return direction_; }

    /// Coordinates of z in the frame where the ray is the positive real axis.
    [[nodiscard]] Point to_local(Point z) const noexcept;
    [[nodiscard]] Point from_local(Point w) const noexcept;

private:
    Point origin_;
    Point direction_;
};

/// Mirror image of p across the full line supporting the ray.
Point reflect(Point p, const Ray& line) noexcept;

enum class InfimumCase {
    SegmentCrossesBoundary,
    HeronReflection,
    RayEndpoint,
    HalfPlaneHeron,
    PuncturedOrigin,
    DiskCenter,
};

std::string_view to_string(InfimumCase c);

/// inf over boundary points z of |x - z| + |z - y|, with the point attaining it.
struct BoundaryInfimum {
    double value = 0.0;
    Point minimizer;
    InfimumCase which = InfimumCase::HeronReflection;
};

/// Euclidean distance from an interior point to the boundary.
/// Throws Error(PointNotInDomain) for boundary or exterior points.
double boundary_distance(const Domain& domain, Point x);

/// Infimum of |x - z| + |z - y| over z on the ray.
///
/// Cases are tried in order: the segment [x, y] meets the ray; x and y lie on
/// the same side of the supporting line and the Heron point of the reflected
/// pair falls on the ray; otherwise the ray origin is optimal. Points lying on
/// the supporting line behind the origin are allowed. For x == y the result
/// is twice the distance from x to the ray.
BoundaryInfimum heron_on_ray(Point x, Point y, const Ray& ray);

/// Boundary infimum for the whole domain. Exactly symmetric in (x, y).
///
/// The unit disk is supported only when one point is the center; any other
/// disk pair throws Error(NumericFallbackRequired).
BoundaryInfimum boundary_inf_sum(const Domain& domain, Point x, Point y);

/// Throws Error(PointNotInDomain) unless the point is strictly interior.
void require_interior(const Domain& domain, Point x);

}  // namespace sector_metrics
