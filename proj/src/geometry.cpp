#include "sector_metrics/geometry.h"

#include "sector_metrics/error.h"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <utility>

namespace sector_metrics {

namespace {

bool is_finite(Point z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Lexicographic order used to make every two-point routine exactly symmetric.
bool precedes(Point a, Point b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

double predicate_eps(Point x, Point y) {
    return kGeometryEps * std::max({1.0, std::abs(x), std::abs(y)});
}

// Heron problem on a full line given in local coordinates (line = real axis),
// for two points strictly on the same side. Returns the value and the local
// abscissa of the Heron point.
std::pair<double, double> heron_local(Point a, Point b) {
    const Point mirrored = std::conj(a);
    const double t = mirrored.imag() / (mirrored.imag() - b.imag());
    const double foot = mirrored.real() + t * (b.real() - mirrored.real());
    return {std::abs(mirrored - b), foot};
}

BoundaryInfimum heron_on_horizontal(Point x, Point y, double level, InfimumCase label) {
    const Point shift{0.0, level};
    auto [value, foot] = heron_local(x - shift, y - shift);
    return {value, Point{foot, level}, label};
}

}  // namespace

std::string_view to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::HalfPlane: return "halfplane";
        case DomainKind::UnitDisk: return "disk";
        case DomainKind::Sector: return "sector";
        case DomainKind::Strip: return "strip";
        case DomainKind::PuncturedPlane: return "punctured";
    }
    return "unknown";
}

std::string_view to_string(InfimumCase c) {
    switch (c) {
        case InfimumCase::SegmentCrossesBoundary: return "SegmentCrossesBoundary";
        case InfimumCase::HeronReflection: return "HeronReflection";
        case InfimumCase::RayEndpoint: return "RayEndpoint";
        case InfimumCase::HalfPlaneHeron: return "HalfPlaneHeron";
        case InfimumCase::PuncturedOrigin: return "PuncturedOrigin";
        case InfimumCase::DiskCenter: return "DiskCenter";
    }
    return "Unknown";
}

Domain Domain::half_plane() { return {DomainKind::HalfPlane, kPi}; }
Domain Domain::unit_disk() { return {DomainKind::UnitDisk, 0.0}; }
Domain Domain::punctured_plane() { return {DomainKind::PuncturedPlane, 0.0}; }

Domain Domain::sector(double angle) {
    if (!(angle > 0.0 && angle < 2.0 * kPi)) {
        throw Error(ErrorCode::InvalidTheta, fmt::format("sector angle {} outside (0, 2pi)", angle));
    }
    return {DomainKind::Sector, angle};
}

Domain Domain::strip(double height) {
    if (!(height > 0.0) || !std::isfinite(height)) {
        throw Error(ErrorCode::OutOfRange, fmt::format("strip height {} must be positive", height));
    }
    return {DomainKind::Strip, height};
}

bool Domain::contains(Point z) const noexcept {
    if (!is_finite(z)) return false;
    switch (kind_) {
        case DomainKind::HalfPlane: return z.imag() > 0.0;
        case DomainKind::UnitDisk: return std::abs(z) < 1.0;
        case DomainKind::Sector: {
            if (z == Point{}) return false;
            const double a = principal_arg(z);
            return a > 0.0 && a < param_;
        }
        case DomainKind::Strip: return z.imag() > 0.0 && z.imag() < param_;
        case DomainKind::PuncturedPlane: return z != Point{};
    }
    return false;
}

bool Domain::is_convex() const noexcept {
    switch (kind_) {
        case DomainKind::Sector: return param_ <= kPi;
        case DomainKind::PuncturedPlane: return false;
        default: return true;
    }
}

bool Domain::is_scale_invariant() const noexcept {
    return kind_ == DomainKind::Sector || kind_ == DomainKind::HalfPlane ||
           kind_ == DomainKind::PuncturedPlane;
}

std::string Domain::describe() const {
    switch (kind_) {
        case DomainKind::Sector: return fmt::format("sector(theta={:.17g})", param_);
        case DomainKind::Strip: return fmt::format("strip(height={:.17g})", param_);
        default: return std::string(to_string(kind_));
    }
}

double principal_arg(Point z) noexcept {
    double a = std::arg(z);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

Ray::Ray(Point origin, Point direction) : origin_(origin) {
    const double len = std::abs(direction);
    if (!(len > 0.0) || !std::isfinite(len)) {
        throw Error(ErrorCode::DegenerateInput, "ray direction must be a nonzero finite vector");
    }
    direction_ = direction / len;
}

Ray Ray::from_angle(Point origin, double angle) {
    return Ray(origin, std::polar(1.0, angle));
}

Point Ray::to_local(Point z) const noexcept { return (z - origin_) * std::conj(direction_); }

Point Ray::from_local(Point w) const noexcept { return origin_ + w * direction_; }

Point reflect(Point p, const Ray& line) noexcept {
    return line.from_local(std::conj(line.to_local(p)));
}

void require_interior(const Domain& domain, Point x) {
    if (!domain.contains(x)) {
        throw Error(ErrorCode::PointNotInDomain,
                    fmt::format("({}, {}) is not an interior point of {}", x.real(), x.imag(),
                                domain.describe()));
    }
}

double boundary_distance(const Domain& domain, Point x) {
    require_interior(domain, x);
    switch (domain.kind()) {
        case DomainKind::HalfPlane: return x.imag();
        case DomainKind::UnitDisk: return 1.0 - std::abs(x);
        case DomainKind::Strip: return std::min(x.imag(), domain.height() - x.imag());
        case DomainKind::PuncturedPlane: return std::abs(x);
        case DomainKind::Sector: {
            double best = std::abs(x);
            for (const Ray& ray : {Ray::from_angle({}, 0.0), Ray::from_angle({}, domain.angle())}) {
                const Point w = ray.to_local(x);
                if (w.real() >= 0.0) best = std::min(best, std::abs(w.imag()));
            }
            return best;
        }
    }
    return 0.0;
}

BoundaryInfimum heron_on_ray(Point x, Point y, const Ray& ray) {
    if (precedes(y, x)) std::swap(x, y);
    const Point a = ray.to_local(x);
    const Point b = ray.to_local(y);
    const double eps = predicate_eps(a, b);
    const Point vertex = ray.origin();
    const BoundaryInfimum at_vertex{std::abs(x - vertex) + std::abs(vertex - y), vertex,
                                    InfimumCase::RayEndpoint};

    const bool same_side = (a.imag() > 0.0 && b.imag() > 0.0) || (a.imag() < 0.0 && b.imag() < 0.0);
    if (!same_side) {
        // [x, y] meets the supporting line; find where.
        double crossing;
        if (a.imag() == b.imag()) {
            crossing = std::max(a.real(), b.real());
        } else {
            const double t = a.imag() / (a.imag() - b.imag());
            crossing = a.real() + t * (b.real() - a.real());
        }
        if (crossing >= -eps) {
            return {std::abs(x - y), ray.from_local(Point{std::max(crossing, 0.0), 0.0}),
                    InfimumCase::SegmentCrossesBoundary};
        }
        return at_vertex;
    }

    auto [value, foot] = heron_local(a, b);
    if (foot >= -eps) {
        return {value, ray.from_local(Point{std::max(foot, 0.0), 0.0}), InfimumCase::HeronReflection};
    }
    return at_vertex;
}

BoundaryInfimum boundary_inf_sum(const Domain& domain, Point x, Point y) {
    require_interior(domain, x);
    require_interior(domain, y);
    if (precedes(y, x)) std::swap(x, y);

    switch (domain.kind()) {
        case DomainKind::HalfPlane:
            return heron_on_horizontal(x, y, 0.0, InfimumCase::HalfPlaneHeron);

        case DomainKind::Strip: {
            const BoundaryInfimum lower = heron_on_horizontal(x, y, 0.0, InfimumCase::HeronReflection);
            // Reflect across Im z = h by mirroring the strip onto itself.
            const double h = domain.height();
            const auto flip = [h](Point z) { return Point{z.real(), h - z.imag()}; };
            BoundaryInfimum upper = heron_on_horizontal(flip(x), flip(y), 0.0, InfimumCase::HeronReflection);
            upper.minimizer = Point{upper.minimizer.real(), h};
            return upper.value < lower.value ? upper : lower;
        }

        case DomainKind::Sector: {
            const BoundaryInfimum first = heron_on_ray(x, y, Ray::from_angle({}, 0.0));
            const BoundaryInfimum second = heron_on_ray(x, y, Ray::from_angle({}, domain.angle()));
            // Ties go to the ray with the smaller argument.
            return second.value < first.value ? second : first;
        }

        case DomainKind::PuncturedPlane: {
            const double cross = x.real() * y.imag() - x.imag() * y.real();
            const double dot = x.real() * y.real() + x.imag() * y.imag();
            if (std::abs(cross) <= kGeometryEps * std::abs(x) * std::abs(y) && dot < 0.0) {
                return {std::abs(x - y), Point{}, InfimumCase::SegmentCrossesBoundary};
            }
            return {std::abs(x) + std::abs(y), Point{}, InfimumCase::PuncturedOrigin};
        }

        case DomainKind::UnitDisk: {
            if (std::abs(y) <= kGeometryEps) std::swap(x, y);
            if (std::abs(x) > kGeometryEps) {
                throw Error(ErrorCode::NumericFallbackRequired,
                            "boundary infimum in the disk has a closed form only when one point is the center");
            }
            const double r = std::abs(y);
            const Point minimizer = r > 0.0 ? y / r : Point{1.0, 0.0};
            return {std::abs(x - minimizer) + (1.0 - r), minimizer, InfimumCase::DiskCenter};
        }
    }
    return {};
}

}  // namespace sector_metrics
