#include "sector_metrics/metrics.h"

#include "sector_metrics/error.h"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <utility>

namespace sector_metrics {

namespace {

// exp(w) - 1 without cancellation for small |w|.
Point expm1_complex(Point w) {
    const double u = w.real();
    const double v = w.imag();
    const double half_sin = std::sin(0.5 * v);
    const double re = std::expm1(u) * std::cos(v) - 2.0 * half_sin * half_sin;
    const double im = std::exp(u) * std::sin(v);
    return {re, im};
}

// th(rho/2) in the half-plane for h(x), h(y) where h is either the power map
// or exp. `log_ratio` is log(h(y)/h(x)) and `log_conj_ratio` is
// log(conj(h(y))/h(x)); the caller orders the points so that
// Re(log_ratio) <= 0.
double halfplane_ratio(Point log_ratio, Point log_conj_ratio) {
    const double num = std::abs(expm1_complex(log_ratio));
    const double den = std::abs(expm1_complex(log_conj_ratio));
    return std::min(num / den, 1.0);
}

double sector_tanh_half_rho(double theta, Point x, Point y) {
    // Larger modulus first so that |y|^a / |x|^a <= 1.
    if (std::abs(y) > std::abs(x) || (std::abs(y) == std::abs(x) && principal_arg(y) < principal_arg(x))) {
        std::swap(x, y);
    }
    const double exponent = kPi / theta;
    const double arg_x = principal_arg(x);
    const double arg_y = principal_arg(y);

    // log(y/x) on the branch where the argument difference is arg y - arg x.
    const Point w = (y - x) / x;
    Point log_ratio;
    if (std::abs(w) < 0.5) {
        const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
        // The principal log is accurate but may sit on the wrong branch when
        // the short way from x to y crosses the excluded wedge.
        const double principal = std::atan2(w.imag(), 1.0 + w.real());
        const double turns = std::round((arg_y - arg_x - principal) / (2.0 * kPi));
        log_ratio = {re, principal + 2.0 * kPi * turns};
    } else {
        log_ratio = {std::log(std::abs(y)) - std::log(std::abs(x)), arg_y - arg_x};
    }
    const Point log_conj_ratio{log_ratio.real(), -(arg_x + arg_y)};
    return halfplane_ratio(exponent * log_ratio, exponent * log_conj_ratio);
}

double strip_tanh_half_rho(Point x, Point y) {
    if (y.real() > x.real() || (y.real() == x.real() && y.imag() < x.imag())) std::swap(x, y);
    const Point log_ratio = y - x;
    const Point log_conj_ratio = std::conj(y) - x;
    return halfplane_ratio(log_ratio, log_conj_ratio);
}

}  // namespace

std::string_view to_string(MetricKind kind) {
    switch (kind) {
        case MetricKind::TriangularRatio: return "s";
        case MetricKind::JStar: return "j*";
        case MetricKind::PointPair: return "p";
        case MetricKind::TanhHalfRho: return "th(rho/2)";
    }
    return "?";
}

double s_metric(const Domain& domain, Point x, Point y) {
    require_interior(domain, x);
    require_interior(domain, y);
    if (x == y) return 0.0;
    const BoundaryInfimum inf = boundary_inf_sum(domain, x, y);
    if (inf.which == InfimumCase::SegmentCrossesBoundary) return 1.0;
    return std::min(std::abs(x - y) / inf.value, 1.0);
}

double jstar_metric(const Domain& domain, Point x, Point y) {
    const double dx = boundary_distance(domain, x);
    const double dy = boundary_distance(domain, y);
    const double dist = std::abs(x - y);
    return dist / (dist + 2.0 * std::min(dx, dy));
}

double point_pair(const Domain& domain, Point x, Point y) {
    const double dx = boundary_distance(domain, x);
    const double dy = boundary_distance(domain, y);
    // sqrt(1 / (1 + q^2)) rounds 1/sqrt2 correctly where dist / sqrt(...) does not.
    const double q = 2.0 * std::sqrt(dx) * std::sqrt(dy) / std::abs(x - y);
    return std::sqrt(1.0 / (1.0 + q * q));
}

double tanh_half_rho(const Domain& domain, Point x, Point y) {
    require_interior(domain, x);
    require_interior(domain, y);
    if (x == y) return 0.0;
    switch (domain.kind()) {
        case DomainKind::HalfPlane: return std::abs(x - y) / std::abs(x - std::conj(y));
        case DomainKind::UnitDisk: return std::abs(x - y) / std::abs(1.0 - x * std::conj(y));
        case DomainKind::Sector: return sector_tanh_half_rho(domain.angle(), x, y);
        case DomainKind::Strip:
            if (domain.height() != kPi) {
                throw Error(ErrorCode::UnsupportedDomain,
                            fmt::format("hyperbolic metric implemented for the strip of height pi, got {}",
                                        domain.height()));
            }
            return strip_tanh_half_rho(x, y);
        case DomainKind::PuncturedPlane:
            throw Error(ErrorCode::UnsupportedDomain, "the punctured plane is not simply connected");
    }
    return 0.0;
}

namespace {

// rho in the half-plane as 2 arsh(|x - y| / (2 sqrt(Im x Im y))), which keeps
// full relative accuracy for distant pairs where th(rho/2) rounds to 1.
double halfplane_rho(Point x, Point y) {
    return 2.0 * std::asinh(std::abs(x - y) / (2.0 * std::sqrt(x.imag()) * std::sqrt(y.imag())));
}

}  // namespace

double rho(const Domain& domain, Point x, Point y) {
    const double th = tanh_half_rho(domain, x, y);
    // Small distances: atanh is well conditioned and the maps below are not.
    if (th <= 0.5) return 2.0 * std::atanh(th);
    double far = std::numeric_limits<double>::quiet_NaN();
    switch (domain.kind()) {
        case DomainKind::HalfPlane: far = halfplane_rho(x, y); break;
        case DomainKind::UnitDisk:
            far = 2.0 * std::asinh(std::abs(x - y) / std::sqrt((1.0 - std::norm(x)) * (1.0 - std::norm(y))));
            break;
        case DomainKind::Sector: {
            const double scale = std::exp(-0.5 * (std::log(std::abs(x)) + std::log(std::abs(y))));
            far = halfplane_rho(sector_to_halfplane(domain.angle(), x * scale),
                                sector_to_halfplane(domain.angle(), y * scale));
            break;
        }
        case DomainKind::Strip: {
            const double shift = 0.5 * (x.real() + y.real());
            far = halfplane_rho(std::exp(x - shift), std::exp(y - shift));
            break;
        }
        case DomainKind::PuncturedPlane: break;
    }
    return std::isfinite(far) ? far : 2.0 * std::atanh(th);
}

double evaluate(MetricKind kind, const Domain& domain, Point x, Point y) {
    switch (kind) {
        case MetricKind::TriangularRatio: return s_metric(domain, x, y);
        case MetricKind::JStar: return jstar_metric(domain, x, y);
        case MetricKind::PointPair: return point_pair(domain, x, y);
        case MetricKind::TanhHalfRho: return tanh_half_rho(domain, x, y);
    }
    return 0.0;
}

Point sector_to_halfplane(double theta, Point z) {
    const double exponent = kPi / theta;
    return std::polar(std::exp(exponent * std::log(std::abs(z))), exponent * principal_arg(z));
}

Point halfplane_to_sector(double theta, Point w) {
    const double exponent = theta / kPi;
    return std::polar(std::exp(exponent * std::log(std::abs(w))), exponent * principal_arg(w));
}

}  // namespace sector_metrics
