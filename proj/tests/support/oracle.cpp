#include "oracle.h"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace oracle {

namespace {

// z(t) = origin + t * dir for t in [lo, hi].
struct Piece {
    Point origin;
    Point dir;
    double lo;
    double hi;
};

std::vector<Piece> pieces(const Domain& d, Point x, Point y) {
    // Any minimizer lies within this distance of the origin.
    const double reach = 2.0 * (std::abs(x) + std::abs(y)) + 1.0;
    switch (d.kind()) {
        case sector_metrics::DomainKind::HalfPlane:
            return {{Point{}, Point{1.0, 0.0}, -reach, reach}};
        case sector_metrics::DomainKind::Sector:
            return {{Point{}, Point{1.0, 0.0}, 0.0, reach},
                    {Point{}, std::polar(1.0, d.angle()), 0.0, reach}};
        case sector_metrics::DomainKind::Strip:
            return {{Point{}, Point{1.0, 0.0}, -reach, reach},
                    {Point{0.0, d.height()}, Point{1.0, 0.0}, -reach, reach}};
        default:
            throw std::invalid_argument("oracle supports sectors, the half-plane and strips only");
    }
}

double path(Point x, Point y, Point z) {
    const double ax = x.real() - z.real();
    const double ay = x.imag() - z.imag();
    const double bx = y.real() - z.real();
    const double by = y.imag() - z.imag();
    return std::sqrt(ax * ax + ay * ay) + std::sqrt(bx * bx + by * by);
}

}  // namespace

double boundary_inf_sum(const Domain& domain, Point x, Point y, std::size_t grid_points) {
    double best = std::numeric_limits<double>::infinity();
    const auto all = pieces(domain, x, y);
    const std::size_t per_piece = grid_points / all.size() + 1;
    for (const Piece& p : all) {
        const auto f = [&](double t) { return path(x, y, p.origin + t * p.dir); };
        const double h = (p.hi - p.lo) / static_cast<double>(per_piece - 1);
        std::size_t arg = 0;
        double fmin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < per_piece; ++i) {
            const double v = f(p.lo + h * static_cast<double>(i));
            if (v < fmin) {
                fmin = v;
                arg = i;
            }
        }
        const double a = std::max(p.lo, p.lo + h * (static_cast<double>(arg) - 1.0));
        const double b = std::min(p.hi, p.lo + h * (static_cast<double>(arg) + 1.0));
        const auto r = boost::math::tools::brent_find_minima(f, a, b, std::numeric_limits<double>::digits);
        best = std::min({best, fmin, r.second, f(a), f(b)});
    }
    return best;
}

double sector_tanh_half_rho(double theta, Point x, Point y) {
    const double e = sector_metrics::kPi / theta;
    const auto h = [e](Point z) {
        double arg = std::arg(z);
        if (arg < 0.0) arg += 2.0 * sector_metrics::kPi;
        return std::polar(std::pow(std::abs(z), e), arg * e);
    };
    const Point hx = h(x);
    const Point hy = h(y);
    return std::abs(hx - hy) / std::abs(hx - std::conj(hy));
}

double boundary_distance(const Domain& domain, Point x) {
    double best = std::numeric_limits<double>::infinity();
    for (const Piece& p : pieces(domain, x, x)) {
        const double t = std::clamp(((x - p.origin) * std::conj(p.dir)).real(), p.lo, p.hi);
        best = std::min(best, std::abs(x - (p.origin + t * p.dir)));
    }
    return best;
}

}  // namespace oracle
