#include "sector_metrics/qc_distortion.h"

#include "sector_metrics/error.h"
#include "sector_metrics/metrics.h"
#include "sector_metrics/verification.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace sector_metrics {

namespace {

constexpr double kArthCap = 1.0 - 1e-15;

void require_k(double K) {
    if (!(K >= 1.0) || !std::isfinite(K)) throw Error(ErrorCode::InvalidK, fmt::format("K = {} must be >= 1", K));
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    out.back() = hi;
    return out;
}

struct Sweep {
    SweepResult r;
    double slack;

    Sweep(std::string name, double s) : r{std::move(name), 0, 0, -std::numeric_limits<double>::infinity()}, slack(s) {}

    // lhs <= rhs is expected.
    void check(double lhs, double rhs) {
        const double excess = lhs - rhs;
        ++r.points;
        r.max_excess = std::max(r.max_excess, excess);
        if (!(excess <= slack)) ++r.violations;
    }
};

void require_power_angles(double alpha, double beta) {
    if (!(alpha > 0.0 && alpha <= kPi) || !(beta > 0.0 && beta <= kPi)) {
        throw Error(ErrorCode::InvalidTheta, "the power-map bounds need alpha and beta in (0, pi]");
    }
}

}  // namespace

double c_upper(double K) {
    require_k(K);
    return std::log(2.0 * (1.0 + std::sqrt(1.0 - std::exp(-2.0)))) * (K - 1.0) + K;
}

double arth(double t) {
    const double capped = std::min(t, kArthCap);
    return 0.5 * (std::log1p(capped) - std::log1p(-capped));
}

double HolderParams::d() const { return 2.0 * std::pow(C / 2.0, K); }

double holder_majorant(double t, double K, double C) {
    if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::OutOfRange, fmt::format("t = {} must lie in (0, 1)", t));
    require_k(K);
    if (!(C >= 1.0) || !std::isfinite(C)) throw Error(ErrorCode::OutOfRange, fmt::format("C = {} must be >= 1", C));
    const double u = 2.0 * arth(t);
    return std::tanh(0.5 * C * std::max(u, std::pow(u, 1.0 / K)));
}

double holder_w(double t, double K, double c) {
    return std::tanh(0.5 * c * std::pow(2.0 * arth(t), 1.0 / K));
}

std::vector<double> ElementaryGrid::t_grid() const { return log_grid(t_min, t_max, t_points); }

std::vector<SweepResult> elementary_checks(const ElementaryGrid& grid) {
    const std::vector<double> ts = grid.t_grid();
    std::vector<SweepResult> out;

    for (double K : grid.ks) {
        std::vector<double> cs{K, c_upper(K), 10.0};
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        for (double C : cs) {
            Sweep sw(fmt::format("H(t) <= C t^(1/K), K={}, C={:.10g}", K, C), grid.slack);
            for (double t : ts) sw.check(holder_majorant(t, K, C), C * std::pow(t, 1.0 / K));
            out.push_back(sw.r);
        }
    }

    for (double d : grid.ds) {
        Sweep sw(fmt::format("th(d arth t) <= d t, d={}", d), grid.slack);
        for (double t : ts) sw.check(std::tanh(d * arth(t)), d * t);
        out.push_back(sw.r);
    }

    for (double K : grid.w_values) {
        for (double c : grid.w_values) {
            if (c < K) continue;
            const double d = HolderParams{K, c}.d();
            const double coeff = std::max(1.0, std::pow(d, 1.0 / K));
            Sweep sw(fmt::format("w(t) <= max(1, d^(1/K)) t^(1/K), K={}, c={}", K, c), grid.slack);
            for (double t : ts) sw.check(holder_w(t, K, c), coeff * std::pow(t, 1.0 / K));
            out.push_back(sw.r);
        }
    }

    {
        Sweep sw("th(u^a)^(1/a) nondecreasing in a", grid.slack);
        const std::vector<double> as = log_grid(0.01, 10.0, grid.a_points);
        for (double u : grid.u_values) {
            const auto h = [u](double a) { return std::pow(std::tanh(std::pow(u, a)), 1.0 / a); };
            ++sw.r.points;  // first node, compared only as a predecessor
            for (std::size_t i = 1; i < as.size(); ++i) sw.check(h(as[i - 1]), h(as[i]));
        }
        out.push_back(sw.r);
    }

    {
        Sweep sw("th(t)/t nonincreasing in t", grid.slack);
        ++sw.r.points;
        for (std::size_t i = 1; i < ts.size(); ++i) sw.check(std::tanh(ts[i]) / ts[i], std::tanh(ts[i - 1]) / ts[i - 1]);
        out.push_back(sw.r);
    }
    return out;
}

double DistortionBounds::lower(double s) const { return lower_coeff * std::pow(s, lower_exp); }
double DistortionBounds::upper(double s) const { return upper_coeff * std::pow(s, upper_exp); }

ThOverS th_over_s_bounds(const Domain& domain) {
    switch (domain.kind()) {
        case DomainKind::HalfPlane:
            return {1.0, 1.0};
        case DomainKind::Sector: {
            const double t = domain.angle();
            return {t > kPi ? kPi / t : 1.0, t < kPi ? kPi / t * std::sin(0.5 * t) : 1.0};
        }
        case DomainKind::Strip:
            if (domain.height() == kPi) return {1.0, 0.5 * kPi};
            break;
        default:
            break;
    }
    throw Error(ErrorCode::UnsupportedPair, fmt::format("no th(rho/2)/s bounds for {}", domain.describe()));
}

DistortionBounds distortion_bounds(const Domain& source, const Domain& target, double K, double C) {
    require_k(K);
    if (!(C >= 1.0) || !std::isfinite(C)) throw Error(ErrorCode::OutOfRange, fmt::format("C = {} must be >= 1", C));
    const ThOverS src = th_over_s_bounds(source);
    const ThOverS dst = th_over_s_bounds(target);
    DistortionBounds b;
    b.C = C;
    b.upper_coeff = C * std::pow(src.B, 1.0 / K) / dst.A;
    b.upper_exp = 1.0 / K;
    b.lower_coeff = std::pow(src.A, K) / (std::pow(C, K) * dst.B);
    b.lower_exp = K;
    return b;
}

DistortionBounds distortion_bounds(const Domain& source, const Domain& target, double K) {
    return distortion_bounds(source, target, K, c_upper(K));
}

std::pair<double, double> power_map_bounds(double alpha, double beta) {
    require_power_angles(alpha, beta);
    const double c = beta * std::sin(0.5 * alpha) / (alpha * std::sin(0.5 * beta));
    return alpha <= beta ? std::pair{1.0, c} : std::pair{c, 1.0};
}

double power_map_quotient(double k, double alpha, double beta) {
    return std::sin(0.5 * k * beta) * std::sin(0.5 * alpha) / (std::sin(0.5 * k * alpha) * std::sin(0.5 * beta));
}

std::string to_string(MapFamily family) { return family == MapFamily::PowerMap ? "PowerMap" : "AngleStretch"; }

Point apply_map(MapFamily family, double alpha, double beta, Point z) {
    const double e = beta / alpha;
    const double r = family == MapFamily::PowerMap ? std::pow(std::abs(z), e) : std::abs(z);
    return std::polar(r, principal_arg(z) * e);
}

DistortionReport empirical_distortion(MapFamily family, double alpha, double beta, std::size_t n_samples,
                                      std::uint64_t seed, double tol) {
    if (n_samples == 0) throw Error(ErrorCode::OutOfRange, "empirical_distortion needs at least one sample");
    const Domain src = Domain::sector(alpha);
    const Domain dst = Domain::sector(beta);

    DistortionReport rep;
    rep.family = family;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.samples = n_samples;
    rep.seed = seed;
    rep.tolerance = tol;

    DistortionBounds bounds;
    if (family == MapFamily::PowerMap) {
        const auto [lo, hi] = power_map_bounds(alpha, beta);
        rep.ratio_low = lo;
        rep.ratio_high = hi;
        bounds = {lo, 1.0, hi, 1.0, 1.0};
        const auto witness = [&](double k) {
            const Point x = std::polar(1.0, (1.0 - k) * 0.5 * alpha);
            const Point y = std::polar(1.0, (1.0 + k) * 0.5 * alpha);
            return s_metric(dst, apply_map(family, alpha, beta, x), apply_map(family, alpha, beta, y)) /
                   s_metric(src, x, y);
        };
        rep.witness_limit_zero = witness(std::ldexp(1.0, -kLimitSteps));
        rep.witness_limit_one = witness(1.0 - std::ldexp(1.0, -kLimitSteps));
    } else {
        rep.K = std::max(beta / alpha, alpha / beta);
        rep.assumed_dilatation = true;
        bounds = distortion_bounds(src, dst, rep.K);
    }
    rep.C = bounds.C;

    rep.ratio_min = std::numeric_limits<double>::infinity();
    rep.ratio_max = -std::numeric_limits<double>::infinity();
    rep.lower_margin = std::numeric_limits<double>::infinity();
    rep.upper_margin = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const PointPair p = sample_pair(src, rng);
        if (p[0] == p[1]) continue;
        const double before = s_metric(src, p[0], p[1]);
        const double after =
            s_metric(dst, apply_map(family, alpha, beta, p[0]), apply_map(family, alpha, beta, p[1]));
        rep.ratio_min = std::min(rep.ratio_min, after / before);
        rep.ratio_max = std::max(rep.ratio_max, after / before);
        const double lm = after - bounds.lower(before);
        const double um = bounds.upper(before) - after;
        rep.lower_margin = std::min(rep.lower_margin, lm);
        rep.upper_margin = std::min(rep.upper_margin, um);
        if (lm < -tol || um < -tol) ++rep.violations;
    }
    return rep;
}

}  // namespace sector_metrics
