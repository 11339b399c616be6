#include "sector_metrics/verification.h"

#include "sector_metrics/error.h"
#include "sector_metrics/parallel.h"

#include <fmt/format.h>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <memory>

namespace sector_metrics {

namespace {

constexpr double kLogRadiusMin = -3.0 * 2.302585092994046;  // ln 1e-3
constexpr double kLogRadiusMax = 3.0 * 2.302585092994046;
constexpr std::size_t kBlockSize = 1024;
constexpr double kSimplexStep = 0.1;
constexpr double kSimplexSizeStop = 1e-12;
constexpr double kMonotoneSlack = 1e-12;
constexpr double kInfeasible = 1e300;

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Uniform on the open interval; the closed end of the generator is redrawn.
double uniform_open(std::mt19937_64& rng, double lo, double hi) {
    double v = lo;
    while (v <= lo || v >= hi) v = uniform(rng, lo, hi);
    return v;
}

Point polar_sample(std::mt19937_64& rng, double max_angle) {
    const double r = std::exp(uniform(rng, kLogRadiusMin, kLogRadiusMax));
    return std::polar(r, uniform_open(rng, 0.0, max_angle));
}

// Reals a pair is optimized over. Polar domains use (ln r, arg) per point,
// the strip uses Cartesian coordinates and the disk moves only y.
std::vector<double> encode(const Domain& d, const PointPair& p) {
    switch (d.kind()) {
        case DomainKind::Strip:
            return {p[0].real(), p[0].imag(), p[1].real(), p[1].imag()};
        case DomainKind::UnitDisk:
            return {p[1].real(), p[1].imag()};
        default:
            return {std::log(std::abs(p[0])), principal_arg(p[0]), std::log(std::abs(p[1])),
                    principal_arg(p[1])};
    }
}

PointPair decode(const Domain& d, const double* v) {
    switch (d.kind()) {
        case DomainKind::Strip:
            return {Point{v[0], v[1]}, Point{v[2], v[3]}};
        case DomainKind::UnitDisk:
            return {Point{}, Point{v[0], v[1]}};
        default:
            return {std::polar(std::exp(v[0]), v[1]), std::polar(std::exp(v[2]), v[3])};
    }
}

struct Objective {
    const InequalityRecord* record;
    const Domain* domain;
    double sign;  // +1 to minimize the quotient, -1 to maximize it
};

double quotient_if_valid(const InequalityRecord& record, const Domain& d, const PointPair& p) {
    if (!d.contains(p[0]) || !d.contains(p[1]) || p[0] == p[1]) return std::numeric_limits<double>::quiet_NaN();
    if (d.kind() == DomainKind::UnitDisk && p[0] != Point{}) return std::numeric_limits<double>::quiet_NaN();
    return record.quotient(d, p[0], p[1]);
}

double gsl_objective(const gsl_vector* v, void* params) {
    const auto& o = *static_cast<const Objective*>(params);
    const PointPair p = decode(*o.domain, gsl_vector_const_ptr(v, 0));
    double q = std::numeric_limits<double>::quiet_NaN();
    try {
        q = quotient_if_valid(*o.record, *o.domain, p);
    } catch (const Error&) {
        // Degenerate configurations on the optimizer path are simply skipped.
    }
    return std::isfinite(q) ? o.sign * q : kInfeasible;
}

struct Refined {
    double quotient = std::numeric_limits<double>::quiet_NaN();
};

Refined refine(const InequalityRecord& record, const Domain& d, const PointPair& start, double sign) {
    const std::vector<double> x0 = encode(d, start);
    const std::size_t n = x0.size();
    Objective obj{&record, &d, sign};
    gsl_multimin_function fn{gsl_objective, n, &obj};

    using VecPtr = std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)>;
    VecPtr x(gsl_vector_alloc(n), gsl_vector_free);
    VecPtr step(gsl_vector_alloc(n), gsl_vector_free);
    for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x.get(), i, x0[i]);
    gsl_vector_set_all(step.get(), kSimplexStep);

    std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> s(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n), gsl_multimin_fminimizer_free);
    gsl_multimin_fminimizer_set(s.get(), &fn, x.get(), step.get());
    for (std::size_t it = 0; it < kRefineIterations; ++it) {
        if (gsl_multimin_fminimizer_iterate(s.get()) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s.get()), kSimplexSizeStop) == GSL_SUCCESS) break;
    }
    const double f = gsl_multimin_fminimizer_minimum(s.get());
    if (f >= kInfeasible) return {};
    return {sign * f};
}

std::mt19937_64 block_rng(std::uint64_t seed, const std::string& id, double theta, std::size_t block) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    for (unsigned char c : id) words.push_back(c);
    const auto bits = std::bit_cast<std::uint64_t>(theta);
    words.push_back(static_cast<std::uint32_t>(bits));
    words.push_back(static_cast<std::uint32_t>(bits >> 32));
    words.push_back(static_cast<std::uint32_t>(block));
    words.push_back(static_cast<std::uint32_t>(static_cast<std::uint64_t>(block) >> 32));
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

void disable_gsl_abort() {
    static const bool done = [] {
        gsl_set_error_handler_off();
        return true;
    }();
    (void)done;
}

}  // namespace

PointPair sample_pair(const Domain& domain, std::mt19937_64& rng) {
    switch (domain.kind()) {
        case DomainKind::Sector:
        case DomainKind::HalfPlane:
            return {polar_sample(rng, domain.angle()), polar_sample(rng, domain.angle())};
        case DomainKind::PuncturedPlane:
            return {polar_sample(rng, 2.0 * kPi), polar_sample(rng, 2.0 * kPi)};
        case DomainKind::Strip: {
            const double h = domain.height();
            const double offset = std::exp(uniform(rng, kLogRadiusMin, kLogRadiusMax));
            const double sign = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
            const double base = uniform(rng, -1.0, 1.0);
            return {Point{base, uniform_open(rng, 0.0, h)}, Point{base + sign * offset, uniform_open(rng, 0.0, h)}};
        }
        case DomainKind::UnitDisk: {
            // sqrt of a uniform variate gives area-uniform radii.
            const double r = std::sqrt(uniform_open(rng, 0.0, 1.0));
            return {Point{}, std::polar(r, uniform(rng, 0.0, 2.0 * kPi))};
        }
    }
    throw Error(ErrorCode::UnsupportedDomain, "no sampler for this domain");
}

VerificationReport check_bound(const InequalityRecord& record, double theta, std::size_t n_samples,
                               std::uint64_t seed, double tol) {
    if (n_samples == 0) throw Error(ErrorCode::OutOfRange, "check_bound needs at least one sample");
    disable_gsl_abort();
    const double used_theta = record.family.is_sector_family() ? theta : kFixedDomainTheta;
    const Domain domain = record.family.at(theta);

    VerificationReport rep;
    rep.record_id = record.id;
    rep.theta = used_theta;
    rep.samples = n_samples;
    rep.lower_bound = record.lower_const(used_theta);
    rep.upper_bound = record.upper_const(used_theta);
    rep.seed = seed;
    rep.tolerance = tol;

    std::vector<double> quotients(n_samples, std::numeric_limits<double>::quiet_NaN());
    std::vector<PointPair> pairs(n_samples);
    const std::size_t blocks = (n_samples + kBlockSize - 1) / kBlockSize;
    parallel_for(blocks, [&](std::size_t b) {
        auto rng = block_rng(seed, record.id, used_theta, b);
        const std::size_t end = std::min(n_samples, (b + 1) * kBlockSize);
        for (std::size_t i = b * kBlockSize; i < end; ++i) {
            pairs[i] = sample_pair(domain, rng);
            quotients[i] = quotient_if_valid(record, domain, pairs[i]);
        }
    });

    const auto breaches = [&](double q) { return q > rep.upper_bound + tol || q < rep.lower_bound - tol; };
    double sup = -std::numeric_limits<double>::infinity();
    double inf = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> valid;
    valid.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double q = quotients[i];
        if (!std::isfinite(q)) continue;
        valid.push_back(i);
        sup = std::max(sup, q);
        inf = std::min(inf, q);
        if (breaches(q)) ++rep.violations;
    }

    // Simplex refinement from the best and worst few samples; ties resolved
    // by sample index so the starting set is deterministic.
    const std::size_t starts = std::min(kRefineStarts, valid.size());
    auto by_quotient = [&](bool descending) {
        std::vector<std::size_t> idx = valid;
        std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(starts), idx.end(),
                          [&](std::size_t a, std::size_t b) {
                              const double qa = quotients[a];
                              const double qb = quotients[b];
                              if (qa != qb) return descending ? qa > qb : qa < qb;
                              return a < b;
                          });
        idx.resize(starts);
        return idx;
    };
    for (std::size_t i : by_quotient(true)) {
        const Refined r = refine(record, domain, pairs[i], -1.0);
        if (!std::isfinite(r.quotient)) continue;
        sup = std::max(sup, r.quotient);
        if (breaches(r.quotient)) ++rep.violations;
    }
    for (std::size_t i : by_quotient(false)) {
        const Refined r = refine(record, domain, pairs[i], 1.0);
        if (!std::isfinite(r.quotient)) continue;
        inf = std::min(inf, r.quotient);
        if (breaches(r.quotient)) ++rep.violations;
    }

    rep.sup_observed = sup;
    rep.inf_observed = inf;
    rep.sharpness_gap_upper = rep.upper_bound - sup;
    rep.sharpness_gap_lower = inf - rep.lower_bound;
    return rep;
}

SharpnessResult sharpness_probe(const InequalityRecord& record, double theta, Side side) {
    const WitnessFamily* w = record.witness(side);
    if (w == nullptr) {
        throw Error(ErrorCode::NoWitness,
                    fmt::format("record {} has no {} witness", record.id, to_string(side)));
    }
    const double used_theta = record.family.is_sector_family() ? theta : kFixedDomainTheta;
    const Domain domain = record.family.at(theta);

    SharpnessResult res;
    res.record_id = record.id;
    res.theta = used_theta;
    res.side = side;
    res.kind = w->kind;
    res.constant = record.constant(side, used_theta);

    const auto eval = [&](double k) {
        const PointPair p = w->generator(used_theta, k);
        return record.quotient(domain, p[0], p[1]);
    };
    if (w->kind == WitnessKind::Attained) {
        res.sequence.push_back(eval(0.5));
    } else {
        for (int j = 1; j <= kLimitSteps; ++j) {
            const double step = std::ldexp(1.0, -j);
            res.sequence.push_back(eval(w->kind == WitnessKind::LimitZero ? step : 1.0 - step));
        }
    }

    res.best = side == Side::Upper ? *std::max_element(res.sequence.begin(), res.sequence.end())
                                   : *std::min_element(res.sequence.begin(), res.sequence.end());
    for (std::size_t i = 1; i < res.sequence.size(); ++i) {
        const double before = std::abs(res.sequence[i - 1] - res.constant);
        const double after = std::abs(res.sequence[i] - res.constant);
        if (after > before + kMonotoneSlack) res.monotone = false;
    }
    return res;
}

PointPair convexity_counterexample(double theta) {
    if (!(theta > kPi && theta < 2.0 * kPi)) {
        throw Error(ErrorCode::InvalidTheta, "a sector is convex unless theta lies in (pi, 2pi)");
    }
    const double eps = 0.25 * (theta - kPi);
    return {std::polar(1.0, eps), std::polar(1.0, theta - eps)};
}

TriangleSearch search_point_pair_triangle(const Domain& domain, std::size_t n_triples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TriangleSearch out;
    out.worst_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_triples; ++i) {
        const PointPair a = sample_pair(domain, rng);
        const PointPair b = sample_pair(domain, rng);
        const Point x = a[0] == Point{} ? a[1] : a[0];
        const Point y = b[0] == Point{} ? b[1] : b[0];
        const Point z = b[1];
        const double excess = point_pair(domain, x, z) - point_pair(domain, x, y) - point_pair(domain, y, z);
        ++out.triples;
        if (excess > out.worst_excess) {
            out.worst_excess = excess;
            out.worst = {x, y, z};
        }
    }
    return out;
}

}  // namespace sector_metrics
