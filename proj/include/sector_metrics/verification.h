#pragma once

#include "sector_metrics/catalog.h"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sector_metrics {

struct VerificationReport {
    std::string record_id;
    double theta = 0.0;
    std::size_t samples = 0;
    double sup_observed = 0.0;
    double inf_observed = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    std::size_t violations = 0;
    /// upper_bound - sup_observed and inf_observed - lower_bound.
    double sharpness_gap_upper = 0.0;
    double sharpness_gap_lower = 0.0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;

    [[nodiscard]] bool passed() const noexcept { return violations == 0; }
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kRefineStarts = 5;
inline constexpr std::size_t kRefineIterations = 500;

/// Random interior pair. Sectors, the half-plane and the punctured plane use
/// radii log-uniform on [1e-3, 1e3] and uniform angles; the strip uses a real
/// offset of the same magnitudes and uniform heights; the unit disk pairs its
/// center with a uniform point, the only configuration s supports there.
PointPair sample_pair(const Domain& domain, std::mt19937_64& rng);

/// Samples the record's quotient on the domain at theta, refines the
/// extremes by simplex descent and counts pairs breaching either bound by
/// more than tol. Deterministic for a given seed, whatever the thread count.
/// Fixed-domain records ignore theta and report kFixedDomainTheta.
VerificationReport check_bound(const InequalityRecord& record, double theta, std::size_t n_samples,
                               std::uint64_t seed, double tol = kDefaultTolerance);

struct SharpnessResult {
    std::string record_id;
    double theta = 0.0;
    Side side = Side::Upper;
    WitnessKind kind = WitnessKind::Attained;
    double constant = 0.0;
    /// Extremal quotient along the witness family.
    double best = 0.0;
    /// Quotients at k = 2^-j (or 1 - 2^-j), j = 1..30; one entry when attained.
    std::vector<double> sequence;
    /// The sequence never moves away from the constant.
    bool monotone = true;
};

inline constexpr int kLimitSteps = 30;

/// Throws Error(NoWitness) if the record has no witness for that side.
SharpnessResult sharpness_probe(const InequalityRecord& record, double theta, Side side);

/// Pair in S_theta, theta in (pi, 2pi), whose segment leaves the sector, so
/// s = 1 > p. Throws Error(InvalidTheta) otherwise.
PointPair convexity_counterexample(double theta);

struct TriangleSearch {
    std::size_t triples = 0;
    /// max of p(x, z) - p(x, y) - p(y, z); positive means p failed the
    /// triangle inequality somewhere.
    double worst_excess = 0.0;
    std::array<Point, 3> worst{};
};

/// Random search for triangle-inequality failures of the point pair function.
TriangleSearch search_point_pair_triangle(const Domain& domain, std::size_t n_triples, std::uint64_t seed);

}  // namespace sector_metrics
