#pragma once

#include "sector_metrics/geometry.h"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sector_metrics {

/// Upper envelope ln(2(1 + sqrt(1 - e^-2)))(K - 1) + K of the Schwarz-lemma
/// constant c(K). Throws Error(InvalidK) for K < 1.
double c_upper(double K);

/// Inverse hyperbolic tangent with t capped at 1 - 1e-15.
double arth(double t);

struct HolderParams {
    double K = 1.0;
    double C = 1.0;

    /// 2 (C/2)^K, recomputed on every call.
    [[nodiscard]] double d() const;
};

/// H(t) = th((C/2) max(2 arth t, (2 arth t)^(1/K))). Requires t in (0, 1),
/// K >= 1 and C >= 1.
double holder_majorant(double t, double K, double C);

/// w(t) = th((c/2) (2 arth t)^(1/K)).
double holder_w(double t, double K, double c);

struct ElementaryGrid {
    std::size_t t_points = 10000;
    double t_min = 1e-8;
    double t_max = 1.0 - 1e-8;
    std::vector<double> ks{1.0, 1.5, 2.0, 5.0, 10.0};
    std::vector<double> ds{1.0, 1.01, 2.0, 10.0};
    /// (K, c) pairs for the w(t) bound; pairs with c < K are skipped.
    std::vector<double> w_values{1.0, 2.0, 5.0};
    /// Base points u and exponents a for the th(u^a)^(1/a) monotonicity sweep.
    std::vector<double> u_values{0.01, 0.1, 0.5, 1.0, 2.0, 5.0};
    std::size_t a_points = 2000;
    double slack = 1e-14;

    /// t log-spaced on [t_min, t_max].
    [[nodiscard]] std::vector<double> t_grid() const;
};

struct SweepResult {
    std::string name;
    /// Grid nodes evaluated.
    std::size_t points = 0;
    std::size_t violations = 0;
    /// Largest amount by which a checked inequality failed (negative when
    /// every point held with room to spare).
    double max_excess = 0.0;
};

/// The elementary inequalities behind the Hoelder estimates:
///   H(t) <= C t^(1/K) for C in {K, c_upper(K), 10},
///   th(d arth t) <= d t,
///   w(t) <= max(1, d^(1/K)) t^(1/K) with d = 2 (c/2)^K,
///   th(u^a)^(1/a) nondecreasing in a, th(t)/t nonincreasing in t.
std::vector<SweepResult> elementary_checks(const ElementaryGrid& grid = {});

/// lower_coeff s^lower_exp <= s(f(x), f(y)) <= upper_coeff s^upper_exp.
struct DistortionBounds {
    double lower_coeff = 1.0;
    double lower_exp = 1.0;
    double upper_coeff = 1.0;
    double upper_exp = 1.0;
    /// Schwarz-lemma constant the coefficients were computed with.
    double C = 1.0;

    [[nodiscard]] double lower(double s) const;
    [[nodiscard]] double upper(double s) const;
};

/// A <= th(rho/2) / s <= B on a supported domain.
struct ThOverS {
    double A = 1.0;
    double B = 1.0;
};

/// Sectors, the half-plane and the strip of height pi; anything else throws
/// Error(UnsupportedPair).
ThOverS th_over_s_bounds(const Domain& domain);

/// Bounds for a K-quasiconformal f from source onto target, with C the
/// Schwarz-lemma constant. Upper: C B1^(1/K) / A2; lower, from the inverse
/// map: A1^K / (C^K B2). Throws Error(UnsupportedPair) for other domains and
/// Error(InvalidK) for K < 1.
DistortionBounds distortion_bounds(const Domain& source, const Domain& target, double K, double C);
DistortionBounds distortion_bounds(const Domain& source, const Domain& target, double K);

/// Sharp bounds on s(f(x), f(y)) / s(x, y) for f(z) = z^(beta/alpha) from
/// S_alpha onto S_beta, alpha and beta in (0, pi].
std::pair<double, double> power_map_bounds(double alpha, double beta);

/// Q(k) = sin(k beta/2) sin(alpha/2) / (sin(k alpha/2) sin(beta/2)), the
/// power-map quotient at the normalized symmetric pair.
double power_map_quotient(double k, double alpha, double beta);

enum class MapFamily { AngleStretch, PowerMap };

std::string to_string(MapFamily family);

/// r e^{i phi} -> r e^{i phi beta/alpha} (AngleStretch) or z^(beta/alpha)
/// (PowerMap) from S_alpha onto S_beta.
Point apply_map(MapFamily family, double alpha, double beta, Point z);

struct DistortionReport {
    MapFamily family = MapFamily::PowerMap;
    double alpha = 0.0;
    double beta = 0.0;
    /// max(beta/alpha, alpha/beta) for AngleStretch, 1 for PowerMap.
    double K = 1.0;
    double C = 1.0;
    /// The AngleStretch dilatation is a standard fact used as an assumption.
    bool assumed_dilatation = false;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    /// Observed range of s(f(x), f(y)) / s(x, y).
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    /// Closest approach to each bound: min over pairs of s' - lower(s) and of
    /// upper(s) - s'.
    double lower_margin = 0.0;
    double upper_margin = 0.0;
    std::size_t violations = 0;
    /// Power map only: sharp ratio bounds and the witness quotients at
    /// k = 2^-30 and k = 1 - 2^-30.
    double ratio_low = 0.0;
    double ratio_high = 0.0;
    double witness_limit_zero = 0.0;
    double witness_limit_one = 0.0;
};

/// Transports random pairs of S_alpha and checks the theoretical bounds.
/// AngleStretch uses distortion_bounds with C = c_upper(K); PowerMap uses
/// power_map_bounds. Deterministic given seed.
DistortionReport empirical_distortion(MapFamily family, double alpha, double beta, std::size_t n_samples,
                                      std::uint64_t seed, double tol = 1e-10);

}  // namespace sector_metrics
