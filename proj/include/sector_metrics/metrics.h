#pragma once

#include "sector_metrics/geometry.h"

#include <array>
#include <string_view>

namespace sector_metrics {

enum class MetricKind { TriangularRatio, JStar, PointPair, TanhHalfRho };

inline constexpr std::array<MetricKind, 4> kAllMetrics{
    MetricKind::TriangularRatio, MetricKind::JStar, MetricKind::PointPair, MetricKind::TanhHalfRho};

/// Short names used in reports: "s", "j*", "p", "th(rho/2)".
std::string_view to_string(MetricKind kind);

/// Triangular ratio metric |x - y| / inf_z (|x - z| + |z - y|).
double s_metric(const Domain& domain, Point x, Point y);

/// |x - y| / (|x - y| + 2 min(d(x), d(y))).
double jstar_metric(const Domain& domain, Point x, Point y);

/// Point pair function |x - y| / sqrt(|x - y|^2 + 4 d(x) d(y)).
double point_pair(const Domain& domain, Point x, Point y);

/// th(rho/2) for the hyperbolic metric rho of a simply connected domain.
///
/// Sectors are carried to the half-plane by z^(pi/theta) and the strip of
/// height pi by exp(z). Both maps are evaluated through the ratio of the two
/// images, so nearby points keep full relative accuracy and large exponents
/// never overflow. The punctured plane and strips of other heights throw
/// Error(UnsupportedDomain).
double tanh_half_rho(const Domain& domain, Point x, Point y);

/// Hyperbolic distance: 2 artanh(th(rho/2)) for nearby pairs, otherwise
/// the half-plane arsh formula after the conformal map, which stays accurate
/// when th(rho/2) rounds to 1.
double rho(const Domain& domain, Point x, Point y);

double evaluate(MetricKind kind, const Domain& domain, Point x, Point y);

/// The conformal map of S_theta onto the upper half-plane, z -> z^(pi/theta).
Point sector_to_halfplane(double theta, Point z);
/// Inverse of sector_to_halfplane for points of the upper half-plane.
Point halfplane_to_sector(double theta, Point w);

}  // namespace sector_metrics
