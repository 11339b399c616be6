#pragma once

#include "sector_metrics/geometry.h"

#include <cstddef>

namespace oracle {

using sector_metrics::Domain;
using sector_metrics::Point;

/// Brute-force inf over boundary points z of |x - z| + |z - y|: the boundary
/// is cut into straight pieces, each piece is scanned on a uniform grid and
/// the best cell is polished with Brent's method. Handles sectors, the
/// half-plane and strips.
double boundary_inf_sum(const Domain& domain, Point x, Point y, std::size_t grid_points = 100000);

/// th(rho/2) for a sector by the direct power map z^(pi/theta) and the
/// half-plane formula, with no rearrangement for accuracy.
double sector_tanh_half_rho(double theta, Point x, Point y);

/// Nearest boundary point distance computed from the boundary pieces.
double boundary_distance(const Domain& domain, Point x);

}  // namespace oracle
