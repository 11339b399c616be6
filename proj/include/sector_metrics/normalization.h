#pragma once

#include "sector_metrics/geometry.h"
#include "sector_metrics/moebius.h"

#include <array>

namespace sector_metrics {

/// Two circles centered on the real axis, orthogonal to each other. The first
/// passes through the pair being normalized (it carries their hyperbolic
/// geodesic); the second is centered where L(x, y) meets the real axis.
struct OrthoCircles {
    double c1 = 0.0;
    double r1 = 0.0;
    double c2 = 0.0;
    double r2 = 0.0;
};

/// Throws Error(DegenerateConfiguration) when Im x == Im y or Re x == Re y.
OrthoCircles orthogonal_circles(Point x, Point y);

enum class HalfPlaneCase { Horizontal, Vertical, OrthogonalCircles, OrthogonalCirclesFlipped };

struct HalfPlaneNormalization {
    MoebiusMap map;
    HalfPlaneCase which;
};

/// Moebius self-map g of the upper half-plane with |g(x)| = |g(y)| = 1 and
/// Im g(x) = Im g(y). Throws Error(DegenerateInput) when x == y.
HalfPlaneNormalization normalize_halfplane_detailed(Point x, Point y);
MoebiusMap normalize_halfplane(Point x, Point y);

/// The formula for g in the general-position case, evaluated term by term as
/// printed. Prone to cancellation when Im x and Im y are close; exposed as a
/// cross-check for the rearranged coefficients used by normalize_halfplane.
MoebiusMap orthogonal_circles_map_reference(const OrthoCircles& circles, bool flip_r2);

/// Result of carrying a pair to the symmetric normal form by a conformal
/// self-map f = h^-1 o g o h of a sector (h(z) = z^(pi/theta)) or of the
/// strip of height pi (h(z) = exp z).
class NormalizedPair {
public:
    enum class Conjugation { PowerMap, Exponential };

    NormalizedPair(Conjugation conj, double theta, MoebiusMap inner, double k,
                   std::array<Point, 2> images, double pre_shift = 0.0);

    /// Normal-form parameter in (0, 1): images are e^{(1 -+ k) theta i / 2}
    /// for sectors and (1 -+ k) pi i / 2 for the strip.
    [[nodiscard]] double k() const noexcept { return k_; }
    [[nodiscard]] const std::array<Point, 2>& images() const noexcept { return images_; }
    [[nodiscard]] const MoebiusMap& inner_map() const noexcept { return inner_; }
    [[nodiscard]] Conjugation conjugation() const noexcept { return conj_; }
    [[nodiscard]] double theta() const noexcept { return theta_; }
    /// Horizontal translation applied before exp in the strip case; for
    /// sectors z is divided by e^pre_shift before the power map.
    [[nodiscard]] double pre_shift() const noexcept { return pre_shift_; }

    /// f(z) for any interior point of the domain.
    [[nodiscard]] Point apply(Point z) const;

private:
    Conjugation conj_;
    double theta_;
    MoebiusMap inner_;
    double k_;
    std::array<Point, 2> images_;
    double pre_shift_;
};

/// Conformal self-map of S_theta sending (x, y) to
/// (e^{(1-k) theta i/2}, e^{(1+k) theta i/2}).
NormalizedPair normalize_sector(double theta, Point x, Point y);

/// Conformal self-map of the strip 0 < Im z < pi sending (x, y) to
/// ((1-k) pi i/2, (1+k) pi i/2).
NormalizedPair normalize_strip(Point x, Point y);

}  // namespace sector_metrics
