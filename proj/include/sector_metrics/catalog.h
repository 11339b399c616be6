#pragma once

#include "sector_metrics/geometry.h"
#include "sector_metrics/metrics.h"

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sector_metrics {

enum class Side { Lower, Upper };

std::string_view to_string(Side side);

/// How a witness family reaches its constant: at a fixed pair, or along
/// k -> 0+ / k -> 1- in the approach parameter.
enum class WitnessKind { Attained, LimitZero, LimitOne };

using PointPair = std::array<Point, 2>;

struct WitnessFamily {
    std::string id;
    Side side = Side::Upper;
    WitnessKind kind = WitnessKind::Attained;
    /// (theta, k) -> pair. Attained witnesses ignore k.
    std::function<PointPair(double theta, double k)> generator;
};

struct AngleRange {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = false;
    bool hi_closed = false;

    [[nodiscard]] bool contains(double theta) const noexcept;
};

/// Either the sector family S_theta over an angle range, or one fixed domain.
class DomainFamily {
public:
    static DomainFamily sectors(AngleRange range);
    static DomainFamily fixed(Domain domain);

    [[nodiscard]] bool is_sector_family() const noexcept { return sector_family_; }
    [[nodiscard]] const AngleRange& range() const noexcept { return range_; }
    [[nodiscard]] bool admits(double theta) const noexcept;
    /// Concrete domain; theta is ignored for fixed families.
    [[nodiscard]] Domain at(double theta) const;
    [[nodiscard]] std::string describe() const;

private:
    DomainFamily(bool sector_family, AngleRange range, Domain fixed)
        : sector_family_(sector_family), range_(range), fixed_(fixed) {}

    bool sector_family_;
    AngleRange range_;
    Domain fixed_;
};

/// One inequality lower(theta) <= numerator / denominator <= upper(theta).
struct InequalityRecord {
    std::string id;
    std::string statement;
    DomainFamily family;
    MetricKind numerator;
    MetricKind denominator;
    std::function<double(double)> lower_const;
    std::function<double(double)> upper_const;
    std::vector<WitnessFamily> witnesses;

    /// nullptr when the side has no sharpness witness.
    [[nodiscard]] const WitnessFamily* witness(Side side) const noexcept;
    [[nodiscard]] double constant(Side side, double theta) const;
    /// numerator / denominator for the pair; NaN when both vanish.
    [[nodiscard]] double quotient(const Domain& domain, Point x, Point y) const;
};

/// Every inequality, in a fixed order. Record ids are "R<n>" with an optional
/// ".<item>" for numbered parts of one result and a "-<domain>" suffix when a
/// general-domain result is instantiated on a fixed domain.
const std::vector<InequalityRecord>& catalog();

/// Throws Error(OutOfRange) for an unknown id.
const InequalityRecord& find_record(std::string_view id);

/// Angles at which the whole catalog is certified.
std::vector<double> default_theta_grid();

/// Reported angle for fixed-domain records.
inline constexpr double kFixedDomainTheta = 0.0;

}  // namespace sector_metrics
