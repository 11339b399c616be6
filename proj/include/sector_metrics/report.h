#pragma once

#include "sector_metrics/qc_distortion.h"
#include "sector_metrics/verification.h"

#include <iosfwd>
#include <string>
#include <vector>

namespace sector_metrics {

/// Sorts by (record_id, theta), the order every serialized list uses.
void sort_reports(std::vector<VerificationReport>& reports);

/// JSON array of objects with the keys record, theta, samples, sup_observed,
/// inf_observed, lower_bound, upper_bound, violations, sharpness_gap_upper,
/// sharpness_gap_lower, seed, tolerance. Doubles are written in their
/// shortest round-trip form; non-finite values become null.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// Header record_id,theta,lower_bound,upper_bound,sup_observed,inf_observed
/// and one row per report, numbers with 17 significant digits.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

std::string sharpness_to_json(const std::vector<SharpnessResult>& results);

std::string qc_to_json(const std::vector<SweepResult>& sweeps, const std::vector<DistortionReport>& maps);

/// Writes text to path, or to fallback when path is empty. Throws
/// Error(IoFailure) on failure.
void write_output(const std::string& path, const std::string& text, std::ostream& fallback);

}  // namespace sector_metrics
