#include "sector_metrics/report.h"

#include "sector_metrics/error.h"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace sector_metrics {

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const VerificationReport& r) {
    ordered_json j;
    j["record"] = r.record_id;
    j["theta"] = r.theta;
    j["samples"] = r.samples;
    j["sup_observed"] = r.sup_observed;
    j["inf_observed"] = r.inf_observed;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["violations"] = r.violations;
    j["sharpness_gap_upper"] = r.sharpness_gap_upper;
    j["sharpness_gap_lower"] = r.sharpness_gap_lower;
    j["seed"] = r.seed;
    j["tolerance"] = r.tolerance;
    return j;
}

std::string_view kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::Attained: return "attained";
        case WitnessKind::LimitZero: return "limit k->0+";
        case WitnessKind::LimitOne: return "limit k->1-";
    }
    return "unknown";
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
        if (a.record_id != b.record_id) return a.record_id < b.record_id;
        return a.theta < b.theta;
    });
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return dump(arr);
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "record_id,theta,lower_bound,upper_bound,sup_observed,inf_observed\n";
    for (const auto& r : reports) {
        out += fmt::format("{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.record_id, r.theta, r.lower_bound,
                           r.upper_bound, r.sup_observed, r.inf_observed);
    }
    return out;
}

std::string sharpness_to_json(const std::vector<SharpnessResult>& results) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
        ordered_json j;
        j["record"] = r.record_id;
        j["theta"] = r.theta;
        j["side"] = std::string(to_string(r.side));
        j["kind"] = std::string(kind_name(r.kind));
        j["constant"] = r.constant;
        j["best"] = r.best;
        j["gap"] = std::abs(r.best - r.constant);
        j["monotone"] = r.monotone;
        j["sequence"] = r.sequence;
        arr.push_back(std::move(j));
    }
    return dump(arr);
}

std::string qc_to_json(const std::vector<SweepResult>& sweeps, const std::vector<DistortionReport>& maps) {
    ordered_json root;
    ordered_json s = ordered_json::array();
    for (const auto& w : sweeps) {
        s.push_back({{"name", w.name}, {"points", w.points}, {"violations", w.violations}, {"max_excess", w.max_excess}});
    }
    root["elementary"] = std::move(s);

    ordered_json m = ordered_json::array();
    for (const auto& r : maps) {
        ordered_json j;
        j["family"] = to_string(r.family);
        j["alpha"] = r.alpha;
        j["beta"] = r.beta;
        j["K"] = r.K;
        j["C"] = r.C;
        j["dilatation"] = r.assumed_dilatation ? "assumed dilatation" : "conformal";
        j["samples"] = r.samples;
        j["seed"] = r.seed;
        j["tolerance"] = r.tolerance;
        j["ratio_min"] = r.ratio_min;
        j["ratio_max"] = r.ratio_max;
        j["lower_margin"] = r.lower_margin;
        j["upper_margin"] = r.upper_margin;
        j["violations"] = r.violations;
        if (r.family == MapFamily::PowerMap) {
            j["ratio_low"] = r.ratio_low;
            j["ratio_high"] = r.ratio_high;
            j["witness_limit_zero"] = r.witness_limit_zero;
            j["witness_limit_one"] = r.witness_limit_one;
        }
        m.push_back(std::move(j));
    }
    root["maps"] = std::move(m);
    return dump(root);
}

void write_output(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        fallback.flush();
        if (!fallback) throw Error(ErrorCode::IoFailure, "failed writing report");
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::IoFailure, fmt::format("cannot open '{}' for writing", path));
    f << text;
    f.close();
    if (!f) throw Error(ErrorCode::IoFailure, fmt::format("failed writing '{}'", path));
}

}  // namespace sector_metrics
