#include "sector_metrics/cli.h"

#include "sector_metrics/catalog.h"
#include "sector_metrics/error.h"
#include "sector_metrics/metrics.h"
#include "sector_metrics/qc_distortion.h"
#include "sector_metrics/report.h"
#include "sector_metrics/verification.h"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace sector_metrics {

namespace {

constexpr std::size_t kDefaultVerifySamples = 100000;
constexpr std::size_t kDefaultTableSamples = 10000;
constexpr std::size_t kDefaultQcSamples = 10000;
constexpr std::uint64_t kDefaultSeed = 42;
constexpr double kAttainedTolerance = 1e-12;
constexpr double kLimitTolerance = 1e-3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string domain = "halfplane";
    double theta = kPi;
    double height = kPi;
    std::string x;
    std::string y;
    std::vector<std::string> records;
    std::string theta_grid;
    std::size_t samples = 0;
    std::uint64_t seed = kDefaultSeed;
    double tolerance = kDefaultTolerance;
    std::string format = "json";
    std::string table_format = "csv";
    std::string output;
    std::string side = "both";
};

double parse_double(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError(fmt::format("'{}' is not a number", text));
    }
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size()) throw UsageError(fmt::format("'{}' is not a number", text));
    return v;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(parse_double(item));
    }
    return out;
}

Point parse_point(const std::string& text) {
    const std::vector<double> v = parse_list(text);
    if (v.size() != 2) throw UsageError(fmt::format("point '{}' must be given as re,im", text));
    return {v[0], v[1]};
}

Domain make_domain(const RunConfig& cfg) {
    if (cfg.domain == "halfplane") return Domain::half_plane();
    if (cfg.domain == "disk") return Domain::unit_disk();
    if (cfg.domain == "sector") return Domain::sector(cfg.theta);
    if (cfg.domain == "strip") return Domain::strip(cfg.height);
    if (cfg.domain == "punctured") return Domain::punctured_plane();
    throw UsageError(fmt::format("unknown domain '{}'", cfg.domain));
}

std::vector<double> theta_grid(const RunConfig& cfg, bool given) {
    if (!given) return default_theta_grid();
    std::vector<double> grid = parse_list(cfg.theta_grid);
    if (grid.empty()) throw UsageError("the theta grid is empty");
    return grid;
}

std::vector<const InequalityRecord*> selected_records(const RunConfig& cfg) {
    std::vector<const InequalityRecord*> out;
    if (cfg.records.empty()) {
        for (const auto& r : catalog()) out.push_back(&r);
    } else {
        for (const auto& id : cfg.records) out.push_back(&find_record(id));
    }
    return out;
}

// (record, theta) jobs; fixed-domain records run once.
std::vector<std::pair<const InequalityRecord*, double>> jobs(const RunConfig& cfg, bool grid_given) {
    const std::vector<double> grid = theta_grid(cfg, grid_given);
    std::vector<std::pair<const InequalityRecord*, double>> out;
    for (const InequalityRecord* r : selected_records(cfg)) {
        if (!r->family.is_sector_family()) {
            out.emplace_back(r, kFixedDomainTheta);
            continue;
        }
        bool any = false;
        for (double t : grid) {
            if (!r->family.admits(t)) continue;
            out.emplace_back(r, t);
            any = true;
        }
        if (!any && !cfg.records.empty()) {
            throw Error(ErrorCode::InvalidTheta,
                        fmt::format("no grid angle lies in the range of {} ({})", r->id, r->family.describe()));
        }
    }
    return out;
}

std::vector<VerificationReport> run_checks(const RunConfig& cfg, bool grid_given, std::size_t default_samples) {
    std::vector<VerificationReport> reports;
    const std::size_t n = cfg.samples == 0 ? default_samples : cfg.samples;
    for (const auto& [record, theta] : jobs(cfg, grid_given)) {
        reports.push_back(check_bound(*record, theta, n, cfg.seed, cfg.tolerance));
    }
    sort_reports(reports);
    return reports;
}

int cmd_dist(const RunConfig& cfg, std::ostream& out) {
    const Domain d = make_domain(cfg);
    const Point x = parse_point(cfg.x);
    const Point y = parse_point(cfg.y);
    require_interior(d, x);
    require_interior(d, y);

    int code = kExitOk;
    out << "domain: " << d.describe() << "\n";
    for (MetricKind m : kAllMetrics) {
        try {
            out << fmt::format("{}: {:.15g}\n", to_string(m), evaluate(m, d, x, y));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::UnsupportedDomain && e.code() != ErrorCode::NumericFallbackRequired) throw;
            out << fmt::format("{}: unsupported\n", to_string(m));
            // th(rho/2) is only printed where supported; s must always exist.
            if (m == MetricKind::TriangularRatio) code = kExitUnsupported;
        }
    }
    try {
        const BoundaryInfimum b = boundary_inf_sum(d, x, y);
        out << fmt::format("boundary infimum: {:.15g} at ({:.15g}, {:.15g}) [{}]\n", b.value, b.minimizer.real(),
                           b.minimizer.imag(), to_string(b.which));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NumericFallbackRequired) throw;
        out << "boundary infimum: unsupported\n";
    }
    return code;
}

int cmd_verify(const RunConfig& cfg, bool grid_given, std::ostream& out) {
    const auto reports = run_checks(cfg, grid_given, kDefaultVerifySamples);
    write_output(cfg.output, cfg.format == "csv" ? reports_to_csv(reports) : reports_to_json(reports), out);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    return ok ? kExitOk : kExitViolation;
}

int cmd_table(const RunConfig& cfg, bool grid_given, std::ostream& out) {
    const auto reports = run_checks(cfg, grid_given, kDefaultTableSamples);
    write_output(cfg.output, cfg.table_format == "json" ? reports_to_json(reports) : reports_to_csv(reports), out);
    return kExitOk;
}

int cmd_sharpness(const RunConfig& cfg, bool grid_given, std::ostream& out) {
    std::vector<Side> sides;
    if (cfg.side == "lower" || cfg.side == "both") sides.push_back(Side::Lower);
    if (cfg.side == "upper" || cfg.side == "both") sides.push_back(Side::Upper);

    std::vector<SharpnessResult> results;
    bool ok = true;
    for (const auto& [record, theta] : jobs(cfg, grid_given)) {
        for (Side side : sides) {
            if (record->witness(side) == nullptr) {
                if (!cfg.records.empty() && cfg.side != "both") sharpness_probe(*record, theta, side);  // raises NoWitness
                continue;
            }
            SharpnessResult r = sharpness_probe(*record, theta, side);
            const double tol = r.kind == WitnessKind::Attained ? kAttainedTolerance : kLimitTolerance;
            if (!(std::abs(r.best - r.constant) <= tol) || !r.monotone) ok = false;
            results.push_back(std::move(r));
        }
    }
    write_output(cfg.output, sharpness_to_json(results), out);
    return ok ? kExitOk : kExitViolation;
}

int cmd_qc(const RunConfig& cfg, std::ostream& out) {
    const std::size_t n = cfg.samples == 0 ? kDefaultQcSamples : cfg.samples;
    const auto sweeps = elementary_checks();
    std::vector<DistortionReport> maps;
    const std::vector<std::pair<double, double>> angles{
        {kPi / 3.0, kPi / 2.0}, {kPi / 2.0, kPi}, {kPi / 2.0, 1.5 * kPi}, {kPi, 1.75 * kPi}};
    bool ok = std::all_of(sweeps.begin(), sweeps.end(), [](const SweepResult& s) { return s.violations == 0; });
    for (const auto& [a, b] : angles) {
        for (MapFamily fam : {MapFamily::AngleStretch, MapFamily::PowerMap}) {
            if (fam == MapFamily::PowerMap && (a > kPi || b > kPi)) continue;
            DistortionReport r = empirical_distortion(fam, a, b, n, cfg.seed, cfg.tolerance);
            if (r.violations != 0) ok = false;
            if (fam == MapFamily::PowerMap) {
                const double c = b * std::sin(0.5 * a) / (a * std::sin(0.5 * b));
                if (!(std::abs(r.witness_limit_zero - c) <= kLimitTolerance) ||
                    !(std::abs(r.witness_limit_one - 1.0) <= kLimitTolerance)) {
                    ok = false;
                }
            }
            maps.push_back(r);
        }
    }
    write_output(cfg.output, qc_to_json(sweeps, maps), out);
    return ok ? kExitOk : kExitViolation;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnsupportedDomain:
        case ErrorCode::NumericFallbackRequired:
        case ErrorCode::UnsupportedPair:
        case ErrorCode::NoWitness:
            return kExitUnsupported;
        case ErrorCode::IoFailure:
            return kExitIo;
        default:
            return kExitDomain;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intrinsic metrics on sectors, strips and related planar domains", "sector_metrics"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Random seed");
        sub->add_option("--samples", cfg.samples, "Samples per run")->check(CLI::PositiveNumber);
        sub->add_option("--tolerance", cfg.tolerance, "Absolute tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
    };
    const auto add_records = [&cfg](CLI::App* sub) {
        sub->add_option("--record", cfg.records, "Record id (repeatable; default: all)");
        return sub->add_option("--theta-grid", cfg.theta_grid, "Comma-separated sector angles in radians");
    };

    CLI::App* dist = app.add_subcommand("dist", "Evaluate every metric for one pair");
    dist->add_option("--domain", cfg.domain, "halfplane, disk, sector, strip or punctured")
        ->check(CLI::IsMember({"halfplane", "disk", "sector", "strip", "punctured"}));
    dist->add_option("--theta", cfg.theta, "Sector angle in radians");
    dist->add_option("--height", cfg.height, "Strip height");
    dist->add_option("--x", cfg.x, "First point as re,im")->required();
    dist->add_option("--y", cfg.y, "Second point as re,im")->required();

    CLI::App* verify = app.add_subcommand("verify", "Certify catalog bounds by sampling");
    add_common(verify);
    CLI::Option* verify_grid = add_records(verify);
    verify->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CLI::App* sharp = app.add_subcommand("sharpness", "Evaluate the witness families");
    sharp->add_option("--output", cfg.output, "Write the report here instead of stdout");
    CLI::Option* sharp_grid = add_records(sharp);
    sharp->add_option("--side", cfg.side, "lower, upper or both")->check(CLI::IsMember({"lower", "upper", "both"}));

    CLI::App* qc = app.add_subcommand("qc-check", "Hoelder inequalities and map distortion checks");
    add_common(qc);

    CLI::App* table = app.add_subcommand("table", "CSV of constants and observed extremes against theta");
    add_common(table);
    CLI::Option* table_grid = add_records(table);
    table->add_option("--format", cfg.table_format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (dist->parsed()) return cmd_dist(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, verify_grid->count() > 0, out);
        if (sharp->parsed()) return cmd_sharpness(cfg, sharp_grid->count() > 0, out);
        if (qc->parsed()) return cmd_qc(cfg, out);
        if (table->parsed()) return cmd_table(cfg, table_grid->count() > 0, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return kExitUsage;
}

}  // namespace sector_metrics
