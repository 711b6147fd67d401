#pragma once

#include "rsmamec/montecarlo.hpp"
#include "rsmamec/optimizer.hpp"
#include "rsmamec/system_model.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsmamec {

enum class SweepAxis { Point, TaskLength, Power, LatencyStudy };
enum class LatencyVary { UserCpu, MecRatio };
enum class ReportScheme { Rsma, NomaPuFirst, NomaSuFirst, Analytic };
enum class OutputFormat { Csv, Json };

std::string_view to_string(SweepAxis axis);
std::string_view to_string(LatencyVary vary);
std::string_view to_string(ReportScheme scheme);
std::string_view to_string(OutputFormat format);

std::optional<ReportScheme> parse_report_scheme(std::string_view name);
std::optional<OutputFormat> parse_output_format(std::string_view name);

// Everything needed to reproduce a run. Sweep values are in the axis unit:
// task_length -> M_b bits, power -> dBm (P_a = P_b), latency_study ->
// f_user Hz or N depending on latency_vary.
struct ExperimentConfig {
    SystemParams scenario;
    SweepAxis axis = SweepAxis::Point;
    std::vector<double> values;
    LatencyVary latency_vary = LatencyVary::UserCpu;
    std::vector<ReportScheme> schemes{ReportScheme::Rsma};
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;

    bool needs_simulation() const;
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys, bad
/// numbers and invariant violations raise ConfigError.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

/// Fills default sweep values for the axis when none are given.
void apply_default_values(ExperimentConfig& cfg);

/// Throws ConfigError on the first invariant the config breaks.
void validate_config(const ExperimentConfig& cfg);

/// Canonical `key = value` text; parse_config on it restores the config.
std::string config_text(const ExperimentConfig& cfg);

struct ResultRow {
    std::string sweep_axis;
    std::optional<double> sweep_value;
    std::string scheme;
    bool feasible = true;
    std::string diagnostic;
    std::optional<double> ps_mean;
    std::optional<double> ps_stderr;
    std::optional<double> ps_analytic;
    std::optional<OffloadPlan> plan;
    std::optional<double> case1_frac;
    std::optional<double> case2_frac;
    std::optional<double> case3_frac;
    std::optional<WilsonInterval> wilson;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
};

struct ResultTable {
    ExperimentConfig config;
    std::vector<ResultRow> rows;

    bool all_infeasible() const;
};

/// One row per (sweep point, scheme), in sweep order. Infeasible points
/// produce flagged rows. `workers` only affects wall time.
ResultTable run_experiment(const ExperimentConfig& cfg, unsigned workers = 1);

inline constexpr std::string_view kCsvColumns =
    "sweep_axis,sweep_value,scheme,ps_mean,ps_stderr,ps_analytic,eta_a,eta_b,t2,t3,"
    "case1_frac,case2_frac,case3_frac,seed,trials";

void write_csv(const ResultTable& table, std::ostream& out);
void write_json(const ResultTable& table, std::ostream& out);

/// Writes to cfg.output_path in cfg.format, or to `fallback` when the path
/// is empty. Throws std::runtime_error naming the path if it cannot be opened.
void emit_results(const ResultTable& table, std::ostream& fallback);

/// Shortest round-trip decimal form.
std::string format_number(double value);

}  // namespace rsmamec
