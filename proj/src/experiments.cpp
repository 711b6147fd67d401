#include "rsmamec/experiments.hpp"

#include "rsmamec/analytics.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rsmamec {

namespace {

struct ScenarioKey {
    std::string_view name;
    double SystemParams::*field;
};

constexpr std::array kScenarioKeys{
    ScenarioKey{"bandwidth_hz", &SystemParams::bandwidth_hz},
    ScenarioKey{"cycles_per_bit", &SystemParams::cycles_per_bit},
    ScenarioKey{"mec_cpu_ratio", &SystemParams::mec_cpu_ratio},
    ScenarioKey{"latency_budget_s", &SystemParams::latency_budget_s},
    ScenarioKey{"distance_a_m", &SystemParams::distance_a_m},
    ScenarioKey{"distance_b_m", &SystemParams::distance_b_m},
    ScenarioKey{"path_loss_exponent", &SystemParams::path_loss_exponent},
    ScenarioKey{"user_cpu_hz", &SystemParams::user_cpu_hz},
    ScenarioKey{"power_a_w", &SystemParams::power_a_w},
    ScenarioKey{"power_b_w", &SystemParams::power_b_w},
    ScenarioKey{"noise_power_w", &SystemParams::noise_power_w},
    ScenarioKey{"task_a_bits", &SystemParams::task_a_bits},
    ScenarioKey{"task_b_bits", &SystemParams::task_b_bits},
};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s)
{
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = s.find(',');
        const auto item = trim(s.substr(0, comma));
        if (!item.empty())
            out.push_back(item);
        if (comma == std::string_view::npos)
            break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

double parse_double(std::string_view key, std::string_view text)
{
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
        throw ConfigError("config key '" + std::string(key) + "': not a finite number: '" + std::string(text) + "'");
    return value;
}

std::uint64_t parse_u64(std::string_view key, std::string_view text)
{
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        // Accept integral floating notation such as 1e6.
        const double d = parse_double(key, text);
        if (d < 0.0 || d != std::floor(d) || d > 1.8e19)
            throw ConfigError("config key '" + std::string(key) + "': not an unsigned integer: '"
                              + std::string(text) + "'");
        return static_cast<std::uint64_t>(d);
    }
    return value;
}

std::optional<SweepAxis> parse_axis(std::string_view s)
{
    for (auto a : {SweepAxis::Point, SweepAxis::TaskLength, SweepAxis::Power, SweepAxis::LatencyStudy})
        if (s == to_string(a))
            return a;
    return std::nullopt;
}

std::optional<LatencyVary> parse_vary(std::string_view s)
{
    for (auto v : {LatencyVary::UserCpu, LatencyVary::MecRatio})
        if (s == to_string(v))
            return v;
    return std::nullopt;
}

std::string axis_label(const ExperimentConfig& cfg)
{
    std::string label(to_string(cfg.axis));
    if (cfg.axis == SweepAxis::LatencyStudy)
        label += ":" + std::string(to_string(cfg.latency_vary));
    return label;
}

}  // namespace

std::string_view to_string(SweepAxis axis)
{
    switch (axis) {
    case SweepAxis::Point:
        return "point";
    case SweepAxis::TaskLength:
        return "task_length";
    case SweepAxis::Power:
        return "power";
    case SweepAxis::LatencyStudy:
        return "latency_study";
    }
    return "?";
}

std::string_view to_string(LatencyVary vary) { return vary == LatencyVary::UserCpu ? "f_user" : "N"; }

std::string_view to_string(ReportScheme scheme)
{
    switch (scheme) {
    case ReportScheme::Rsma:
        return "RSMA";
    case ReportScheme::NomaPuFirst:
        return "NOMA_PU_first";
    case ReportScheme::NomaSuFirst:
        return "NOMA_SU_first";
    case ReportScheme::Analytic:
        return "analytic";
    }
    return "?";
}

std::string_view to_string(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "json"; }

std::optional<ReportScheme> parse_report_scheme(std::string_view name)
{
    for (auto s : {ReportScheme::Rsma, ReportScheme::NomaPuFirst, ReportScheme::NomaSuFirst, ReportScheme::Analytic})
        if (name == to_string(s))
            return s;
    return std::nullopt;
}

std::optional<OutputFormat> parse_output_format(std::string_view name)
{
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    return std::nullopt;
}

bool ExperimentConfig::needs_simulation() const
{
    return std::any_of(schemes.begin(), schemes.end(), [](ReportScheme s) { return s != ReportScheme::Analytic; });
}

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

ExperimentConfig parse_config(std::string_view text)
{
    ExperimentConfig cfg;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        auto scenario = std::find_if(kScenarioKeys.begin(), kScenarioKeys.end(),
                                     [&](const ScenarioKey& k) { return k.name == key; });
        if (scenario != kScenarioKeys.end()) {
            cfg.scenario.*(scenario->field) = parse_double(key, value);
        } else if (key == "power_a_dbm") {
            cfg.scenario.power_a_w = dbm_to_watt(parse_double(key, value));
        } else if (key == "power_b_dbm") {
            cfg.scenario.power_b_w = dbm_to_watt(parse_double(key, value));
        } else if (key == "sweep_axis") {
            auto axis = parse_axis(value);
            if (!axis)
                throw ConfigError("config key 'sweep_axis': unknown axis '" + std::string(value)
                                  + "' (point | task_length | power | latency_study)");
            cfg.axis = *axis;
        } else if (key == "sweep_values") {
            cfg.values.clear();
            for (auto item : split_list(value))
                cfg.values.push_back(parse_double(key, item));
        } else if (key == "latency_vary") {
            auto vary = parse_vary(value);
            if (!vary)
                throw ConfigError("config key 'latency_vary': expected f_user or N");
            cfg.latency_vary = *vary;
        } else if (key == "schemes") {
            cfg.schemes.clear();
            for (auto item : split_list(value)) {
                auto s = parse_report_scheme(item);
                if (!s)
                    throw ConfigError("config key 'schemes': unknown scheme '" + std::string(item) + "'");
                cfg.schemes.push_back(*s);
            }
        } else if (key == "trials") {
            cfg.trials = parse_u64(key, value);
        } else if (key == "seed") {
            cfg.seed = parse_u64(key, value);
        } else if (key == "output_path") {
            cfg.output_path = std::string(value);
        } else if (key == "output_format") {
            auto f = parse_output_format(value);
            if (!f)
                throw ConfigError("config key 'output_format': expected csv or json");
            cfg.format = *f;
        } else {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void apply_default_values(ExperimentConfig& cfg)
{
    if (!cfg.values.empty())
        return;
    switch (cfg.axis) {
    case SweepAxis::Point:
        break;
    case SweepAxis::TaskLength:
        for (int kb = 1; kb <= 11; ++kb)
            cfg.values.push_back(kb * 1000.0);
        break;
    case SweepAxis::Power:
        for (int dbm = 0; dbm <= 40; dbm += 5)
            cfg.values.push_back(dbm);
        break;
    case SweepAxis::LatencyStudy:
        if (cfg.latency_vary == LatencyVary::UserCpu)
            cfg.values = {0.5e9, 0.75e9, 1.0e9, 1.25e9, 1.5e9};
        else
            cfg.values = {2, 3, 4, 5, 6, 7, 8, 9, 10};
        break;
    }
}

void validate_config(const ExperimentConfig& cfg)
{
    require_valid(cfg.scenario);
    if (cfg.schemes.empty())
        throw ConfigError("config: schemes list is empty");
    if (cfg.axis != SweepAxis::Point && cfg.values.empty())
        throw ConfigError("config: sweep has no values");
    if (cfg.axis == SweepAxis::Point && !cfg.values.empty())
        throw ConfigError("config: sweep_values given without a sweep_axis");
    for (std::size_t i = 1; i < cfg.values.size(); ++i)
        if (!(cfg.values[i] > cfg.values[i - 1]))
            throw ConfigError("config: sweep_values must be strictly increasing");
    if (cfg.needs_simulation() && cfg.trials < kMinTrials)
        throw ConfigError("config: simulation runs need trials >= " + std::to_string(kMinTrials));
}

std::string config_text(const ExperimentConfig& cfg)
{
    std::ostringstream out;
    for (const auto& k : kScenarioKeys)
        out << k.name << " = " << format_number(cfg.scenario.*(k.field)) << '\n';
    out << "sweep_axis = " << to_string(cfg.axis) << '\n';
    if (!cfg.values.empty()) {
        out << "sweep_values = ";
        for (std::size_t i = 0; i < cfg.values.size(); ++i)
            out << (i ? "," : "") << format_number(cfg.values[i]);
        out << '\n';
    }
    out << "latency_vary = " << to_string(cfg.latency_vary) << '\n';
    out << "schemes = ";
    for (std::size_t i = 0; i < cfg.schemes.size(); ++i)
        out << (i ? "," : "") << to_string(cfg.schemes[i]);
    out << '\n';
    out << "trials = " << cfg.trials << '\n';
    out << "seed = " << cfg.seed << '\n';
    out << "output_format = " << to_string(cfg.format) << '\n';
    return out.str();
}

bool ResultTable::all_infeasible() const
{
    return !rows.empty() && std::none_of(rows.begin(), rows.end(), [](const ResultRow& r) { return r.feasible; });
}

namespace {

struct SweepPoint {
    std::optional<double> value;
    SystemParams scenario;
    PlanResult plan;
};

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : "; ") + p;
    return out;
}

PlanResult plan_for(const SystemParams& scenario)
{
    auto violations = validate_params(scenario);
    if (!violations.empty()) {
        PlanResult r;
        r.diagnostics = std::move(violations);
        return r;
    }
    return optimal_offload_plan(scenario);
}

std::vector<SweepPoint> sweep_points(const ExperimentConfig& cfg)
{
    std::vector<SweepPoint> points;
    if (cfg.axis == SweepAxis::Point) {
        points.push_back({std::nullopt, cfg.scenario, plan_for(cfg.scenario)});
        return points;
    }

    // Offload phase held fixed at the base scenario's optimum.
    double fixed_t2 = 0.0;
    if (cfg.axis == SweepAxis::LatencyStudy) {
        const auto base = optimal_offload_plan(cfg.scenario);
        if (base.kind != PlanKind::Offload)
            throw ConfigError("latency_study: base scenario must have an offloading optimum ("
                              + (base.diagnostics.empty() ? std::string("local-only") : join(base.diagnostics))
                              + ")");
        fixed_t2 = base.plan->t2_s;
    }

    for (double v : cfg.values) {
        SystemParams s = cfg.scenario;
        switch (cfg.axis) {
        case SweepAxis::TaskLength:
            s.task_b_bits = v;
            break;
        case SweepAxis::Power:
            s.power_a_w = s.power_b_w = dbm_to_watt(v);
            break;
        case SweepAxis::LatencyStudy: {
            if (cfg.latency_vary == LatencyVary::UserCpu)
                s.user_cpu_hz = v;
            else
                s.mec_cpu_ratio = v;
            const double t3 = (s.task_a_bits + s.task_b_bits) * s.cycles_per_bit
                              / ((s.mec_cpu_ratio + 2.0) * s.user_cpu_hz);
            s.latency_budget_s = fixed_t2 + t3;
            break;
        }
        case SweepAxis::Point:
            break;
        }
        points.push_back({v, s, plan_for(s)});
    }
    return points;
}

}  // namespace

ResultTable run_experiment(const ExperimentConfig& cfg_in, unsigned workers)
{
    ResultTable table;
    table.config = cfg_in;
    apply_default_values(table.config);
    validate_config(table.config);
    const auto& cfg = table.config;
    const auto label = axis_label(cfg);

    for (const auto& point : sweep_points(cfg)) {
        for (auto scheme : cfg.schemes) {
            ResultRow row;
            row.sweep_axis = label;
            row.sweep_value = point.value;
            row.scheme = std::string(to_string(scheme));
            if (!point.plan.feasible()) {
                row.feasible = false;
                row.diagnostic = join(point.plan.diagnostics);
                table.rows.push_back(std::move(row));
                continue;
            }
            const auto& plan = *point.plan.plan;
            row.plan = plan;
            const double analytic = plan_success_probability(plan, point.scenario);

            if (scheme == ReportScheme::Analytic) {
                row.ps_mean = analytic;
                row.ps_stderr = 0.0;
                row.ps_analytic = analytic;
            } else {
                const Scheme mc = scheme == ReportScheme::Rsma          ? Scheme::Rsma
                                  : scheme == ReportScheme::NomaPuFirst ? Scheme::NomaPuFirst
                                                                        : Scheme::NomaSuFirst;
                const auto est = estimate_psucc(point.scenario, plan, mc, cfg.trials, cfg.seed, workers);
                row.ps_mean = est.mean;
                row.ps_stderr = est.std_err;
                row.wilson = est.wilson;
                row.seed = cfg.seed;
                row.trials = cfg.trials;
                if (mc == Scheme::Rsma) {
                    row.ps_analytic = analytic;
                    row.case1_frac = est.case_fraction(Case::I);
                    row.case2_frac = est.case_fraction(Case::II);
                    row.case3_frac = est.case_fraction(Case::III);
                }
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

nlohmann::json opt_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

}  // namespace

void write_csv(const ResultTable& table, std::ostream& out)
{
    out << "# rsmamec results; resolved config follows (strip '# ' to re-run)\n";
    std::istringstream cfg(config_text(table.config));
    for (std::string line; std::getline(cfg, line);)
        out << "# " << line << '\n';
    out << kCsvColumns << '\n';
    for (const auto& r : table.rows) {
        out << r.sweep_axis << ',' << opt(r.sweep_value) << ',' << r.scheme << ',';
        if (!r.feasible) {
            out << "infeasible,,,,,,,,,," << r.seed << ',' << r.trials << '\n';
            continue;
        }
        out << opt(r.ps_mean) << ',' << opt(r.ps_stderr) << ',' << opt(r.ps_analytic) << ','
            << format_number(r.plan->eta_a) << ',' << format_number(r.plan->eta_b) << ','
            << format_number(r.plan->t2_s) << ',' << format_number(r.plan->t3_s) << ',' << opt(r.case1_frac) << ','
            << opt(r.case2_frac) << ',' << opt(r.case3_frac) << ',' << r.seed << ',' << r.trials << '\n';
    }
}

void write_json(const ResultTable& table, std::ostream& out)
{
    const auto& cfg = table.config;
    nlohmann::ordered_json config;
    for (const auto& k : kScenarioKeys)
        config[std::string(k.name)] = cfg.scenario.*(k.field);
    config["sweep_axis"] = std::string(to_string(cfg.axis));
    config["sweep_values"] = cfg.values;
    config["latency_vary"] = std::string(to_string(cfg.latency_vary));
    std::vector<std::string> schemes;
    for (auto s : cfg.schemes)
        schemes.emplace_back(to_string(s));
    config["schemes"] = schemes;
    config["trials"] = cfg.trials;
    config["seed"] = cfg.seed;
    config["output_format"] = std::string(to_string(cfg.format));

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
        nlohmann::ordered_json row;
        row["sweep_axis"] = r.sweep_axis;
        row["sweep_value"] = opt_json(r.sweep_value);
        row["scheme"] = r.scheme;
        row["feasible"] = r.feasible;
        if (!r.feasible)
            row["diagnostic"] = r.diagnostic;
        row["ps_mean"] = opt_json(r.ps_mean);
        row["ps_stderr"] = opt_json(r.ps_stderr);
        row["ps_analytic"] = opt_json(r.ps_analytic);
        row["eta_a"] = r.plan ? nlohmann::json(r.plan->eta_a) : nlohmann::json(nullptr);
        row["eta_b"] = r.plan ? nlohmann::json(r.plan->eta_b) : nlohmann::json(nullptr);
        row["t2"] = r.plan ? nlohmann::json(r.plan->t2_s) : nlohmann::json(nullptr);
        row["t3"] = r.plan ? nlohmann::json(r.plan->t3_s) : nlohmann::json(nullptr);
        row["case1_frac"] = opt_json(r.case1_frac);
        row["case2_frac"] = opt_json(r.case2_frac);
        row["case3_frac"] = opt_json(r.case3_frac);
        row["seed"] = r.seed;
        row["trials"] = r.trials;
        if (r.wilson) {
            row["wilson_low"] = r.wilson->low;
            row["wilson_high"] = r.wilson->high;
        }
        rows.push_back(std::move(row));
    }

    nlohmann::ordered_json doc;
    doc["config"] = std::move(config);
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

void emit_results(const ResultTable& table, std::ostream& fallback)
{
    if (table.rows.empty())
        throw std::invalid_argument("emit_results: empty result table");

    auto write = [&](std::ostream& out) {
        if (table.config.format == OutputFormat::Csv)
            write_csv(table, out);
        else
            write_json(table, out);
    };

    const auto& path = table.config.output_path;
    if (path.empty() || path == "-") {
        write(fallback);
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open output file '" + path + "' for writing");
    write(out);
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing output file '" + path + "'");
}

}  // namespace rsmamec
