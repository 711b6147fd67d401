// Command-line front end: analytic | simulate | optimize | sweep.

#include "rsmamec/analytics.hpp"
#include "rsmamec/experiments.hpp"
#include "rsmamec/optimizer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

struct CommonFlags {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::string schemes;
    std::string output;
    std::string format;
    unsigned workers = 1;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_simulation)
{
    cmd->add_option("--config", f.config_path, "Scenario/experiment config file (key = value)");
    cmd->add_option("--output", f.output, "Output path ('-' or empty for stdout)");
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    if (with_simulation) {
        cmd->add_option("--seed", f.seed, "Master seed (u64)");
        cmd->add_option("--trials", f.trials, "Monte Carlo trials per point");
        cmd->add_option("--scheme", f.schemes, "Comma list of RSMA,NOMA_PU_first,NOMA_SU_first,analytic");
        cmd->add_option("--workers", f.workers, "Worker threads; results do not depend on this")
            ->check(CLI::Range(1u, 1024u));
    }
}

rsmamec::ExperimentConfig resolve(const CommonFlags& f)
{
    using namespace rsmamec;
    ExperimentConfig cfg = f.config_path.empty() ? ExperimentConfig{} : load_config(f.config_path);
    if (f.seed)
        cfg.seed = *f.seed;
    if (f.trials)
        cfg.trials = *f.trials;
    if (!f.schemes.empty()) {
        cfg.schemes.clear();
        std::istringstream in(f.schemes);
        for (std::string item; std::getline(in, item, ',');) {
            auto s = parse_report_scheme(item);
            if (!s)
                throw ConfigError("--scheme: unknown scheme '" + item + "'");
            cfg.schemes.push_back(*s);
        }
    }
    if (!f.output.empty())
        cfg.output_path = f.output;
    if (!f.format.empty())
        cfg.format = *parse_output_format(f.format);
    return cfg;
}

int emit(const rsmamec::ResultTable& table)
{
    rsmamec::emit_results(table, std::cout);
    if (table.all_infeasible()) {
        std::cerr << "all points infeasible\n";
        return kExitInfeasible;
    }
    return 0;
}

int run_optimize(const rsmamec::ExperimentConfig& cfg)
{
    using namespace rsmamec;
    const auto& p = require_valid(cfg.scenario);
    const auto result = optimal_offload_plan(p);

    nlohmann::ordered_json doc;
    doc["kind"] = result.kind == PlanKind::Offload     ? "offload"
                  : result.kind == PlanKind::LocalOnly ? "local_only"
                                                       : "infeasible";
    doc["feasible"] = result.feasible();
    doc["diagnostics"] = result.diagnostics;
    if (result.plan) {
        const auto& plan = *result.plan;
        doc["plan"] = {{"eta_a", plan.eta_a}, {"eta_b", plan.eta_b}, {"t2", plan.t2_s}, {"t3", plan.t3_s}};
        const auto times = execution_times(plan, p);
        doc["execution_times"] = {{"mec", times.mec_s}, {"user_a", times.user_a_s}, {"user_b", times.user_b_s}};
        const auto targets = plan_targets(plan, p);
        const auto snrs = equivalent_snrs(p);
        const auto ps = ps_breakdown(snrs.snr_a, snrs.snr_b, targets.eps_a, targets.eps_b);
        doc["eps_a"] = targets.eps_a;
        doc["eps_b"] = targets.eps_b;
        doc["ps_analytic"] = {{"case1", ps.case1}, {"case2", ps.case2}, {"case3", ps.case3}, {"total", ps.total}};
    } else {
        doc["plan"] = nullptr;
    }

    const std::string text = doc.dump(2) + "\n";
    if (cfg.output_path.empty() || cfg.output_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open output file '" + cfg.output_path + "' for writing");
        out << text;
    }
    return result.feasible() ? 0 : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace rsmamec;

    CLI::App app{"RSMA-aided cognitive-radio MEC offloading: closed forms, optimizer and Monte Carlo"};
    app.require_subcommand(1);

    CommonFlags analytic_flags, simulate_flags, optimize_flags, sweep_flags;
    auto* analytic = app.add_subcommand("analytic", "Closed-form success probability (no random draws)");
    add_common(analytic, analytic_flags, false);
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate at the config's scenario point");
    add_common(simulate, simulate_flags, true);
    auto* optimize = app.add_subcommand("optimize", "Closed-form optimal offloading plan with diagnostics");
    add_common(optimize, optimize_flags, false);
    auto* sweep = app.add_subcommand("sweep", "Run a task_length | power | latency_study sweep");
    add_common(sweep, sweep_flags, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*analytic) {
            auto cfg = resolve(analytic_flags);
            cfg.schemes = {ReportScheme::Analytic};
            return emit(run_experiment(cfg));
        }
        if (*simulate) {
            auto cfg = resolve(simulate_flags);
            cfg.axis = SweepAxis::Point;
            cfg.values.clear();
            return emit(run_experiment(cfg, simulate_flags.workers));
        }
        if (*optimize)
            return run_optimize(resolve(optimize_flags));
        if (*sweep) {
            auto cfg = resolve(sweep_flags);
            if (cfg.axis == SweepAxis::Point)
                throw ConfigError("sweep: config must set sweep_axis (task_length | power | latency_study)");
            return emit(run_experiment(cfg, sweep_flags.workers));
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
