#include "rsmamec/optimizer.hpp"

#include "rsmamec/analytics.hpp"
#include "rsmamec/montecarlo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace rsmamec {

double ExecutionTimes::slowest() const { return std::max({mec_s, user_a_s, user_b_s}); }

ExecutionTimes execution_times(const OffloadPlan& plan, const SystemParams& p)
{
    ExecutionTimes t;
    t.mec_s = (plan.eta_a * p.task_a_bits + plan.eta_b * p.task_b_bits) * p.cycles_per_bit / p.mec_cpu_hz();
    t.user_a_s = (1.0 - plan.eta_a) * p.task_a_bits * p.cycles_per_bit / p.user_cpu_hz;
    t.user_b_s = (1.0 - plan.eta_b) * p.task_b_bits * p.cycles_per_bit / p.user_cpu_hz;
    return t;
}

bool deadline_met(const OffloadPlan& plan, const SystemParams& p)
{
    const double slack = 1.0 + kTimeSlack;
    return execution_times(plan, p).slowest() <= plan.t3_s * slack
           && plan.t2_s + plan.t3_s <= p.latency_budget_s * slack;
}

RateTargets plan_targets(const OffloadPlan& plan, const SystemParams& p)
{
    return rate_targets(plan.eta_a * p.task_a_bits, plan.eta_b * p.task_b_bits, plan.t2_s, p.bandwidth_hz);
}

double plan_success_probability(const OffloadPlan& plan, const SystemParams& p)
{
    if (!deadline_met(plan, p))
        return 0.0;
    const auto targets = plan_targets(plan, p);
    const auto snrs = equivalent_snrs(p);
    return ps_total_closed(snrs.snr_a, snrs.snr_b, targets.eps_a, targets.eps_b);
}

PlanResult optimal_offload_plan(const SystemParams& p)
{
    require_valid(p);
    PlanResult result;

    const double ma = p.task_a_bits;
    const double mb = p.task_b_bits;
    const double n = p.mec_cpu_ratio;
    const double local_time = std::max(ma, mb) * p.cycles_per_bit / p.user_cpu_hz;
    if (local_time <= p.latency_budget_s) {
        result.kind = PlanKind::LocalOnly;
        result.plan = OffloadPlan{0.0, 0.0, 0.0, local_time};
        return result;
    }

    const double ratio = ma / mb;
    if (!(ratio > 1.0 / n)) {
        std::ostringstream msg;
        msg << "eta_a* would be non-positive: M_a/M_b = " << ratio << " must exceed 1/N = " << 1.0 / n;
        result.diagnostics.push_back(msg.str());
    }
    if (!(ratio < n + 1.0)) {
        std::ostringstream msg;
        msg << "eta_b* would be negative: M_a/M_b = " << ratio << " must be below N+1 = " << n + 1.0;
        result.diagnostics.push_back(msg.str());
    }
    const double capacity = (n + 2.0) * p.user_cpu_hz * p.latency_budget_s / p.cycles_per_bit;
    if (!(ma + mb < capacity)) {
        std::ostringstream msg;
        msg << "t2* would be non-positive: M_a + M_b = " << ma + mb << " bits must be below (N+2) f_user T / C = "
            << capacity << " bits";
        result.diagnostics.push_back(msg.str());
    }
    if (!result.diagnostics.empty())
        return result;

    OffloadPlan plan;
    plan.eta_a = ((n + 1.0) * ma - mb) / ((n + 2.0) * ma);
    plan.eta_b = ((n + 1.0) * mb - ma) / ((n + 2.0) * mb);
    plan.t3_s = (ma + mb) * p.cycles_per_bit / ((n + 2.0) * p.user_cpu_hz);
    plan.t2_s = p.latency_budget_s - plan.t3_s;
    result.kind = PlanKind::Offload;
    result.plan = plan;
    return result;
}

GridSearchResult grid_search_oracle(const SystemParams& p, const GridSearchOptions& options)
{
    require_valid(p);
    if (options.resolution < 20)
        throw std::invalid_argument("grid_search_oracle: resolution must be at least 20 points per axis");

    const int n = options.resolution;
    const double budget = p.latency_budget_s;
    const auto snrs = equivalent_snrs(p);

    auto objective = [&](const OffloadPlan& plan) {
        if (options.objective == GridObjective::ClosedForm) {
            const auto targets = plan_targets(plan, p);
            return ps_total_closed(snrs.snr_a, snrs.snr_b, targets.eps_a, targets.eps_b);
        }
        return estimate_psucc(p, plan, Scheme::Rsma, options.mc_trials, options.mc_seed).mean;
    };

    GridSearchResult best;
    for (int i = 0; i < n; ++i) {
        const double eta_a = static_cast<double>(i) / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double eta_b = static_cast<double>(j) / (n - 1);
            for (int k = 1; k <= n; ++k) {
                OffloadPlan plan;
                plan.eta_a = eta_a;
                plan.eta_b = eta_b;
                plan.t2_s = budget * k / (n + 1);
                plan.t3_s = budget - plan.t2_s;
                ++best.evaluated;
                if (execution_times(plan, p).slowest() > plan.t3_s)
                    continue;
                ++best.feasible_points;
                const double ps = objective(plan);
                // Strict > keeps the lexicographically first maximizer.
                if (!best.plan || ps > best.ps) {
                    best.plan = plan;
                    best.ps = ps;
                }
            }
        }
    }
    if (!best.plan)
        best.diagnostic = "no grid point meets the execution deadline";
    return best;
}

}  // namespace rsmamec
