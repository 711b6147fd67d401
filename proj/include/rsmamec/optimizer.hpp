#pragma once

#include "rsmamec/rsma_scheme.hpp"
#include "rsmamec/system_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsmamec {

// Offloading split and phase durations.
struct OffloadPlan {
    double eta_a = 0.0;
    double eta_b = 0.0;
    double t2_s = 0.0;
    double t3_s = 0.0;
};

struct ExecutionTimes {
    double mec_s = 0.0;
    double user_a_s = 0.0;
    double user_b_s = 0.0;

    double slowest() const;
};

enum class PlanKind {
    Offload,    // closed-form interior optimum
    LocalOnly,  // both users finish locally within T
    Infeasible,
};

struct PlanResult {
    PlanKind kind = PlanKind::Infeasible;
    std::optional<OffloadPlan> plan;
    std::vector<std::string> diagnostics;

    bool feasible() const { return plan.has_value(); }
};

// Relative slack allowed when checking phase durations against t3 and T.
inline constexpr double kTimeSlack = 1e-12;

ExecutionTimes execution_times(const OffloadPlan& plan, const SystemParams& p);

/// All three execution times fit in t3 and t2 + t3 fits in T.
bool deadline_met(const OffloadPlan& plan, const SystemParams& p);

/// Targets eta_k M_k over t2 at the scenario bandwidth.
RateTargets plan_targets(const OffloadPlan& plan, const SystemParams& p);

/// Success probability of a plan from the closed form; 0 when deadlines fail.
double plan_success_probability(const OffloadPlan& plan, const SystemParams& p);

/// Closed-form optimum over (eta_a, eta_b, t2, t3).
///
/// If each user can finish its own task locally within T, returns the
/// local-only plan. Otherwise equalizes the three execution times and
/// spends the remaining budget on offloading. Requires
/// 1/N < M_a/M_b < N+1 and M_a + M_b < (N+2) f_user T / C, strictly;
/// violations produce diagnostics instead of a clamped plan.
PlanResult optimal_offload_plan(const SystemParams& p);

enum class GridObjective { ClosedForm, MonteCarlo };

struct GridSearchOptions {
    int resolution = 40;
    GridObjective objective = GridObjective::ClosedForm;
    std::uint64_t mc_trials = 100000;
    std::uint64_t mc_seed = 1;
};

struct GridSearchResult {
    std::optional<OffloadPlan> plan;
    double ps = 0.0;
    std::size_t evaluated = 0;
    std::size_t feasible_points = 0;
    std::string diagnostic;
};

/// Brute-force maximizer over an (eta_a, eta_b, t2) grid with t3 = T - t2.
/// eta axes include both endpoints; t2 spans (0, T). Ties go to the
/// lexicographically smallest (eta_a, eta_b, t2).
GridSearchResult grid_search_oracle(const SystemParams& p, const GridSearchOptions& options = {});

}  // namespace rsmamec
