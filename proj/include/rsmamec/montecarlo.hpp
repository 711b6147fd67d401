#pragma once

#include "rsmamec/noma_baseline.hpp"
#include "rsmamec/optimizer.hpp"
#include "rsmamec/rsma_scheme.hpp"
#include "rsmamec/system_model.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace rsmamec {

class Substream;

enum class Scheme { Rsma, NomaPuFirst, NomaSuFirst };

std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

struct TrialOutcome {
    Case case_label = Case::I;
    bool pu_ok = false;
    bool su_ok = false;
    bool times_ok = false;
    bool success = false;
};

struct WilsonInterval {
    double low = 0.0;
    double high = 0.0;
};

struct PsEstimate {
    double mean = 0.0;
    double std_err = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t successes = 0;
    // Indexed by Case. For NOMA schemes the case is the one RSMA would have
    // picked on the same draw.
    std::array<std::uint64_t, 3> case_counts{};
    std::array<std::uint64_t, 3> case_successes{};
    // Present when mean is within 0.01 of 0 or 1.
    std::optional<WilsonInterval> wilson;

    double case_fraction(Case c) const;
    double case_success_fraction(Case c) const;
};

inline constexpr std::uint64_t kMinTrials = 10000;

/// One RSMA trial: draw the channel, decide, check rates and deadlines.
TrialOutcome run_trial(const SystemParams& p, const OffloadPlan& plan, Substream& stream);

TrialOutcome run_trial(const SystemParams& p, const OffloadPlan& plan, Scheme scheme, Substream& stream);

/// Monte Carlo success probability. Trial i always uses Substream(seed, i),
/// so the result is identical for any worker count.
PsEstimate estimate_psucc(const SystemParams& p, const OffloadPlan& plan, Scheme scheme, std::uint64_t trials,
                          std::uint64_t seed, unsigned workers = 1);

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.96);

}  // namespace rsmamec
