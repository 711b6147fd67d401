#include "rsmamec/montecarlo.hpp"

#include "rsmamec/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace rsmamec {

std::string_view to_string(Scheme scheme)
{
    switch (scheme) {
    case Scheme::Rsma:
        return "RSMA";
    case Scheme::NomaPuFirst:
        return "NOMA_PU_first";
    case Scheme::NomaSuFirst:
        return "NOMA_SU_first";
    }
    return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name)
{
    for (auto s : {Scheme::Rsma, Scheme::NomaPuFirst, Scheme::NomaSuFirst})
        if (name == to_string(s))
            return s;
    return std::nullopt;
}

double PsEstimate::case_fraction(Case c) const
{
    return trials ? static_cast<double>(case_counts[static_cast<int>(c)]) / static_cast<double>(trials) : 0.0;
}

double PsEstimate::case_success_fraction(Case c) const
{
    return trials ? static_cast<double>(case_successes[static_cast<int>(c)]) / static_cast<double>(trials) : 0.0;
}

namespace {

struct PreparedPlan {
    EquivalentSnrs snrs;
    RateTargets targets;
    bool times_ok;
};

PreparedPlan prepare(const SystemParams& p, const OffloadPlan& plan)
{
    return {equivalent_snrs(p), plan_targets(plan, p), deadline_met(plan, p)};
}

TrialOutcome trial(const SystemParams& p, const OffloadPlan& plan, const PreparedPlan& prep, Scheme scheme,
                   Substream& stream)
{
    const auto draw = draw_channel(prep.snrs, stream);
    const double rx_a = draw.received_a();
    const double rx_b = draw.received_b();

    const auto decision = decide(rx_a, rx_b, prep.targets, plan.t2_s, p.bandwidth_hz);
    TrialOutcome out;
    out.case_label = decision.case_label;
    out.times_ok = prep.times_ok;

    if (scheme == Scheme::Rsma) {
        const auto ok = offload_outcome(decision, prep.targets);
        out.pu_ok = ok.pu_ok;
        out.su_ok = ok.su_ok;
        out.success = out.pu_ok && out.su_ok && out.times_ok;
        return out;
    }

    const auto order = scheme == Scheme::NomaPuFirst ? SicOrder::PuFirst : SicOrder::SuFirst;
    const auto rates = noma_rates(order, rx_a, rx_b, plan.t2_s, p.bandwidth_hz);
    out.pu_ok = rates.rate_a >= prep.targets.target_a;
    out.su_ok = rates.rate_b >= prep.targets.target_b;
    out.success = noma_outcome(rates, prep.targets, out.times_ok);
    return out;
}

struct Tally {
    std::uint64_t successes = 0;
    std::array<std::uint64_t, 3> case_counts{};
    std::array<std::uint64_t, 3> case_successes{};

    void add(const Tally& other)
    {
        successes += other.successes;
        for (int c = 0; c < 3; ++c) {
            case_counts[c] += other.case_counts[c];
            case_successes[c] += other.case_successes[c];
        }
    }
};

}  // namespace

TrialOutcome run_trial(const SystemParams& p, const OffloadPlan& plan, Substream& stream)
{
    return run_trial(p, plan, Scheme::Rsma, stream);
}

TrialOutcome run_trial(const SystemParams& p, const OffloadPlan& plan, Scheme scheme, Substream& stream)
{
    return trial(p, plan, prepare(p, plan), scheme, stream);
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z)
{
    if (trials == 0)
        return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double centre = (phat + z2 / (2.0 * n)) / (1.0 + z2 / n);
    const double half = z / (1.0 + z2 / n) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

PsEstimate estimate_psucc(const SystemParams& p, const OffloadPlan& plan, Scheme scheme, std::uint64_t trials,
                          std::uint64_t seed, unsigned workers)
{
    if (trials < kMinTrials)
        throw std::invalid_argument("estimate_psucc: at least " + std::to_string(kMinTrials)
                                    + " trials required, got " + std::to_string(trials));
    require_valid(p);
    const auto prep = prepare(p, plan);

    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        Tally t;
        for (std::uint64_t i = begin; i < end; ++i) {
            Substream stream(seed, i);
            const auto out = trial(p, plan, prep, scheme, stream);
            const auto c = static_cast<std::size_t>(out.case_label);
            ++t.case_counts[c];
            if (out.success) {
                ++t.successes;
                ++t.case_successes[c];
            }
        }
        return t;
    };

    workers = std::max(1u, workers);
    std::vector<Tally> partial(workers);
    if (workers == 1) {
        partial[0] = run_range(0, trials);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = trials * w / workers;
            const std::uint64_t end = trials * (w + 1) / workers;
            threads.emplace_back([&, w, begin, end] { partial[w] = run_range(begin, end); });
        }
        for (auto& th : threads)
            th.join();
    }

    Tally total;
    for (const auto& t : partial)
        total.add(t);

    PsEstimate est;
    est.trials = trials;
    est.seed = seed;
    est.successes = total.successes;
    est.case_counts = total.case_counts;
    est.case_successes = total.case_successes;
    est.mean = static_cast<double>(total.successes) / static_cast<double>(trials);
    est.std_err = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(trials));
    if (est.mean <= 0.01 || est.mean >= 0.99)
        est.wilson = wilson_interval(total.successes, trials);
    return est;
}

}  // namespace rsmamec
