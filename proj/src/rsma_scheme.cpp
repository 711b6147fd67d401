#include "rsmamec/rsma_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rsmamec {

std::string_view to_string(Case c)
{
    switch (c) {
    case Case::I:
        return "I";
    case Case::II:
        return "II";
    case Case::III:
        return "III";
    }
    return "?";
}

double epsilon(double target_bits, double t2_s, double bandwidth_hz)
{
    if (!(t2_s > 0.0) || !(bandwidth_hz > 0.0))
        throw std::domain_error("epsilon: t2 and B must be positive");
    if (!(target_bits >= 0.0))
        throw std::domain_error("epsilon: target must be non-negative");
    return std::exp2(target_bits / (t2_s * bandwidth_hz)) - 1.0;
}

RateTargets rate_targets(double target_a_bits, double target_b_bits, double t2_s, double bandwidth_hz)
{
    auto eps = [&](double bits) { return bits == 0.0 ? 0.0 : epsilon(bits, t2_s, bandwidth_hz); };
    RateTargets t;
    t.target_a = target_a_bits;
    t.target_b = target_b_bits;
    t.target_b1 = 0.0;
    t.target_b2 = target_b_bits;
    t.eps_a = eps(target_a_bits);
    t.eps_b = eps(target_b_bits);
    return t;
}

RateTargets split_targets(RateTargets targets, double beta)
{
    targets.target_b1 = beta * targets.target_b;
    targets.target_b2 = targets.target_b - targets.target_b1;
    return targets;
}

double interference_threshold(double rx_a, double eps_a)
{
    if (!(eps_a > 0.0))
        throw std::domain_error("interference_threshold: eps_a must be positive");
    if (!(rx_a >= 0.0))
        throw std::domain_error("interference_threshold: received power must be non-negative");
    return std::max(0.0, rx_a / eps_a - 1.0);
}

Case classify_case(double rx_b, double tau)
{
    if (tau == 0.0)
        return Case::III;
    return rx_b <= tau ? Case::I : Case::II;
}

StreamSinrs stream_sinrs(double alpha, double rx_a, double rx_b)
{
    const double protected_part = (1.0 - alpha) * rx_b;
    return {alpha * rx_b / (rx_a + protected_part + 1.0), rx_a / (protected_part + 1.0), protected_part};
}

namespace {

double bits(double t2B, double sinr) { return t2B * std::log2(1.0 + sinr); }

}  // namespace

SplitParameters optimal_split(Case c, double rx_a, double rx_b, double eps_a, double t2_s,
                              double bandwidth_hz, double target_b_bits)
{
    switch (c) {
    case Case::I:
        return {0.0, 0.0, false};
    case Case::III:
        return {1.0, 1.0, false};
    case Case::II:
        break;
    }

    const double tau = interference_threshold(rx_a, eps_a);
    if (!(tau > 0.0) || !(rx_b > tau))
        throw std::logic_error("optimal_split: inputs are not a Case II draw");

    const double t2B = t2_s * bandwidth_hz;
    SplitParameters s;
    s.alpha = std::clamp(1.0 - tau / rx_b, 0.0, 1.0);

    // Protected stream carries exactly what the threshold allows.
    const double protected_bits = bits(t2B, tau);
    s.beta = target_b_bits > 0.0 ? std::clamp(1.0 - protected_bits / target_b_bits, 0.0, 1.0) : 0.0;

    const double needed_b1 = std::max(0.0, target_b_bits - protected_bits);
    const double achieved_b1 = bits(t2B, (rx_b - tau) / (rx_a + tau + 1.0));
    s.su_silent = achieved_b1 < needed_b1;
    return s;
}

StreamRates achievable_rates(Case c, double alpha, bool su_silent, double rx_a, double rx_b,
                             double tau, double t2_s, double bandwidth_hz)
{
    const double t2B = t2_s * bandwidth_hz;
    StreamRates r;
    switch (c) {
    case Case::I:
        // x_b1 unused; order degrades to x_a -> x_b.
        r.rate_a = bits(t2B, rx_a / (rx_b + 1.0));
        r.rate_b2 = bits(t2B, rx_b);
        break;
    case Case::II:
        if (su_silent) {
            r.rate_a = bits(t2B, rx_a);
        } else {
            (void)alpha;  // (1 - alpha) rx_b == tau by construction
            r.rate_a = bits(t2B, rx_a / (tau + 1.0));
            r.rate_b1 = bits(t2B, (rx_b - tau) / (rx_a + tau + 1.0));
            r.rate_b2 = bits(t2B, tau);
        }
        break;
    case Case::III:
        // Order degrades to x_b -> x_a.
        r.rate_a = bits(t2B, rx_a);
        r.rate_b1 = bits(t2B, rx_b / (rx_a + 1.0));
        break;
    }
    return r;
}

RsmaDecision decide(double rx_a, double rx_b, const RateTargets& targets, double t2_s, double bandwidth_hz)
{
    RsmaDecision d;
    d.tau = targets.eps_a == 0.0 ? std::numeric_limits<double>::infinity()
                                 : interference_threshold(rx_a, targets.eps_a);
    d.case_label = classify_case(rx_b, d.tau);

    const auto split = optimal_split(d.case_label, rx_a, rx_b, targets.eps_a, t2_s, bandwidth_hz, targets.target_b);
    d.alpha = split.alpha;
    d.beta = split.beta;
    d.su_silent = split.su_silent;

    const auto rates = achievable_rates(d.case_label, d.alpha, d.su_silent, rx_a, rx_b, d.tau, t2_s, bandwidth_hz);
    d.rate_a = rates.rate_a;
    d.rate_b1 = rates.rate_b1;
    d.rate_b2 = rates.rate_b2;
    d.rate_b = rates.rate_b();

    if (d.case_label == Case::II && !d.su_silent)
        d.rate_a = targets.target_a;
    return d;
}

OffloadResult offload_outcome(const RsmaDecision& decision, const RateTargets& targets)
{
    OffloadResult r;
    r.pu_ok = decision.case_label != Case::III && decision.rate_a >= targets.target_a;
    r.su_ok = !decision.su_silent && decision.rate_b >= targets.target_b;
    return r;
}

}  // namespace rsmamec
