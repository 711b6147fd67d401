#include "rsmamec/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsmamec {

namespace {

void require_positive_snrs(double rho_a, double rho_b)
{
    if (!(rho_a > 0.0) || !(rho_b > 0.0))
        throw std::domain_error("success probability: rho_a and rho_b must be positive");
}

void require_thresholds(double eps_a, double eps_b)
{
    if (!(eps_a >= 0.0) || !(eps_b >= 0.0))
        throw std::domain_error("success probability: thresholds must be non-negative");
}

// Exponents of the two terms that appear throughout.
// first:  eps_b/rho_b + eps_a(1+eps_b)/rho_a
// second: eps_a/rho_a + eps_b(1+eps_a)/rho_b
double first_exponent(double rho_a, double rho_b, double eps_a, double eps_b)
{
    return eps_b / rho_b + eps_a * (1.0 + eps_b) / rho_a;
}

double second_exponent(double rho_a, double rho_b, double eps_a, double eps_b)
{
    return eps_a / rho_a + eps_b * (1.0 + eps_a) / rho_b;
}

// coef * exp(-exponent) evaluated in log space; coef > 0.
double scaled_exp(double log_coef, double exponent) { return std::exp(log_coef - exponent); }

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

bool near_singular(double rho_a, double rho_b) { return std::abs(rho_a - rho_b) < kSingularityGap * rho_a; }

// Case II difference term rho_b (e^-A - e^-B) / (rho_a - rho_b) at the midpoint
// derivative, which matches the secant to second order.
double case2_difference_limit(double rho_a, double rho_b, double eps_a, double eps_b)
{
    const double mid = 0.5 * (rho_a + rho_b);
    const double a = first_exponent(mid, rho_b, eps_a, eps_b);
    const double b = second_exponent(mid, rho_b, eps_a, eps_b);
    return rho_b * eps_a / (mid * mid) * ((1.0 + eps_b) * std::exp(-a) - std::exp(-b));
}

}  // namespace

double ps_case1_closed(double rho_a, double rho_b, double eps_a, double eps_b)
{
    require_positive_snrs(rho_a, rho_b);
    require_thresholds(eps_a, eps_b);
    const double a = first_exponent(rho_a, rho_b, eps_a, eps_b);
    return clamp_probability(scaled_exp(std::log(rho_a) - std::log(rho_b * eps_a + rho_a), a));
}

double ps_case2_closed(double rho_a, double rho_b, double eps_a, double eps_b)
{
    require_positive_snrs(rho_a, rho_b);
    require_thresholds(eps_a, eps_b);
    const double a = first_exponent(rho_a, rho_b, eps_a, eps_b);

    double difference = 0.0;
    if (near_singular(rho_a, rho_b)) {
        difference = case2_difference_limit(rho_a, rho_b, eps_a, eps_b);
    } else {
        const double b = second_exponent(rho_a, rho_b, eps_a, eps_b);
        const double gap = rho_a - rho_b;
        const double log_coef = std::log(rho_b) - std::log(std::abs(gap));
        difference = std::copysign(1.0, gap) * (scaled_exp(log_coef, a) - scaled_exp(log_coef, b));
    }

    double protected_part = 0.0;
    if (eps_a > 0.0)
        protected_part = scaled_exp(std::log(rho_b * eps_a) - std::log(rho_b * eps_a + rho_a), a);
    return clamp_probability(difference + protected_part);
}

double ps_total_limit(double rho_a, double rho_b, double eps_a, double eps_b)
{
    require_positive_snrs(rho_a, rho_b);
    require_thresholds(eps_a, eps_b);
    // d/d(rho_a) of rho_a e^-A - rho_b e^-B at the midpoint.
    const double mid = 0.5 * (rho_a + rho_b);
    const double a = first_exponent(mid, rho_b, eps_a, eps_b);
    const double b = second_exponent(mid, rho_b, eps_a, eps_b);
    const double value = std::exp(-a) * (1.0 + eps_a * (1.0 + eps_b) / mid)
                         - rho_b * eps_a / (mid * mid) * std::exp(-b);
    return clamp_probability(value);
}

double ps_total_closed(double rho_a, double rho_b, double eps_a, double eps_b)
{
    require_positive_snrs(rho_a, rho_b);
    require_thresholds(eps_a, eps_b);
    if (near_singular(rho_a, rho_b))
        return ps_total_limit(rho_a, rho_b, eps_a, eps_b);

    const double a = first_exponent(rho_a, rho_b, eps_a, eps_b);
    const double b = second_exponent(rho_a, rho_b, eps_a, eps_b);
    const double gap = rho_a - rho_b;
    const double log_gap = std::log(std::abs(gap));
    const double value = scaled_exp(std::log(rho_a) - log_gap, a) - scaled_exp(std::log(rho_b) - log_gap, b);
    return clamp_probability(std::copysign(1.0, gap) * value);
}

PsBreakdown ps_breakdown(double rho_a, double rho_b, double eps_a, double eps_b)
{
    PsBreakdown out;
    out.case1 = ps_case1_closed(rho_a, rho_b, eps_a, eps_b);
    out.case2 = ps_case2_closed(rho_a, rho_b, eps_a, eps_b);
    out.case3 = 0.0;
    out.total = ps_total_closed(rho_a, rho_b, eps_a, eps_b);
    return out;
}

HighSnrAsymptote ps_high_snr(double loss_a, double loss_b, double eps_a)
{
    if (!(loss_a > 0.0) || !(loss_b > 0.0) || !(eps_a >= 0.0))
        throw std::domain_error("ps_high_snr: losses must be positive, eps_a non-negative");
    const double denom = loss_b * eps_a + loss_a;
    return {loss_a / denom, loss_b * eps_a / denom};
}

}  // namespace rsmamec
