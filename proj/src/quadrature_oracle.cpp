#include "rsmamec/analytics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rsmamec {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

constexpr double kTolerance = 1e-11;
constexpr unsigned kMaxDepth = 12;
constexpr double kMaxError = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

template <class F>
double integrate(F f, double lo, double hi, double& error_budget)
{
    if (!(hi > lo))
        return 0.0;
    double error = 0.0;
    const double value = Rule::integrate(f, lo, hi, kMaxDepth, kTolerance, &error);
    if (!std::isfinite(value) || error > kMaxError)
        throw std::runtime_error("ps_quadrature_oracle: quadrature did not converge");
    error_budget = std::max(error_budget, error);
    return value;
}

// Integral of f over [lo, inf) for an integrand decaying roughly like
// e^{-rate x}. Rescaling keeps the mass near the rule's unit scale.
template <class F>
double integrate_tail(F f, double lo, double rate, double& error_budget)
{
    return integrate([&](double u) { return f(lo + u / rate); }, 0.0, kInf, error_budget) / rate;
}

// Mass of the unit exponential on [lo, inf), integrated numerically.
double tail_mass(double lo, double& error_budget)
{
    lo = std::max(lo, 0.0);
    return std::exp(-lo) * integrate([](double y) { return std::exp(-y); }, 0.0, kInf, error_budget);
}

}  // namespace

PsBreakdown ps_quadrature_oracle(double rho_a, double rho_b, double eps_a, double eps_b)
{
    if (!(rho_a > 0.0) || !(rho_b > 0.0) || !(eps_a >= 0.0) || !(eps_b >= 0.0))
        throw std::domain_error("ps_quadrature_oracle: invalid arguments");

    double err = 0.0;
    PsBreakdown out;

    // Case I success: g_b >= eps_b/rho_b (SU rate) and
    // rho_a g_a / (rho_b g_b + 1) >= eps_a (PU rate, implies tau >= rho_b g_b).
    out.case1 = integrate_tail(
        [&](double gb) {
            return std::exp(-gb) * tail_mass(eps_a * (1.0 + rho_b * gb) / rho_a, err);
        },
        eps_b / rho_b, 1.0 + eps_a * rho_b / rho_a, err);

    // Case II success: tau > 0, rho_b g_b > tau, and the SU sum rate
    // rho_a g_a + rho_b g_b + 1 >= (1 + eps_a)(1 + eps_b).
    if (eps_a > 0.0) {
        const double joint = eps_a + eps_b + eps_a * eps_b;
        auto inner_floor = [&](double ga) {
            const double above_threshold = (rho_a * ga / eps_a - 1.0) / rho_b;
            const double sum_rate = (joint - rho_a * ga) / rho_b;
            return std::max(above_threshold, sum_rate);
        };
        auto integrand = [&](double ga) { return std::exp(-ga) * tail_mass(inner_floor(ga), err); };
        // The two floors cross at g_a = eps_a (1 + eps_b) / rho_a.
        const double lo = eps_a / rho_a;
        const double kink = eps_a * (1.0 + eps_b) / rho_a;
        out.case2 = integrate(integrand, lo, kink, err) +
                    integrate_tail(integrand, kink, 1.0 + rho_a / (eps_a * rho_b), err);
    }

    out.case3 = 0.0;
    out.total = out.case1 + out.case2;
    return out;
}

}  // namespace rsmamec
