#pragma once

namespace rsmamec {

// Successful-computation probability split by operating case.
struct PsBreakdown {
    double case1 = 0.0;
    double case2 = 0.0;
    double case3 = 0.0;  // identically zero: tau = 0 leaves the PU short
    double total = 0.0;
};

struct HighSnrAsymptote {
    double case1 = 0.0;
    double case2 = 0.0;
};

// Relative gap |rho_a - rho_b| / rho_a below which the removable singularity
// is evaluated through its series limit.
inline constexpr double kSingularityGap = 1e-9;

/// P{success, Case I} for unit-mean exponential fading.
double ps_case1_closed(double rho_a, double rho_b, double eps_a, double eps_b);

/// P{success, Case II}. Near rho_a == rho_b this switches to the series limit.
double ps_case2_closed(double rho_a, double rho_b, double eps_a, double eps_b);

/// Total success probability (Cases I + II; Case III never succeeds).
double ps_total_closed(double rho_a, double rho_b, double eps_a, double eps_b);

/// Series value of ps_total_closed for |rho_a - rho_b| small, including zero.
double ps_total_limit(double rho_a, double rho_b, double eps_a, double eps_b);

PsBreakdown ps_breakdown(double rho_a, double rho_b, double eps_a, double eps_b);

/// Case I / II limits as both transmit SNRs grow without bound.
/// Uses path losses only; the two components sum to one.
HighSnrAsymptote ps_high_snr(double loss_a, double loss_b, double eps_a);

/// Test oracle: adaptive 2-D Gauss-Kronrod quadrature over the Case I and
/// Case II success regions under the exponential fading measure.
/// Throws std::runtime_error if the error estimate exceeds 1e-9.
PsBreakdown ps_quadrature_oracle(double rho_a, double rho_b, double eps_a, double eps_b);

}  // namespace rsmamec
