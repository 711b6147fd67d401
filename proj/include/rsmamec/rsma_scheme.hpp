#pragma once

#include <string_view>

namespace rsmamec {

// Operating regime picked per channel draw by comparing the SU's received
// power against the interference threshold.
enum class Case { I, II, III };

std::string_view to_string(Case c);

// Per-plan bit targets and the matching SNR thresholds.
// target_b1/target_b2 carry the split for a given beta (see split_targets).
struct RateTargets {
    double target_a = 0.0;
    double target_b = 0.0;
    double target_b1 = 0.0;
    double target_b2 = 0.0;
    double eps_a = 0.0;
    double eps_b = 0.0;
};

struct RsmaDecision {
    Case case_label = Case::I;
    double tau = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    bool su_silent = false;
    double rate_a = 0.0;
    double rate_b1 = 0.0;
    double rate_b2 = 0.0;
    double rate_b = 0.0;
};

struct SplitParameters {
    double alpha = 0.0;
    double beta = 0.0;
    bool su_silent = false;
};

struct StreamRates {
    double rate_a = 0.0;
    double rate_b1 = 0.0;
    double rate_b2 = 0.0;

    double rate_b() const { return rate_b1 + rate_b2; }
};

// SINRs for the x_b1 -> x_a -> x_b2 decoding order at power split alpha.
struct StreamSinrs {
    double sinr_b1 = 0.0;
    double sinr_a = 0.0;
    double sinr_b2 = 0.0;
};

struct OffloadResult {
    bool pu_ok = false;
    bool su_ok = false;
};

/// 2^(bits / (t2 B)) - 1.
double epsilon(double target_bits, double t2_s, double bandwidth_hz);

/// Targets for eta_a M_a / eta_b M_b bits in an offload phase of t2 seconds.
/// A zero target maps to a zero threshold even when t2 is zero.
RateTargets rate_targets(double target_a_bits, double target_b_bits, double t2_s, double bandwidth_hz);

RateTargets split_targets(RateTargets targets, double beta);

/// max{0, rx_a / eps_a - 1}. rx_a is rho_a |h_a|^2.
double interference_threshold(double rx_a, double eps_a);

Case classify_case(double rx_b, double tau);

StreamSinrs stream_sinrs(double alpha, double rx_a, double rx_b);

/// Optimal (alpha, beta) for the given case, and whether the SU stays silent.
SplitParameters optimal_split(Case c, double rx_a, double rx_b, double eps_a, double t2_s,
                              double bandwidth_hz, double target_b_bits);

/// Per-stream achievable bits over the offload phase.
StreamRates achievable_rates(Case c, double alpha, bool su_silent, double rx_a, double rx_b,
                             double tau, double t2_s, double bandwidth_hz);

/// Full per-draw decision: threshold, case, split, rates.
///
/// With eps_a == 0 the PU imposes no constraint: tau is +inf and the draw is
/// Case I. In Case II with the SU transmitting, gamma_a equals eps_a
/// identically, so rate_a is reported as exactly target_a.
RsmaDecision decide(double rx_a, double rx_b, const RateTargets& targets, double t2_s, double bandwidth_hz);

OffloadResult offload_outcome(const RsmaDecision& decision, const RateTargets& targets);

}  // namespace rsmamec
