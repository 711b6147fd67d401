#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsmamec {

class Substream;

// Scenario error raised for parameter sets or configs that cannot be run.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Static scenario constants. Units are in the member names; SNRs are linear.
struct SystemParams {
    double bandwidth_hz = 1e6;
    double cycles_per_bit = 1000.0;
    double mec_cpu_ratio = 5.0;       // f_mec / f_user, must exceed 1
    double latency_budget_s = 10e-3;
    double distance_a_m = 5.0;
    double distance_b_m = 25.0;
    double path_loss_exponent = 4.0;
    double user_cpu_hz = 0.5e9;
    double power_a_w = 0.1;
    double power_b_w = 0.1;
    double noise_power_w = 1e-9;
    double task_a_bits = 20e3;
    double task_b_bits = 6e3;

    double mec_cpu_hz() const { return mec_cpu_ratio * user_cpu_hz; }
};

// One fading realization. gain_* are |h|^2, snr_* the equivalent transmit SNRs.
struct ChannelDraw {
    double gain_a = 0.0;
    double gain_b = 0.0;
    double snr_a = 0.0;
    double snr_b = 0.0;

    double received_a() const { return snr_a * gain_a; }
    double received_b() const { return snr_b * gain_b; }
};

/// Large-scale loss (1 + d^upsilon)^-1.
double path_loss(double distance_m, double exponent);

/// P * loss / sigma^2, linear scale.
double transmit_snr(double power_w, double loss, double noise_power_w);

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);

struct EquivalentSnrs {
    double snr_a;
    double snr_b;
};

EquivalentSnrs equivalent_snrs(const SystemParams& p);

/// Unit-mean exponential variate (squared magnitude of a CN(0,1) coefficient).
double draw_fading(Substream& stream);

ChannelDraw draw_channel(const EquivalentSnrs& snrs, Substream& stream);

/// Returns one message per violated invariant; empty when the set is valid.
std::vector<std::string> validate_params(const SystemParams& p);

/// Throws ConfigError listing every violation.
const SystemParams& require_valid(const SystemParams& p);

}  // namespace rsmamec
