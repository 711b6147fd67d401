#include "rsmamec/system_model.hpp"

#include "rsmamec/random.hpp"

#include <cmath>
#include <sstream>

namespace rsmamec {

double path_loss(double distance_m, double exponent)
{
    if (!(distance_m >= 0.0))
        throw std::domain_error("path_loss: distance must be non-negative");
    if (!(exponent > 0.0))
        throw std::domain_error("path_loss: exponent must be positive");
    return 1.0 / (1.0 + std::pow(distance_m, exponent));
}

double transmit_snr(double power_w, double loss, double noise_power_w)
{
    if (!(power_w > 0.0) || !(loss > 0.0) || !(loss <= 1.0) || !(noise_power_w > 0.0))
        throw std::domain_error("transmit_snr: power, loss and noise must be positive, loss <= 1");
    return power_w * loss / noise_power_w;
}

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

EquivalentSnrs equivalent_snrs(const SystemParams& p)
{
    return {transmit_snr(p.power_a_w, path_loss(p.distance_a_m, p.path_loss_exponent), p.noise_power_w),
            transmit_snr(p.power_b_w, path_loss(p.distance_b_m, p.path_loss_exponent), p.noise_power_w)};
}

double draw_fading(Substream& stream) { return -std::log(stream.uniform_open()); }

ChannelDraw draw_channel(const EquivalentSnrs& snrs, Substream& stream)
{
    ChannelDraw draw;
    draw.gain_a = draw_fading(stream);
    draw.gain_b = draw_fading(stream);
    draw.snr_a = snrs.snr_a;
    draw.snr_b = snrs.snr_b;
    return draw;
}

std::vector<std::string> validate_params(const SystemParams& p)
{
    std::vector<std::string> out;
    auto require = [&out](bool ok, const char* what) {
        if (!ok)
            out.emplace_back(what);
    };
    // Negated comparisons so NaN counts as a violation.
    require(p.bandwidth_hz > 0.0, "B > 0 required (bandwidth_hz)");
    require(p.cycles_per_bit > 0.0, "C > 0 required (cycles_per_bit)");
    require(p.mec_cpu_ratio > 1.0, "N > 1 required (mec_cpu_ratio)");
    require(p.latency_budget_s > 0.0, "T > 0 required (latency_budget_s)");
    require(p.distance_a_m >= 0.0, "d_a >= 0 required (distance_a_m)");
    require(p.distance_b_m >= 0.0, "d_b >= 0 required (distance_b_m)");
    require(p.path_loss_exponent >= 2.0, "upsilon >= 2 required (path_loss_exponent)");
    require(p.user_cpu_hz > 0.0, "f_user > 0 required (user_cpu_hz)");
    require(p.power_a_w > 0.0, "P_a > 0 required (power_a_w)");
    require(p.power_b_w > 0.0, "P_b > 0 required (power_b_w)");
    require(p.noise_power_w > 0.0, "sigma2 > 0 required (noise_power_w)");
    require(p.task_a_bits > 0.0, "M_a > 0 required (task_a_bits)");
    require(p.task_b_bits > 0.0, "M_b > 0 required (task_b_bits)");
    return out;
}

const SystemParams& require_valid(const SystemParams& p)
{
    auto violations = validate_params(p);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid scenario parameters:";
        for (const auto& v : violations)
            msg << "\n  - " << v;
        throw ConfigError(msg.str());
    }
    return p;
}

}  // namespace rsmamec
