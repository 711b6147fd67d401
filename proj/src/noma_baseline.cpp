#include "rsmamec/noma_baseline.hpp"

#include <cmath>

namespace rsmamec {

std::string_view to_string(SicOrder order)
{
    return order == SicOrder::PuFirst ? "PU_first" : "SU_first";
}

NomaRates noma_rates(SicOrder order, double rx_a, double rx_b, double t2_s, double bandwidth_hz)
{
    const double t2B = t2_s * bandwidth_hz;
    if (order == SicOrder::PuFirst)
        return {t2B * std::log2(1.0 + rx_a / (rx_b + 1.0)), t2B * std::log2(1.0 + rx_b)};
    return {t2B * std::log2(1.0 + rx_a), t2B * std::log2(1.0 + rx_b / (rx_a + 1.0))};
}

bool noma_outcome(const NomaRates& rates, const RateTargets& targets, bool times_ok)
{
    return rates.rate_a >= targets.target_a && rates.rate_b >= targets.target_b && times_ok;
}

}  // namespace rsmamec
