#pragma once

#include "rsmamec/rsma_scheme.hpp"

#include <string_view>

namespace rsmamec {

// Fixed SIC order for the two-user uplink NOMA baseline. The user decoded
// first sees the other's signal as interference.
enum class SicOrder { PuFirst, SuFirst };

std::string_view to_string(SicOrder order);

struct NomaRates {
    double rate_a = 0.0;
    double rate_b = 0.0;
};

NomaRates noma_rates(SicOrder order, double rx_a, double rx_b, double t2_s, double bandwidth_hz);

bool noma_outcome(const NomaRates& rates, const RateTargets& targets, bool times_ok);

}  // namespace rsmamec
