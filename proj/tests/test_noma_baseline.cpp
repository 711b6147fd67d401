#include "rsmamec/noma_baseline.hpp"
#include "rsmamec/random.hpp"
#include "rsmamec/rsma_scheme.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace rsmamec;

namespace {
constexpr double kT2 = 4e-3;
constexpr double kB = 1e6;
}  // namespace

TEST_CASE("noma_rates")
{
    const auto r = noma_rates(SicOrder::PuFirst, 9.0, 0.0, kT2, kB);
    CHECK(r.rate_a == kT2 * kB * std::log2(10.0));

    const auto pu = noma_rates(SicOrder::PuFirst, 9.0, 4.0, kT2, kB);
    const auto su = noma_rates(SicOrder::SuFirst, 4.0, 9.0, kT2, kB);
    CHECK(pu.rate_a == su.rate_b);
    CHECK(pu.rate_b == su.rate_a);
}

TEST_CASE("noma_outcome")
{
    const auto zero = rate_targets(0.0, 0.0, kT2, kB);
    CHECK(noma_outcome({0.0, 0.0}, zero, true));
    CHECK_FALSE(noma_outcome({0.0, 0.0}, zero, false));

    const auto targets = rate_targets(1000.0, 500.0, kT2, kB);
    CHECK_FALSE(noma_outcome({999.0, 600.0}, targets, true));
    CHECK_FALSE(noma_outcome({1000.0, 499.0}, targets, true));
    CHECK(noma_outcome({1000.0, 500.0}, targets, true));
}

TEST_CASE("RSMA Case I / III coincide with fixed-order NOMA")
{
    Substream rng(31, 0);
    int case1 = 0, case3 = 0;
    for (int i = 0; i < 200000; ++i) {
        const double rx_a = std::exp(6.0 * rng.uniform_open() - 2.0);
        const double rx_b = std::exp(6.0 * rng.uniform_open() - 2.0);
        const auto targets = rate_targets(12000.0 * rng.uniform_open(), 6000.0 * rng.uniform_open(), kT2, kB);
        const auto d = decide(rx_a, rx_b, targets, kT2, kB);
        if (d.case_label == Case::I) {
            ++case1;
            const auto n = noma_rates(SicOrder::PuFirst, rx_a, rx_b, kT2, kB);
            CHECK(d.rate_a == n.rate_a);
            CHECK(d.rate_b == n.rate_b);
            const auto ok = offload_outcome(d, targets);
            CHECK((ok.pu_ok && ok.su_ok) == noma_outcome(n, targets, true));
        } else if (d.case_label == Case::III) {
            ++case3;
            const auto n = noma_rates(SicOrder::SuFirst, rx_a, rx_b, kT2, kB);
            CHECK(d.rate_a == n.rate_a);
            CHECK(d.rate_b == n.rate_b);
        }
    }
    CHECK(case1 > 1000);
    CHECK(case3 > 1000);
}
