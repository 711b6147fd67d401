#include "rsmamec/noma_baseline.hpp"
#include "rsmamec/random.hpp"
#include "rsmamec/rsma_scheme.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>

using namespace rsmamec;

namespace {

constexpr double kT2 = 5e-3;
constexpr double kB = 1e6;
constexpr double kT2B = kT2 * kB;

double bits(double sinr) { return kT2B * std::log2(1.0 + sinr); }

}  // namespace

TEST_CASE("epsilon")
{
    CHECK(epsilon(0.0, kT2, kB) == 0.0);
    CHECK(epsilon(10000.0, kT2, kB) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(epsilon(5000.0, kT2, kB) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(epsilon(1.0, 0.0, kB), std::domain_error);
    CHECK_THROWS_AS(epsilon(1.0, kT2, -1.0), std::domain_error);

    // Zero targets stay at zero threshold even for an empty offload phase.
    const auto t = rate_targets(0.0, 0.0, 0.0, kB);
    CHECK(t.eps_a == 0.0);
    CHECK(t.eps_b == 0.0);

    const auto split = split_targets(rate_targets(1000.0, 3000.0, kT2, kB), 0.3);
    CHECK(split.target_b1 + split.target_b2 == split.target_b);
}

TEST_CASE("interference_threshold and classify_case")
{
    CHECK(interference_threshold(10.0, 4.0) == doctest::Approx(1.5));
    CHECK(interference_threshold(4.0, 4.0) == 0.0);
    CHECK(interference_threshold(2.0, 4.0) == 0.0);
    CHECK_THROWS_AS(interference_threshold(2.0, 0.0), std::domain_error);

    CHECK(classify_case(1.0, 1.5) == Case::I);
    CHECK(classify_case(1.5, 1.5) == Case::I);
    CHECK(classify_case(5.0, 1.5) == Case::II);
    CHECK(classify_case(5.0, 0.0) == Case::III);
}

TEST_CASE("optimal_split")
{
    SUBCASE("Case II power and rate split")
    {
        const auto s = optimal_split(Case::II, 10.0, 5.0, 4.0, kT2, kB, 10000.0);
        CHECK(s.alpha == doctest::Approx(0.7).epsilon(1e-15));
        CHECK(s.beta == doctest::Approx(0.339035952556318826).epsilon(1e-14));
    }
    SUBCASE("fixed cases")
    {
        const auto one = optimal_split(Case::I, 3.0, 0.5, 1.0, kT2, kB, 100.0);
        CHECK(one.alpha == 0.0);
        CHECK(one.beta == 0.0);
        CHECK_FALSE(one.su_silent);
        const auto three = optimal_split(Case::III, 0.5, 3.0, 1.0, kT2, kB, 100.0);
        CHECK(three.alpha == 1.0);
        CHECK(three.beta == 1.0);
        CHECK_FALSE(three.su_silent);
    }
    SUBCASE("protected stream alone covers the target")
    {
        // tau = 1.5 carries 5000 log2(2.5) ~ 6610 bits > 1000.
        const auto s = optimal_split(Case::II, 10.0, 5.0, 4.0, kT2, kB, 1000.0);
        CHECK(s.beta == 0.0);
        CHECK_FALSE(s.su_silent);
    }
    SUBCASE("SU stays silent when x_b1 cannot carry the rest")
    {
        // R_b1 = 5000 log2(1 + 3.5/12.5) ~ 1781 bits; need 40000 - 6610.
        const auto s = optimal_split(Case::II, 10.0, 5.0, 4.0, kT2, kB, 40000.0);
        CHECK(s.su_silent);
    }
    SUBCASE("inconsistent case is a logic error")
    {
        CHECK_THROWS_AS(optimal_split(Case::II, 10.0, 1.0, 4.0, kT2, kB, 100.0), std::logic_error);
        CHECK_THROWS_AS(optimal_split(Case::II, 2.0, 5.0, 4.0, kT2, kB, 100.0), std::logic_error);
    }
}

TEST_CASE("achievable_rates")
{
    SUBCASE("Case II meets the PU target with equality")
    {
        const auto r = achievable_rates(Case::II, 0.7, false, 10.0, 5.0, 1.5, kT2, kB);
        CHECK(r.rate_a == doctest::Approx(bits(4.0)).epsilon(1e-14));
        CHECK(r.rate_b2 == doctest::Approx(bits(1.5)).epsilon(1e-15));
        CHECK(r.rate_b1 == doctest::Approx(bits(3.5 / 12.5)).epsilon(1e-15));
    }
    SUBCASE("interference-free limits")
    {
        CHECK(achievable_rates(Case::I, 0.0, false, 7.0, 0.0, 1.0, kT2, kB).rate_a == bits(7.0));
        CHECK(achievable_rates(Case::III, 1.0, false, 0.0, 7.0, 0.0, kT2, kB).rate_b1 == bits(7.0));
    }
    SUBCASE("Case II silent SU leaves the PU alone")
    {
        const auto r = achievable_rates(Case::II, 0.7, true, 10.0, 5.0, 1.5, kT2, kB);
        CHECK(r.rate_a == bits(10.0));
        CHECK(r.rate_b() == 0.0);
    }
}

TEST_CASE("offload_outcome")
{
    SUBCASE("Case II transmitting always protects the PU")
    {
        const auto targets = rate_targets(kT2B * std::log2(5.0), 7000.0, kT2, kB);
        const auto d = decide(10.0, 5.0, targets, kT2, kB);
        REQUIRE(d.case_label == Case::II);
        REQUIRE_FALSE(d.su_silent);
        CHECK(d.rate_a == targets.target_a);
        CHECK(offload_outcome(d, targets).pu_ok);
    }
    SUBCASE("Case III never serves the PU")
    {
        const auto targets = rate_targets(10000.0, 10.0, kT2, kB);  // eps_a = 3
        const auto d = decide(2.0, 50.0, targets, kT2, kB);
        REQUIRE(d.case_label == Case::III);
        CHECK_FALSE(offload_outcome(d, targets).pu_ok);
    }
    SUBCASE("zero targets succeed")
    {
        const auto targets = rate_targets(0.0, 0.0, kT2, kB);
        const auto d = decide(0.3, 0.2, targets, kT2, kB);
        CHECK(std::isinf(d.tau));
        CHECK(d.case_label == Case::I);
        const auto ok = offload_outcome(d, targets);
        CHECK(ok.pu_ok);
        CHECK(ok.su_ok);
    }
    SUBCASE("boundary equality counts as success")
    {
        RsmaDecision d;
        d.case_label = Case::I;
        d.rate_a = 100.0;
        d.rate_b = 200.0;
        RateTargets t;
        t.target_a = 100.0;
        t.target_b = 200.0;
        const auto ok = offload_outcome(d, t);
        CHECK(ok.pu_ok);
        CHECK(ok.su_ok);
        t.target_b = std::nextafter(200.0, 300.0);
        CHECK_FALSE(offload_outcome(d, t).su_ok);
    }
}

TEST_CASE("decision properties over random draws")
{
    Substream rng(99, 0);
    int case2_seen = 0;
    for (int i = 0; i < 100000; ++i) {
        const double rx_a = std::exp(8.0 * rng.uniform_open() - 2.0);
        const double rx_b = std::exp(8.0 * rng.uniform_open() - 2.0);
        const double t2 = 1e-3 + 9e-3 * rng.uniform_open();
        const auto targets = rate_targets(20000.0 * rng.uniform_open(), 12000.0 * rng.uniform_open(), t2, kB);
        const auto d = decide(rx_a, rx_b, targets, t2, kB);

        CHECK(d.alpha >= 0.0);
        CHECK(d.alpha <= 1.0);
        CHECK(d.beta >= 0.0);
        CHECK(d.beta <= 1.0);
        CHECK(d.tau >= 0.0);
        if (!d.su_silent)
            CHECK(d.rate_b == d.rate_b1 + d.rate_b2);
        else
            CHECK(d.rate_b == 0.0);

        // SINRs from the general decoding-order expressions agree with the case formulas.
        if (d.case_label == Case::II && !d.su_silent) {
            ++case2_seen;
            const auto g = stream_sinrs(d.alpha, rx_a, rx_b);
            const double t2B = t2 * kB;
            CHECK(g.sinr_b2 == doctest::Approx(d.tau).epsilon(1e-12));
            CHECK(t2B * std::log2(1.0 + g.sinr_b1) == doctest::Approx(d.rate_b1).epsilon(1e-9));
            CHECK(d.rate_a == targets.target_a);
        }
    }
    CHECK(case2_seen > 1000);
}

TEST_CASE("case boundary continuity")
{
    // rx_b -> tau from above: Case II collapses onto Case I.
    const double rx_a = 10.0, eps_a = 4.0;
    const double tau = interference_threshold(rx_a, eps_a);
    const double rx_b = tau * (1.0 + 1e-12);

    const auto s = optimal_split(Case::II, rx_a, rx_b, eps_a, kT2, kB, 1e9);
    CHECK(s.alpha < 1e-11);
    const auto two = achievable_rates(Case::II, s.alpha, false, rx_a, rx_b, tau, kT2, kB);
    const auto one = achievable_rates(Case::I, 0.0, false, rx_a, tau, tau, kT2, kB);
    CHECK(two.rate_a == doctest::Approx(one.rate_a).epsilon(1e-9));
    CHECK(two.rate_b() == doctest::Approx(one.rate_b()).epsilon(1e-9));
}

TEST_CASE("beta* maximizes the SU sum rate among feasible splits")
{
    // A beta above beta* leaves the protected stream below tau; the SU then
    // puts more power on x_b1 and loses sum rate.
    const double rx_a = 40.0, rx_b = 30.0, eps_a = 3.0, target_b = 9000.0;
    const double tau = interference_threshold(rx_a, eps_a);
    const auto best = optimal_split(Case::II, rx_a, rx_b, eps_a, kT2, kB, target_b);
    auto sum_rate_at = [&](double beta) {
        const double protected_sinr = std::exp2((1.0 - beta) * target_b / kT2B) - 1.0;
        const auto g = stream_sinrs(1.0 - protected_sinr / rx_b, rx_a, rx_b);
        return bits(g.sinr_b1) + bits(g.sinr_b2);
    };
    const double at_best = sum_rate_at(best.beta);
    CHECK(bits(tau) == doctest::Approx(bits(stream_sinrs(best.alpha, rx_a, rx_b).sinr_b2)));
    for (double delta = 0.01; best.beta + delta <= 1.0; delta += 0.01)
        CHECK(sum_rate_at(best.beta + delta) <= at_best + 1e-9);
}

TEST_CASE("PU protection matches PU-alone success")
{
    Substream rng(5, 1);
    int checked = 0;
    for (int i = 0; i < 100000; ++i) {
        const double rx_a = std::exp(6.0 * rng.uniform_open() - 1.0);
        const double rx_b = std::exp(6.0 * rng.uniform_open() - 1.0);
        const auto targets = rate_targets(30000.0 * rng.uniform_open(), 8000.0 * rng.uniform_open(), kT2, kB);
        const auto d = decide(rx_a, rx_b, targets, kT2, kB);
        if (!(d.tau > 0.0))
            continue;
        ++checked;
        const bool alone = kT2B * std::log2(1.0 + rx_a) >= targets.target_a;
        CHECK(offload_outcome(d, targets).pu_ok == alone);
    }
    CHECK(checked > 10000);
}
