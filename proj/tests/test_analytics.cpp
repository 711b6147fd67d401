#include "rsmamec/analytics.hpp"
#include "rsmamec/random.hpp"
#include "rsmamec/system_model.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace rsmamec;

namespace {

// Rearranged total: e^-A [1 + (ea eb / ra) expm1(D)/D], D = ea eb (rb - ra)/(ra rb).
// Has no singularity at ra == rb; used as an independent algebraic route.
double stable_total(double ra, double rb, double ea, double eb)
{
    const double a = eb / rb + ea * (1.0 + eb) / ra;
    const double d = ea * eb * (rb - ra) / (ra * rb);
    const double ratio = d == 0.0 ? 1.0 : std::expm1(d) / d;
    return std::exp(-a) * (1.0 + ea * eb / ra * ratio);
}

struct Tuple {
    double rho_a, rho_b, eps_a, eps_b;
};

Tuple random_tuple(Substream& rng)
{
    // log-uniform rho in [1, 1e3], eps in [0.01, 10]
    return {std::pow(10.0, 3.0 * rng.uniform_open()), std::pow(10.0, 3.0 * rng.uniform_open()),
            std::pow(10.0, 3.0 * rng.uniform_open() - 2.0), std::pow(10.0, 3.0 * rng.uniform_open() - 2.0)};
}

}  // namespace

TEST_CASE("closed forms at hand-evaluated points")
{
    CHECK(ps_case1_closed(10, 5, 0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ps_case2_closed(10, 5, 0, 0) == doctest::Approx(0.0));
    CHECK(ps_total_closed(10, 5, 0, 0) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK(ps_case1_closed(10, 5, 1, 1) == doctest::Approx(0.446880030690426200).epsilon(1e-14));
    CHECK(ps_case2_closed(10, 5, 1, 1) == doctest::Approx(0.287229401668218977).epsilon(1e-13));
    CHECK(ps_total_closed(10, 5, 1, 1) == doctest::Approx(0.734109432358645178).epsilon(1e-14));

    const auto q = ps_quadrature_oracle(10, 5, 1, 1);
    CHECK(q.case1 == doctest::Approx(0.446880030690426200).epsilon(1e-9));
    CHECK(q.case2 == doctest::Approx(0.287229401668218977).epsilon(1e-9));

    CHECK_THROWS_AS(ps_case1_closed(0, 5, 1, 1), std::domain_error);
    CHECK_THROWS_AS(ps_total_closed(1, -5, 1, 1), std::domain_error);
}

TEST_CASE("removable singularity at rho_a == rho_b")
{
    // e^{-(ea + eb + ea eb)/rho} (1 + ea eb / rho)
    CHECK(ps_total_closed(10, 10, 1, 1) == doctest::Approx(0.814900042749889653).epsilon(1e-14));
    CHECK(ps_total_limit(10, 10, 1, 1) == doctest::Approx(0.814900042749889653).epsilon(1e-14));

    const double limit = ps_total_closed(10, 10, 1, 1);
    const double up = ps_total_closed(10 * (1 + 1e-6), 10, 1, 1);
    const double down = ps_total_closed(10 * (1 - 1e-6), 10, 1, 1);
    CHECK(std::abs(0.5 * (up + down) - limit) < 1e-8);
    // Each side moves by first order only.
    CHECK(std::abs(up - limit) < 1e-6);
    CHECK(std::abs(down - limit) < 1e-6);

    SUBCASE("limit branch agrees with the rearranged route")
    {
        Substream rng(3, 3);
        for (int i = 0; i < 500; ++i) {
            const auto t = random_tuple(rng);
            const double rb = t.rho_a * (1.0 + 2e-10 * (rng.uniform_open() - 0.5));
            CHECK(ps_total_closed(t.rho_a, rb, t.eps_a, t.eps_b)
                  == doctest::Approx(stable_total(t.rho_a, rb, t.eps_a, t.eps_b)).epsilon(1e-10));
            const double split = ps_case1_closed(t.rho_a, rb, t.eps_a, t.eps_b)
                                 + ps_case2_closed(t.rho_a, rb, t.eps_a, t.eps_b);
            CHECK(split == doctest::Approx(stable_total(t.rho_a, rb, t.eps_a, t.eps_b)).epsilon(1e-10));
        }
    }
    SUBCASE("direct branch agrees with the rearranged route")
    {
        Substream rng(3, 4);
        for (int i = 0; i < 2000; ++i) {
            const auto t = random_tuple(rng);
            CHECK(ps_total_closed(t.rho_a, t.rho_b, t.eps_a, t.eps_b)
                  == doctest::Approx(stable_total(t.rho_a, t.rho_b, t.eps_a, t.eps_b)).epsilon(1e-9).scale(1e-3));
        }
    }
}

TEST_CASE("component identity away from the singularity")
{
    Substream rng(17, 0);
    int checked = 0;
    while (checked < 1000) {
        const auto t = random_tuple(rng);
        if (std::abs(t.rho_a - t.rho_b) / t.rho_a <= 1e-3)
            continue;
        ++checked;
        const auto b = ps_breakdown(t.rho_a, t.rho_b, t.eps_a, t.eps_b);
        CHECK(std::abs(b.case1 + b.case2 - b.total) <= 1e-12);
        CHECK(b.case3 == 0.0);
    }
}

TEST_CASE("quadrature oracle")
{
    const auto zero = ps_quadrature_oracle(3.0, 7.0, 0.0, 0.0);
    CHECK(std::abs(zero.total - 1.0) <= 1e-9);
    CHECK(zero.case2 == 0.0);

    Substream rng(41, 0);
    for (int i = 0; i < 25; ++i) {
        const auto t = random_tuple(rng);
        const auto q = ps_quadrature_oracle(t.rho_a, t.rho_b, t.eps_a, t.eps_b);
        const double c1 = ps_case1_closed(t.rho_a, t.rho_b, t.eps_a, t.eps_b);
        const double c2 = ps_case2_closed(t.rho_a, t.rho_b, t.eps_a, t.eps_b);
        CHECK(std::abs(q.case1 - c1) <= 1e-6 * c1);
        CHECK(std::abs(q.case2 - c2) <= 1e-6 * c2);
    }
}

TEST_CASE("probability bounds under extreme inputs")
{
    Substream rng(23, 0);
    for (int i = 0; i < 20000; ++i) {
        const double ra = std::pow(10.0, 18.0 * rng.uniform_open() - 6.0);
        const double rb = std::pow(10.0, 18.0 * rng.uniform_open() - 6.0);
        const double ea = std::pow(10.0, 12.0 * rng.uniform_open() - 6.0);
        const double eb = std::pow(10.0, 12.0 * rng.uniform_open() - 6.0);
        const auto b = ps_breakdown(ra, rb, ea, eb);
        CHECK(b.total >= 0.0);
        CHECK(b.total <= 1.0);
        CHECK(b.case1 >= 0.0);
        CHECK(b.case1 <= 1.0);
        CHECK(b.case2 >= 0.0);
        CHECK(b.case2 <= 1.0);
        CHECK(std::isfinite(b.total));
    }
}

TEST_CASE("monotonicity")
{
    Substream rng(29, 0);
    for (int i = 0; i < 5000; ++i) {
        const auto t = random_tuple(rng);
        const double up = 1.0 + rng.uniform_open();
        const double p = ps_total_closed(t.rho_a, t.rho_b, t.eps_a, t.eps_b);
        CHECK(ps_total_closed(t.rho_a, t.rho_b, t.eps_a * up, t.eps_b) <= p + 1e-12);
        CHECK(ps_total_closed(t.rho_a, t.rho_b, t.eps_a, t.eps_b * up) <= p + 1e-12);
        CHECK(ps_total_closed(t.rho_a * up, t.rho_b, t.eps_a, t.eps_b) >= p - 1e-12);
        CHECK(ps_total_closed(t.rho_a, t.rho_b * up, t.eps_a, t.eps_b) >= p - 1e-12);
    }
}

TEST_CASE("high-SNR asymptotes")
{
    auto zero = ps_high_snr(0.3, 0.1, 0.0);
    CHECK(zero.case1 == 1.0);
    CHECK(zero.case2 == 0.0);
    auto sym = ps_high_snr(0.2, 0.2, 1.0);
    CHECK(sym.case1 == 0.5);
    CHECK(sym.case2 == 0.5);

    Substream rng(1, 1);
    for (int i = 0; i < 1000; ++i) {
        const auto a = ps_high_snr(rng.uniform_open(), rng.uniform_open(), 100.0 * rng.uniform_open());
        CHECK(a.case1 + a.case2 == doctest::Approx(1.0).epsilon(1e-15));
    }

    // Paper geometry with powers scaled by 1e6.
    const double la = path_loss(5.0, 4.0), lb = path_loss(25.0, 4.0);
    const double ra = transmit_snr(0.1 * 1e6, la, 1e-9), rb = transmit_snr(0.1 * 1e6, lb, 1e-9);
    const double ea = 50.0, eb = 2.0;
    const auto asym = ps_high_snr(la, lb, ea);
    CHECK(std::abs(ps_total_closed(ra, rb, ea, eb) - 1.0) < 1e-3);
    CHECK(std::abs(ps_case1_closed(ra, rb, ea, eb) - asym.case1) < 1e-3);
    CHECK(std::abs(ps_case2_closed(ra, rb, ea, eb) - asym.case2) < 1e-3);
}
