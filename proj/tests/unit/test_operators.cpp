#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "morl/operators.hpp"

#include <cmath>

using namespace morl;

namespace {
// Independent formula oracles, written with exp/log.
double beta_oracle(double u, double eta)
{
    const double base = u <= 0.5 ? 2.0 * u : 1.0 / (2.0 * (1.0 - u));
    return std::exp(std::log(base) / (eta + 1.0));
}
double delta_oracle(double u, double eta)
{
    if (u < 0.5)
        return std::exp(std::log(2.0 * u) / (eta + 1.0)) - 1.0;
    return 1.0 - std::exp(std::log(2.0 * (1.0 - u)) / (eta + 1.0));
}
} // namespace

TEST_CASE("SBX formula")
{
    CHECK(sbx_beta(0.5, 15) == doctest::Approx(1.0).epsilon(1e-15));
    const double beta = beta_oracle(0.8, 15);
    CHECK(beta == doctest::Approx(std::pow(2.5, 1.0 / 16.0)));
    CHECK(sbx_beta(0.8, 15) == doctest::Approx(beta).epsilon(1e-14));
    const auto [c1, c2] = sbx_gene(0.0, 1.0, 0.8, 15);
    CHECK(c1 == doctest::Approx((1 - beta) / 2).epsilon(1e-14));
    CHECK(c2 == doctest::Approx((1 + beta) / 2).epsilon(1e-14));
    CHECK(c1 + c2 == doctest::Approx(1.0));

    const auto mid = sbx_gene(-0.3, 0.7, 0.5, 15);
    CHECK(mid.first == doctest::Approx(-0.3));
    CHECK(mid.second == doctest::Approx(0.7));
    for (double u : {0.01, 0.2, 0.49, 0.51, 0.9, 0.999})
        CHECK(sbx_beta(u, 15) == doctest::Approx(beta_oracle(u, 15)).epsilon(1e-14));
}

TEST_CASE("SBX crossover draws and clamping")
{
    const Genome a{0.0, 1.0, -4.9, 2.0};
    const Genome b{1.0, 1.0, 4.9, -3.0};
    Rng rng(42), replay(42);
    const auto [c1, c2] = sbx_crossover(a, b, 15, 0.5, Bounds{}, rng);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double u_apply = replay.uniform();
        const double u_beta = replay.uniform();
        double e1 = a[i], e2 = b[i];
        if (u_apply < 0.5) {
            const double bt = beta_oracle(u_beta, 15);
            e1 = std::clamp(0.5 * ((1 + bt) * a[i] + (1 - bt) * b[i]), -5.0, 5.0);
            e2 = std::clamp(0.5 * ((1 - bt) * a[i] + (1 + bt) * b[i]), -5.0, 5.0);
        }
        CHECK(c1[i] == doctest::Approx(e1).epsilon(1e-14));
        CHECK(c2[i] == doctest::Approx(e2).epsilon(1e-14));
    }

    Rng r2(1);
    const Genome same{0.3, -2.0, 4.0};
    const auto twins = sbx_crossover(same, same, 15, 1.0, Bounds{}, r2);
    CHECK(twins.first == same);
    CHECK(twins.second == same);

    Rng r3(5);
    for (int t = 0; t < 200; ++t) {
        const auto kids = sbx_crossover(Genome{-5.0, 5.0}, Genome{5.0, -5.0}, 2, 1.0, Bounds{}, r3);
        for (double x : kids.first) {
            CHECK(x >= -5.0);
            CHECK(x <= 5.0);
        }
    }
    CHECK_THROWS_AS(sbx_crossover(Genome{1}, Genome{1, 2}, 15, 0.5, Bounds{}, r3), std::invalid_argument);
}

TEST_CASE("polynomial mutation")
{
    CHECK(polynomial_delta(0.5, 20) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(polynomial_delta(0.9, 20) == doctest::Approx(delta_oracle(0.9, 20)).epsilon(1e-14));
    CHECK(polynomial_delta(0.9, 20) == doctest::Approx(1.0 - std::pow(0.2, 1.0 / 21.0)));
    for (double u : {0.0, 0.1, 0.3, 0.7, 0.99})
        CHECK(polynomial_delta(u, 20) == doctest::Approx(delta_oracle(u, 20)).epsilon(1e-14));

    const Genome g{0.0, 1.0, -2.0, 4.99};
    Rng rng(9), replay(9);
    const auto m = polynomial_mutation(g, 20, 0.5, Bounds{}, rng);
    for (std::size_t i = 0; i < g.size(); ++i) {
        double e = g[i];
        if (replay.uniform() < 0.5)
            e = std::clamp(g[i] + delta_oracle(replay.uniform(), 20) * 10.0, -5.0, 5.0);
        CHECK(m[i] == doctest::Approx(e).epsilon(1e-14));
    }

    Rng r0(3);
    CHECK(polynomial_mutation(g, 20, 0.0, Bounds{}, r0) == g);
    CHECK_THROWS_AS(polynomial_mutation(g, 20, 1.5, Bounds{}, r0), std::invalid_argument);
}

TEST_CASE("make_offspring stream order")
{
    VariationParams p;
    const Genome a{0.1, 0.2, 0.3}, b{-1.0, 2.0, 0.5};
    Rng rng(77), replay(77);
    const auto kids = make_offspring(a, b, p, rng);

    std::pair<Genome, Genome> expect{a, b};
    if (replay.uniform() < p.sbx_prob)
        expect = sbx_crossover(a, b, p.sbx_eta, p.sbx_gene_prob, p.bounds, replay);
    expect.first = polynomial_mutation(expect.first, p.pm_eta, 1.0 / 3.0, p.bounds, replay);
    expect.second = polynomial_mutation(expect.second, p.pm_eta, 1.0 / 3.0, p.bounds, replay);
    CHECK(kids == expect);
    CHECK(p.mutation_probability(57) == doctest::Approx(1.0 / 57));
}
