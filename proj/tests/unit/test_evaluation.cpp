#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "morl/evaluation.hpp"

#include <cmath>

using namespace morl;

namespace {
PolicyFn constant_policy(double a)
{
    return [a](std::span<const double>, std::span<double> out) {
        for (auto& x : out)
            x = a;
    };
}

// Two walker steps without noise from v0, discounted by hand.
ObjectiveVector walker_two_steps(double v0, double a)
{
    const double v1 = v0 + 0.1 * a - 0.05 * v0;
    const double v2 = v1 + 0.1 * a - 0.05 * v1;
    return {v1 + 0.99 * v2, -(a * a) - 0.99 * a * a};
}
} // namespace

TEST_CASE("scalarize")
{
    CHECK(scalarize(std::vector<double>{0.4, 0.6}) == doctest::Approx(0.5));
    CHECK(scalarize(std::vector<double>{1.0, 2.0, 3.0}) == doctest::Approx(2.0));
    const std::vector<double> u{0.3, -1.2, 4.0}, v{2.0, 0.5, -0.25};
    for (double alpha : {0.0, 0.25, 0.7, 1.0}) {
        std::vector<double> mix(3);
        for (int j = 0; j < 3; ++j)
            mix[j] = alpha * u[j] + (1 - alpha) * v[j];
        CHECK(scalarize(mix) == doctest::Approx(alpha * scalarize(u) + (1 - alpha) * scalarize(v)));
    }
}

TEST_CASE("rollout: bandit")
{
    const auto env = make_env("TradeoffBandit");
    Rng rng(3);
    const auto r = rollout(env, constant_policy(0.0), rng);
    CHECK(r == ObjectiveVector{0.5, 0.5});
    Rng rng2(3);
    CHECK(rollout(env, constant_policy(1.0), rng2) == ObjectiveVector{1.0, 0.0});
}

TEST_CASE("rollout: walker two steps, noise off")
{
    // From rest: v1 = 0.1, v2 = 0.195, return (0.1 + 0.99 * 0.195, -1.99).
    const auto at_rest = walker_two_steps(0.0, 1.0);
    CHECK(at_rest[0] == doctest::Approx(0.29305).epsilon(1e-12));
    CHECK(at_rest[1] == doctest::Approx(-1.99).epsilon(1e-12));

    auto env = make_env("NoisyPointWalker", 0.0);
    env.horizon = 2;
    for (std::uint64_t seed : {1u, 2u, 99u}) {
        Rng probe(seed);
        const double v0 = probe.uniform(-0.05, 0.05);
        const auto expect = walker_two_steps(v0, 1.0);
        Rng rng(seed);
        const auto got = rollout(env, constant_policy(1.0), rng);
        CHECK(got[0] == doctest::Approx(expect[0]).epsilon(1e-13));
        CHECK(got[1] == doctest::Approx(expect[1]).epsilon(1e-13));
    }
}

TEST_CASE("rollout checks dimensions")
{
    const auto env = make_env("HopLander");
    const PolicySpec wrong{2, {4, 4, 4}, 1};
    Rng rng(0);
    CHECK_THROWS_AS(rollout(env, wrong, Genome(genome_length(wrong), 0.0), rng), std::invalid_argument);
    const PolicySpec right{3, {4, 4, 4}, 2};
    CHECK_THROWS_AS(rollout(env, right, Genome(3, 0.0), rng), std::invalid_argument);
}

TEST_CASE("evaluate equals replayed episodes")
{
    const auto env = make_env("NoisyPointWalker");
    const PolicySpec spec{2, {4, 4, 4}, 1};
    Rng g(11);
    const auto genome = init_genome(spec, g);
    const std::uint64_t base = 0xABCDEFu;

    const auto ind = evaluate(env, spec, genome, 5, base);
    ObjectiveVector sum(2, 0.0);
    for (int e = 0; e < 5; ++e) {
        Rng rng(derive_seed(base, {static_cast<std::uint64_t>(e)}));
        const auto r = rollout(env, spec, genome, rng);
        sum[0] += r[0];
        sum[1] += r[1];
    }
    CHECK(ind.mean_return[0] == doctest::Approx(sum[0] / 5).epsilon(1e-15));
    CHECK(ind.mean_return[1] == doctest::Approx(sum[1] / 5).epsilon(1e-15));
    CHECK(ind.n_episodes == 5);
    CHECK(ind.genome == genome);
    CHECK(ind.scalar_value == doctest::Approx(scalarize(ind.mean_return)));

    // n_episodes = 1 is the stream (seed_base, 0)
    Rng first(episode_seed(base, 0));
    CHECK(evaluate(env, spec, genome, 1, base).mean_return == rollout(env, spec, genome, first));

    CHECK_THROWS_AS(evaluate(env, spec, genome, 0, base), std::invalid_argument);
}

TEST_CASE("deterministic environment: episode count does not matter")
{
    const auto env = make_env("NoisyPointWalker", 0.0);
    const PolicySpec spec{2, {4, 4, 4}, 1};
    Rng g(4);
    auto genome = init_genome(spec, g);
    // The walker reset is still random, so use the bandit for exact equality.
    const auto bandit = make_env("TradeoffBandit");
    const PolicySpec bspec{1, {4, 4, 4}, 1};
    Rng gb(4);
    const auto bg = init_genome(bspec, gb);
    const auto one = evaluate(bandit, bspec, bg, 1, 5);
    const auto ten = evaluate(bandit, bspec, bg, 10, 77);
    CHECK(one.mean_return[0] == doctest::Approx(ten.mean_return[0]).epsilon(1e-14));
    CHECK(one.mean_return[1] == doctest::Approx(ten.mean_return[1]).epsilon(1e-14));
    CHECK(evaluate(env, spec, genome, 3, 1).mean_return.size() == 2);
}

TEST_CASE("averaging more episodes reduces spread")
{
    const auto env = make_env("NoisyPointWalker", 0.2);
    const PolicySpec spec{2, {4, 4, 4}, 1};
    Rng g(21);
    const auto genome = init_genome(spec, g);
    auto spread = [&](int episodes) {
        double m = 0, m2 = 0;
        const int reps = 200;
        for (int r = 0; r < reps; ++r) {
            const double x = evaluate(env, spec, genome, episodes, derive_seed(9, {static_cast<std::uint64_t>(r)}))
                                 .mean_return[0];
            m += x;
            m2 += x * x;
        }
        m /= reps;
        return m2 / reps - m * m;
    };
    CHECK(spread(10) < spread(1));
}

TEST_CASE("population kernels and the batch evaluator")
{
    EvaluationContext ctx{make_env("HopLander"), PolicySpec{3, {4, 4, 4}, 2}, 3};
    ctx.validate();
    Rng g(2);
    std::vector<Genome> genomes;
    for (int i = 0; i < 6; ++i)
        genomes.push_back(init_genome(ctx.policy, g));

    Evaluator ev(ctx, 1234, 1);
    const auto batch0 = ev(genomes);
    const auto batch1 = ev(genomes);
    CHECK(ev.evaluations() == 12);
    CHECK(ev.batches() == 2);
    for (std::size_t i = 0; i < genomes.size(); ++i) {
        const auto expect = evaluate(ctx.env, ctx.policy, genomes[i], 3, derive_seed(1234, {0, i}));
        CHECK(batch0[i].mean_return == expect.mean_return);
        const auto expect1 = evaluate(ctx.env, ctx.policy, genomes[i], 3, derive_seed(1234, {1, i}));
        CHECK(batch1[i].mean_return == expect1.mean_return);
    }

    // batch mean of per-individual means equals the mean over all episodes
    double all = 0;
    for (std::size_t i = 0; i < genomes.size(); ++i)
        for (int e = 0; e < 3; ++e) {
            Rng rng(episode_seed(derive_seed(1234, {0, i}), e));
            all += rollout(ctx.env, ctx.policy, genomes[i], rng)[0];
        }
    double means = 0;
    for (const auto& ind : batch0)
        means += ind.mean_return[0];
    CHECK(means / 6 == doctest::Approx(all / 18).epsilon(1e-12));

    EvaluationContext bad = ctx;
    bad.policy.action_dim = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("non-finite returns are reported")
{
    EvaluationContext ctx{make_env("NoisyPointWalker"), PolicySpec{2, {4, 4, 4}, 1}, 1};
    Genome g(genome_length(ctx.policy), 0.0);
    g[0] = std::nan("");
    const std::vector<std::uint64_t> seeds{1};
    // NaN actions are clamped to NaN by std::clamp; the return must be flagged
    CHECK_THROWS_AS(evaluate_population_serial(ctx, {g}, seeds), NonFiniteEvaluation);
    CHECK_THROWS_AS(evaluate_population_parallel(ctx, {g}, seeds, 2), NonFiniteEvaluation);
}
