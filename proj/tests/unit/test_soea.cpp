#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "morl/soea.hpp"

#include <algorithm>
#include <set>

using namespace morl;

namespace {
// Synthetic two-objective problem: (-(x0-1)^2, -(x0+1)^2 - sum_{j>0} x_j^2).
EvaluatedIndividual synth(const Genome& g)
{
    double rest = 0;
    for (std::size_t j = 1; j < g.size(); ++j)
        rest += g[j] * g[j];
    EvaluatedIndividual e;
    e.genome = g;
    e.mean_return = {-(g[0] - 1) * (g[0] - 1), -(g[0] + 1) * (g[0] + 1) - rest};
    e.n_episodes = 1;
    e.scalar_value = scalarize(e.mean_return);
    return e;
}

struct Counter {
    std::size_t calls = 0;
    std::size_t evaluations = 0;
    BatchEvaluator fn()
    {
        return [this](const std::vector<Genome>& gs) {
            ++calls;
            evaluations += gs.size();
            Population out;
            for (const auto& g : gs)
                out.push_back(synth(g));
            return out;
        };
    }
};

Population random_population(std::size_t n, std::size_t dim, std::uint64_t seed)
{
    Rng rng(seed);
    Population pop;
    for (std::size_t i = 0; i < n; ++i) {
        Genome g(dim);
        for (auto& x : g)
            x = rng.uniform(-5, 5);
        pop.push_back(synth(g));
    }
    return pop;
}
} // namespace

TEST_CASE("tournament and best index")
{
    Population pop{synth({0.0}), synth({1.0}), synth({3.0})};
    CHECK(best_scalar_index(pop) == 0);
    Rng rng(4), replay(4);
    for (int t = 0; t < 50; ++t) {
        const auto a = replay.index(3), b = replay.index(3);
        const auto expect = pop[b].scalar_value > pop[a].scalar_value ? b : a;
        CHECK(scalar_tournament(pop, rng) == expect);
    }
}

TEST_CASE("GA: two-individual trace with replayed draws")
{
    Population pop{synth({0.5, 0.2}), synth({-2.0, 1.0})};
    VariationParams vp;
    Counter c;
    Rng rng(31), replay(31);
    const auto next = ga_generation(pop, c.fn(), vp, rng);

    auto tour = [&] {
        const auto a = replay.index(2), b = replay.index(2);
        return pop[b].scalar_value > pop[a].scalar_value ? b : a;
    };
    const auto pa = tour();
    const auto pb = tour();
    auto kids = make_offspring(pop[pa].genome, pop[pb].genome, vp, replay);
    Population expect{synth(kids.first), synth(kids.second)};
    const std::size_t worst = expect[1].scalar_value < expect[0].scalar_value ? 1 : 0;
    expect[worst] = pop[0];
    REQUIRE(next.size() == 2);
    CHECK(next[0].genome == expect[0].genome);
    CHECK(next[1].genome == expect[1].genome);
    CHECK(c.evaluations == 2);
    CHECK(c.calls == 1);
}

TEST_CASE("GA: elitism keeps the best scalar value non-decreasing")
{
    auto pop = random_population(20, 5, 1);
    Rng rng(2);
    Counter c;
    double best = pop[best_scalar_index(pop)].scalar_value;
    for (int g = 0; g < 30; ++g) {
        pop = ga_generation(pop, c.fn(), VariationParams{}, rng);
        const double now = pop[best_scalar_index(pop)].scalar_value;
        CHECK(now >= best);
        best = now;
    }
    CHECK(c.evaluations == 600);
    Population odd = random_population(3, 2, 1);
    CHECK_THROWS_AS(ga_generation(odd, c.fn(), VariationParams{}, rng), std::invalid_argument);
}

TEST_CASE("DE: donors are distinct")
{
    Rng rng(8);
    for (int t = 0; t < 500; ++t) {
        const auto target = static_cast<std::size_t>(t % 5);
        const auto d = de_pick_donors(5, target, rng);
        std::set<std::size_t> s(d.begin(), d.end());
        CHECK(s.size() == 3);
        CHECK(s.count(target) == 0);
        for (auto x : d)
            CHECK(x < 5);
    }
}

TEST_CASE("DE: trace and greedy selection")
{
    auto pop = random_population(6, 3, 5);
    DeParams dp;
    Rng rng(12), replay(12);
    Counter c;
    const auto next = de_generation(pop, c.fn(), dp, rng);

    for (std::size_t i = 0; i < pop.size(); ++i) {
        const auto d = de_pick_donors(pop.size(), i, replay);
        const auto j_rand = replay.index(3);
        Genome trial = pop[i].genome;
        for (std::size_t j = 0; j < 3; ++j) {
            const double u = replay.uniform();
            if (u < dp.cr || j == j_rand)
                trial[j] = std::clamp(pop[d[0]].genome[j] + dp.f * (pop[d[1]].genome[j] - pop[d[2]].genome[j]),
                                      -5.0, 5.0);
        }
        const auto t = synth(trial);
        const auto& expect = t.scalar_value >= pop[i].scalar_value ? t : pop[i];
        CHECK(next[i].genome == expect.genome);
        CHECK(next[i].scalar_value >= pop[i].scalar_value);
    }
    CHECK(c.evaluations == 6);
    auto small = random_population(3, 2, 1);
    CHECK_THROWS_AS(de_generation(small, c.fn(), dp, rng), std::invalid_argument);
}

TEST_CASE("PSO: first step from rest and monotone personal bests")
{
    auto pop = random_population(8, 4, 3);
    PsoParams pp;
    auto state = pso_init(pop);
    CHECK(state.global_best == best_scalar_index(pop));
    for (const auto& v : state.velocity)
        CHECK(std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; }));

    Rng rng(6), replay(6);
    Counter c;
    pso_generation(state, c.fn(), pp, rng);
    const Genome gbest = pop[best_scalar_index(pop)].genome;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double u1 = replay.uniform();
            const double u2 = replay.uniform();
            const double x = pop[i].genome[j];
            const double v = std::clamp(pp.c1 * u1 * (x - x) + pp.c2 * u2 * (gbest[j] - x), -5.0, 5.0);
            CHECK(state.velocity[i][j] == doctest::Approx(v).epsilon(1e-14));
            CHECK(state.particles[i].genome[j] == doctest::Approx(std::clamp(x + v, -5.0, 5.0)).epsilon(1e-14));
        }
    }

    std::vector<double> pb;
    for (const auto& p : state.personal_best)
        pb.push_back(p.scalar_value);
    for (int g = 0; g < 20; ++g) {
        pso_generation(state, c.fn(), pp, rng);
        for (std::size_t i = 0; i < pb.size(); ++i) {
            CHECK(state.personal_best[i].scalar_value >= pb[i]);
            pb[i] = state.personal_best[i].scalar_value;
        }
        CHECK(state.global_best == best_scalar_index(state.personal_best));
    }
    CHECK(c.evaluations == 8 * 21);
}
