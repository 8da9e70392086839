#include "morl/soea.hpp"

#include <algorithm>
#include <stdexcept>

namespace morl {

std::size_t scalar_tournament(const Population& pop, Rng& rng)
{
    const std::size_t a = rng.index(pop.size());
    const std::size_t b = rng.index(pop.size());
    return pop[b].scalar_value > pop[a].scalar_value ? b : a;
}

std::size_t best_scalar_index(const Population& pop)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
        if (pop[i].scalar_value > pop[best].scalar_value)
            best = i;
    return best;
}

Population ga_generation(const Population& pop, const BatchEvaluator& evaluate, const VariationParams& params,
                         Rng& rng)
{
    if (pop.empty() || pop.size() % 2 != 0)
        throw std::invalid_argument("GA needs a nonempty, even population");
    std::vector<Genome> children;
    children.reserve(pop.size());
    while (children.size() < pop.size()) {
        const auto a = scalar_tournament(pop, rng);
        const auto b = scalar_tournament(pop, rng);
        auto [c1, c2] = make_offspring(pop[a].genome, pop[b].genome, params, rng);
        children.push_back(std::move(c1));
        children.push_back(std::move(c2));
    }
    Population next = evaluate(children);

    std::size_t worst = 0;
    for (std::size_t i = 1; i < next.size(); ++i)
        if (next[i].scalar_value < next[worst].scalar_value)
            worst = i;
    next[worst] = pop[best_scalar_index(pop)];
    return next;
}

std::array<std::size_t, 3> de_pick_donors(std::size_t n, std::size_t target, Rng& rng)
{
    std::array<std::size_t, 3> r{};
    for (std::size_t k = 0; k < 3; ++k) {
        std::size_t c;
        do {
            c = rng.index(n);
        } while (c == target || std::find(r.begin(), r.begin() + k, c) != r.begin() + k);
        r[k] = c;
    }
    return r;
}

Population de_generation(const Population& pop, const BatchEvaluator& evaluate, const DeParams& params, Rng& rng)
{
    if (pop.size() < 4)
        throw std::invalid_argument("DE needs a population of at least 4");
    const std::size_t n = pop.front().genome.size();
    std::vector<Genome> trials;
    trials.reserve(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const auto [r1, r2, r3] = de_pick_donors(pop.size(), i, rng);
        const std::size_t j_rand = rng.index(n);
        Genome trial = pop[i].genome;
        for (std::size_t j = 0; j < n; ++j) {
            const double u = rng.uniform();
            if (u < params.cr || j == j_rand) {
                const double mutant = pop[r1].genome[j] + params.f * (pop[r2].genome[j] - pop[r3].genome[j]);
                trial[j] = params.bounds.clamp(mutant);
            }
        }
        trials.push_back(std::move(trial));
    }
    Population evaluated = evaluate(trials);
    Population next = pop;
    for (std::size_t i = 0; i < pop.size(); ++i)
        if (evaluated[i].scalar_value >= pop[i].scalar_value)
            next[i] = std::move(evaluated[i]);
    return next;
}

PsoState pso_init(Population initial)
{
    if (initial.empty())
        throw std::invalid_argument("PSO needs a nonempty swarm");
    PsoState s;
    s.velocity.assign(initial.size(), Genome(initial.front().genome.size(), 0.0));
    s.personal_best = initial;
    s.particles = std::move(initial);
    s.global_best = best_scalar_index(s.personal_best);
    return s;
}

void pso_generation(PsoState& state, const BatchEvaluator& evaluate, const PsoParams& params, Rng& rng)
{
    const double vmax = params.bounds.width() / 2.0;
    const Genome gbest = state.personal_best[state.global_best].genome;
    std::vector<Genome> positions;
    positions.reserve(state.particles.size());
    for (std::size_t i = 0; i < state.particles.size(); ++i) {
        Genome x = state.particles[i].genome;
        const Genome& pbest = state.personal_best[i].genome;
        auto& v = state.velocity[i];
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double u1 = rng.uniform();
            const double u2 = rng.uniform();
            v[j] = params.inertia * v[j] + params.c1 * u1 * (pbest[j] - x[j]) + params.c2 * u2 * (gbest[j] - x[j]);
            v[j] = std::clamp(v[j], -vmax, vmax);
            x[j] = params.bounds.clamp(x[j] + v[j]);
        }
        positions.push_back(std::move(x));
    }
    state.particles = evaluate(positions);
    for (std::size_t i = 0; i < state.particles.size(); ++i)
        if (state.particles[i].scalar_value > state.personal_best[i].scalar_value)
            state.personal_best[i] = state.particles[i];
    state.global_best = best_scalar_index(state.personal_best);
}

} // namespace morl
