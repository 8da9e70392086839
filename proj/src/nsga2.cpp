#include "morl/moea.hpp"

#include <algorithm>
#include <numeric>

namespace morl {

PointSet objectives_of(const Population& pop)
{
    PointSet out;
    out.reserve(pop.size());
    for (const auto& ind : pop)
        out.push_back(ind.mean_return);
    return out;
}

std::vector<std::size_t> nsga2_survivors(const PointSet& pool, std::size_t n)
{
    const auto fronts = nondominated_fronts(pool);
    std::vector<std::size_t> chosen;
    chosen.reserve(n);
    for (const auto& front : fronts) {
        if (chosen.size() + front.size() <= n) {
            chosen.insert(chosen.end(), front.begin(), front.end());
            if (chosen.size() == n)
                break;
            continue;
        }
        PointSet members;
        for (auto i : front)
            members.push_back(pool[i]);
        const auto cd = crowding_distance(members);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cd[a] > cd[b]; });
        for (std::size_t s = 0; chosen.size() < n; ++s)
            chosen.push_back(front[order[s]]);
        break;
    }
    return chosen;
}

Population nsga2_generation(const Population& pop, const BatchEvaluator& evaluate, const VariationParams& params,
                            Rng& rng)
{
    const auto ranked = fast_nondominated_sort(objectives_of(pop));
    auto tournament = [&]() {
        const std::size_t a = rng.index(pop.size());
        const std::size_t b = rng.index(pop.size());
        if (ranked.rank[b] < ranked.rank[a] ||
            (ranked.rank[b] == ranked.rank[a] && ranked.crowding[b] > ranked.crowding[a]))
            return b;
        return a;
    };

    std::vector<Genome> children;
    children.reserve(pop.size());
    while (children.size() < pop.size()) {
        const auto a = tournament();
        const auto b = tournament();
        auto [c1, c2] = make_offspring(pop[a].genome, pop[b].genome, params, rng);
        children.push_back(std::move(c1));
        if (children.size() < pop.size())
            children.push_back(std::move(c2));
    }
    Population pool = pop;
    for (auto& c : evaluate(children))
        pool.push_back(std::move(c));

    Population next;
    next.reserve(pop.size());
    for (auto i : nsga2_survivors(objectives_of(pool), pop.size()))
        next.push_back(pool[i]);
    return next;
}

} // namespace morl
