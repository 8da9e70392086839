#include "morl/moea.hpp"

#include "morl/indicators.hpp"

#include <algorithm>
#include <stdexcept>

namespace morl {

ObjectiveVector smsemoa_reference(const PointSet& min_points)
{
    ObjectiveVector lo = min_points.front();
    ObjectiveVector hi = min_points.front();
    for (const auto& p : min_points)
        for (std::size_t j = 0; j < p.size(); ++j) {
            lo[j] = std::min(lo[j], p[j]);
            hi[j] = std::max(hi[j], p[j]);
        }
    ObjectiveVector ref(hi.size());
    for (std::size_t j = 0; j < hi.size(); ++j) {
        const double range = hi[j] - lo[j];
        ref[j] = hi[j] + (range > 0.0 ? 0.1 * range : 1.0);
    }
    return ref;
}

std::size_t smsemoa_removal_index(const PointSet& pool)
{
    if (pool.empty())
        throw std::invalid_argument("SMS-EMOA: empty pool");
    if (pool.front().size() > 3)
        throw std::invalid_argument("SMS-EMOA needs exact hypervolume, only k <= 3 is supported");
    const auto fronts = nondominated_fronts(pool);
    const auto& worst = fronts.back();
    if (worst.size() == 1)
        return worst.front();

    const PointSet min_pool = to_minimization(pool);
    const auto ref = smsemoa_reference(min_pool);
    PointSet members;
    members.reserve(worst.size());
    for (auto i : worst)
        members.push_back(min_pool[i]);
    const auto contrib = hv_contributions(members, ref);
    const auto least = std::min_element(contrib.begin(), contrib.end()) - contrib.begin();
    return worst[static_cast<std::size_t>(least)];
}

Population smsemoa_generation(const Population& pop, const BatchEvaluator& evaluate, const VariationParams& params,
                              Rng& rng)
{
    if (!pop.empty() && pop.front().mean_return.size() > 3)
        throw std::invalid_argument("SMS-EMOA needs exact hypervolume, only k <= 3 is supported");
    std::vector<Genome> children;
    children.reserve(pop.size());
    while (children.size() < pop.size()) {
        const auto a = rng.index(pop.size());
        const auto b = rng.index(pop.size());
        auto [c1, c2] = make_offspring(pop[a].genome, pop[b].genome, params, rng);
        children.push_back(std::move(c1));
        if (children.size() < pop.size())
            children.push_back(std::move(c2));
    }
    Population offspring = evaluate(children);

    Population current = pop;
    for (auto& child : offspring) {
        current.push_back(std::move(child));
        const auto victim = smsemoa_removal_index(objectives_of(current));
        current.erase(current.begin() + static_cast<std::ptrdiff_t>(victim));
    }
    return current;
}

} // namespace morl
