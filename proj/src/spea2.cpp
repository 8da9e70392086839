#include "morl/moea.hpp"

#include "morl/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace morl {

Spea2Fitness spea2_fitness(const PointSet& points, std::size_t kappa)
{
    const std::size_t n = points.size();
    Spea2Fitness f;
    f.strength.assign(n, 0.0);
    f.raw.assign(n, 0.0);
    f.density.assign(n, 0.0);
    f.fitness.assign(n, 0.0);
    if (n == 0)
        return f;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && dominates(points[i], points[j]))
                f.strength[i] += 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && dominates(points[j], points[i]))
                f.raw[i] += f.strength[j];

    const auto dist = kernels::distance_matrix_parallel(points);
    const std::size_t k = std::min(std::max<std::size_t>(kappa, 1), n - 1);
    std::vector<double> row;
    for (std::size_t i = 0; i < n; ++i) {
        double sigma = 0.0;
        if (k >= 1) {
            row.clear();
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    row.push_back(dist[i * n + j]);
            std::nth_element(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k - 1), row.end());
            sigma = row[k - 1];
        }
        f.density[i] = 1.0 / (sigma + 2.0);
        f.fitness[i] = f.raw[i] + f.density[i];
    }
    return f;
}

std::vector<std::size_t> spea2_environmental_selection(const PointSet& points, const std::vector<double>& fitness,
                                                       std::size_t n)
{
    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (fitness[i] < 1.0)
            selected.push_back(i);

    if (selected.size() < n) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (!(fitness[i] < 1.0))
                rest.push_back(i);
        std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });
        for (std::size_t s = 0; selected.size() < n && s < rest.size(); ++s)
            selected.push_back(rest[s]);
        std::sort(selected.begin(), selected.end());
        return selected;
    }

    const auto dist = kernels::distance_matrix_parallel(points);
    const std::size_t m = points.size();
    std::vector<std::vector<double>> sorted_dist;
    while (selected.size() > n) {
        sorted_dist.assign(selected.size(), {});
        for (std::size_t a = 0; a < selected.size(); ++a) {
            for (std::size_t b = 0; b < selected.size(); ++b)
                if (a != b)
                    sorted_dist[a].push_back(dist[selected[a] * m + selected[b]]);
            std::sort(sorted_dist[a].begin(), sorted_dist[a].end());
        }
        std::size_t victim = 0;
        for (std::size_t a = 1; a < selected.size(); ++a)
            if (std::lexicographical_compare(sorted_dist[a].begin(), sorted_dist[a].end(),
                                             sorted_dist[victim].begin(), sorted_dist[victim].end()))
                victim = a;
        selected.erase(selected.begin() + static_cast<std::ptrdiff_t>(victim));
    }
    return selected;
}

Spea2State spea2_init(Population initial)
{
    if (initial.empty())
        throw std::invalid_argument("SPEA2 needs a nonempty population");
    const auto pts = objectives_of(initial);
    const auto fit = spea2_fitness(pts, spea2_kappa(initial.size()));
    Spea2State s;
    for (auto i : spea2_environmental_selection(pts, fit.fitness, initial.size())) {
        s.archive.push_back(initial[i]);
        s.archive_fitness.push_back(fit.fitness[i]);
    }
    return s;
}

void spea2_generation(Spea2State& state, const BatchEvaluator& evaluate, const VariationParams& params, Rng& rng)
{
    const Population& archive = state.archive;
    const std::size_t n = archive.size();
    auto tournament = [&]() {
        const std::size_t a = rng.index(n);
        const std::size_t b = rng.index(n);
        return state.archive_fitness[b] < state.archive_fitness[a] ? b : a;
    };

    std::vector<Genome> children;
    children.reserve(n);
    while (children.size() < n) {
        const auto a = tournament();
        const auto b = tournament();
        auto [c1, c2] = make_offspring(archive[a].genome, archive[b].genome, params, rng);
        children.push_back(std::move(c1));
        if (children.size() < n)
            children.push_back(std::move(c2));
    }

    Population pool = archive;
    for (auto& c : evaluate(children))
        pool.push_back(std::move(c));
    const auto pts = objectives_of(pool);
    const auto fit = spea2_fitness(pts, spea2_kappa(n));

    Spea2State next;
    for (auto i : spea2_environmental_selection(pts, fit.fitness, n)) {
        next.archive.push_back(pool[i]);
        next.archive_fitness.push_back(fit.fitness[i]);
    }
    state = std::move(next);
}

} // namespace morl
