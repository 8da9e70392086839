#include "morl/moea.hpp"

#include "morl/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace morl {

namespace {

double euclidean(const ObjectiveVector& a, const ObjectiveVector& b)
{
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        s += (a[j] - b[j]) * (a[j] - b[j]);
    return std::sqrt(s);
}

struct PreferenceKey {
    std::size_t front = 0;
    bool demoted = false;
    std::size_t rank = 0;

    bool operator<(const PreferenceKey& o) const
    {
        if (front != o.front)
            return front < o.front;
        if (demoted != o.demoted)
            return !demoted;
        return rank < o.rank;
    }
};

// Front index, demotion flag and reference rank for every pool member.
std::vector<PreferenceKey> preference_keys(const PointSet& pool, const std::vector<std::vector<std::size_t>>& fronts,
                                           const PointSet& reference_points, double epsilon)
{
    const PointSet norm = rnsga2_normalize(pool);
    std::vector<PreferenceKey> keys(pool.size());
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        PointSet members;
        for (auto i : fronts[f])
            members.push_back(norm[i]);
        const auto pref = rnsga2_preference(members, reference_points, epsilon);
        for (std::size_t m = 0; m < fronts[f].size(); ++m)
            keys[fronts[f][m]] = {f, pref.demoted[m], pref.rank[m]};
    }
    return keys;
}

} // namespace

PointSet rnsga2_normalize(const PointSet& pool)
{
    PointSet pts = to_minimization(pool);
    const std::size_t k = pts.front().size();
    ObjectiveVector lo = pts.front();
    ObjectiveVector hi = pts.front();
    for (const auto& p : pts)
        for (std::size_t j = 0; j < k; ++j) {
            lo[j] = std::min(lo[j], p[j]);
            hi[j] = std::max(hi[j], p[j]);
        }
    for (auto& p : pts)
        for (std::size_t j = 0; j < k; ++j) {
            const double range = hi[j] - lo[j];
            p[j] = range > 0.0 ? (p[j] - lo[j]) / range : 0.0;
        }
    return pts;
}

PointSet rnsga2_default_reference_points(int k)
{
    PointSet out;
    for (int j = 0; j < k; ++j) {
        ObjectiveVector r(static_cast<std::size_t>(k), 1.0);
        r[static_cast<std::size_t>(j)] = 0.0;
        out.push_back(std::move(r));
    }
    return out;
}

PreferenceRank rnsga2_preference(const PointSet& normalized, const PointSet& reference_points, double epsilon)
{
    if (reference_points.empty())
        throw std::invalid_argument("R-NSGA-II needs at least one reference point");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("R-NSGA-II epsilon must be positive");
    for (const auto& r : reference_points)
        if (!normalized.empty() && r.size() != normalized.front().size())
            throw std::invalid_argument("R-NSGA-II reference point has wrong dimension");
    const std::size_t n = normalized.size();
    PreferenceRank out;
    out.rank.assign(n, std::numeric_limits<std::size_t>::max());
    out.demoted.assign(n, false);

    std::vector<std::size_t> order(n);
    std::vector<double> dist(n);
    for (const auto& r : reference_points) {
        for (std::size_t i = 0; i < n; ++i)
            dist[i] = euclidean(normalized[i], r);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
        for (std::size_t pos = 0; pos < n; ++pos)
            out.rank[order[pos]] = std::min(out.rank[order[pos]], pos + 1);
    }

    // Epsilon clearing: walk in preference order, the first member of each
    // epsilon-neighbourhood stays, the rest are demoted.
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.rank[a] < out.rank[b]; });
    for (std::size_t s = 0; s < n; ++s) {
        const auto i = order[s];
        if (out.demoted[i])
            continue;
        for (std::size_t t = s + 1; t < n; ++t) {
            const auto j = order[t];
            if (!out.demoted[j] && euclidean(normalized[i], normalized[j]) <= epsilon)
                out.demoted[j] = true;
        }
    }
    return out;
}

std::vector<std::size_t> rnsga2_survivors(const PointSet& pool, std::size_t n, const PointSet& reference_points,
                                          double epsilon)
{
    const auto fronts = nondominated_fronts(pool);
    std::vector<std::size_t> chosen;
    for (const auto& front : fronts) {
        if (chosen.size() + front.size() <= n) {
            chosen.insert(chosen.end(), front.begin(), front.end());
            if (chosen.size() == n)
                break;
            continue;
        }
        const PointSet norm = rnsga2_normalize(pool);
        PointSet members;
        for (auto i : front)
            members.push_back(norm[i]);
        const auto pref = rnsga2_preference(members, reference_points, epsilon);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (pref.demoted[a] != pref.demoted[b])
                return !pref.demoted[a];
            return pref.rank[a] < pref.rank[b];
        });
        for (std::size_t s = 0; chosen.size() < n; ++s)
            chosen.push_back(front[order[s]]);
        break;
    }
    return chosen;
}

Population rnsga2_generation(const Population& pop, const BatchEvaluator& evaluate, const VariationParams& params,
                             const PointSet& reference_points, double epsilon, Rng& rng)
{
    const PointSet pts = objectives_of(pop);
    const auto keys = preference_keys(pts, nondominated_fronts(pts), reference_points, epsilon);
    auto tournament = [&]() {
        const std::size_t a = rng.index(pop.size());
        const std::size_t b = rng.index(pop.size());
        return keys[b] < keys[a] ? b : a;
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
    for (auto i : rnsga2_survivors(objectives_of(pool), pop.size(), reference_points, epsilon))
        next.push_back(pool[i]);
    return next;
}

} // namespace morl
