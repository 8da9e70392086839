#include "morl/moea.hpp"

#include "morl/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace morl {

namespace {

void lattice(int k, int remaining, int partitions, std::vector<int>& current, PointSet& out)
{
    if (static_cast<int>(current.size()) == k - 1) {
        current.push_back(remaining);
        ObjectiveVector d(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
            d[static_cast<std::size_t>(j)] = static_cast<double>(current[static_cast<std::size_t>(j)]) / partitions;
        out.push_back(std::move(d));
        current.pop_back();
        return;
    }
    for (int i = remaining; i >= 0; --i) {
        current.push_back(i);
        lattice(k, remaining - i, partitions, current, out);
        current.pop_back();
    }
}

double lattice_size(int k, int p)
{
    // C(k + p - 1, p)
    double c = 1.0;
    for (int i = 1; i <= k - 1; ++i)
        c = c * (p + i) / i;
    return std::round(c);
}

// Solves a * x = 1 for a small dense system; false if singular.
bool solve_unit_rhs(std::vector<std::vector<double>> a, std::vector<double>& x)
{
    const std::size_t k = a.size();
    std::vector<double> b(k, 1.0);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col]))
                pivot = r;
        if (std::abs(a[pivot][col]) < 1e-12)
            return false;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < k; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < k; ++c)
                a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.assign(k, 0.0);
    for (std::size_t r = k; r-- > 0;) {
        double s = b[r];
        for (std::size_t c = r + 1; c < k; ++c)
            s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return true;
}

} // namespace

PointSet generate_reference_directions(int k, int partitions)
{
    if (k < 2 || partitions < 1)
        throw std::invalid_argument("reference directions need k >= 2 and partitions >= 1");
    PointSet out;
    std::vector<int> current;
    lattice(k, partitions, partitions, current, out);
    return out;
}

int partitions_for(int k, std::size_t pop_size)
{
    int p = 1;
    while (lattice_size(k, p) < static_cast<double>(pop_size))
        ++p;
    return p;
}

std::vector<Association> associate(const PointSet& normalized, const PointSet& directions)
{
    std::vector<Association> out;
    out.reserve(normalized.size());
    for (const auto& p : normalized) {
        Association best{0, std::numeric_limits<double>::infinity()};
        for (std::size_t d = 0; d < directions.size(); ++d) {
            const auto& w = directions[d];
            double ww = 0.0;
            double wp = 0.0;
            for (std::size_t j = 0; j < w.size(); ++j) {
                ww += w[j] * w[j];
                wp += w[j] * p[j];
            }
            const double t = wp / ww;
            double dist = 0.0;
            for (std::size_t j = 0; j < w.size(); ++j) {
                const double e = p[j] - t * w[j];
                dist += e * e;
            }
            dist = std::sqrt(dist);
            if (dist < best.distance)
                best = {d, dist};
        }
        out.push_back(best);
    }
    return out;
}

PointSet nsga3_normalize(const PointSet& min_points)
{
    const std::size_t k = min_points.front().size();
    ObjectiveVector ideal = min_points.front();
    for (const auto& p : min_points)
        for (std::size_t j = 0; j < k; ++j)
            ideal[j] = std::min(ideal[j], p[j]);

    PointSet t = min_points;
    for (auto& p : t)
        for (std::size_t j = 0; j < k; ++j)
            p[j] -= ideal[j];

    std::vector<std::vector<double>> extremes;
    for (std::size_t axis = 0; axis < k; ++axis) {
        std::size_t best = 0;
        double best_asf = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < t.size(); ++i) {
            double asf = -std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < k; ++j)
                asf = std::max(asf, t[i][j] / (j == axis ? 1.0 : 1e-6));
            if (asf < best_asf) {
                best_asf = asf;
                best = i;
            }
        }
        extremes.push_back(t[best]);
    }

    std::vector<double> intercept(k, 0.0);
    std::vector<double> b;
    bool ok = solve_unit_rhs(extremes, b);
    if (ok)
        for (std::size_t j = 0; j < k; ++j) {
            intercept[j] = 1.0 / b[j];
            if (!std::isfinite(intercept[j]) || intercept[j] <= 1e-6)
                ok = false;
        }
    if (!ok) {
        for (std::size_t j = 0; j < k; ++j) {
            intercept[j] = 0.0;
            for (const auto& p : t)
                intercept[j] = std::max(intercept[j], p[j]);
        }
    }
    for (auto& a : intercept)
        if (a <= 1e-12)
            a = 1.0;

    for (auto& p : t)
        for (std::size_t j = 0; j < k; ++j)
            p[j] /= intercept[j];
    return t;
}

std::vector<std::size_t> nsga3_survivors(const PointSet& pool, std::size_t n, const PointSet& directions, Rng& rng)
{
    const auto fronts = nondominated_fronts(pool);
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> last;
    for (const auto& front : fronts) {
        if (chosen.size() + front.size() <= n) {
            chosen.insert(chosen.end(), front.begin(), front.end());
            if (chosen.size() == n)
                return chosen;
            continue;
        }
        last = front;
        break;
    }

    PointSet candidates;
    for (auto i : chosen)
        candidates.push_back(pool[i]);
    for (auto i : last)
        candidates.push_back(pool[i]);
    const auto assoc = associate(nsga3_normalize(to_minimization(candidates)), directions);

    const std::size_t base = chosen.size();
    std::vector<std::size_t> niche(directions.size(), 0);
    for (std::size_t s = 0; s < base; ++s)
        ++niche[assoc[s].direction];

    std::vector<std::vector<std::size_t>> members(directions.size()); // positions within `last`
    for (std::size_t m = 0; m < last.size(); ++m)
        members[assoc[base + m].direction].push_back(m);
    std::vector<bool> open(directions.size());
    for (std::size_t d = 0; d < directions.size(); ++d)
        open[d] = !members[d].empty();

    std::vector<std::size_t> lowest;
    while (chosen.size() < n) {
        std::size_t min_count = std::numeric_limits<std::size_t>::max();
        for (std::size_t d = 0; d < directions.size(); ++d)
            if (open[d])
                min_count = std::min(min_count, niche[d]);
        lowest.clear();
        for (std::size_t d = 0; d < directions.size(); ++d)
            if (open[d] && niche[d] == min_count)
                lowest.push_back(d);
        const std::size_t d = lowest.size() == 1 ? lowest.front() : lowest[rng.index(lowest.size())];

        auto& cand = members[d];
        auto pick = std::min_element(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
            return assoc[base + a].distance < assoc[base + b].distance;
        });
        const std::size_t m = *pick;
        cand.erase(pick);
        chosen.push_back(last[m]);
        ++niche[d];
        if (cand.empty())
            open[d] = false;
    }
    return chosen;
}

Population nsga3_generation(const Population& pop, const BatchEvaluator& evaluate, const VariationParams& params,
                            const PointSet& directions, Rng& rng)
{
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
    Population pool = pop;
    for (auto& c : evaluate(children))
        pool.push_back(std::move(c));

    Population next;
    next.reserve(pop.size());
    for (auto i : nsga3_survivors(objectives_of(pool), pop.size(), directions, rng))
        next.push_back(pool[i]);
    return next;
}

} // namespace morl
