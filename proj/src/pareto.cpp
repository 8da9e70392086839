#include "morl/pareto.hpp"

#include "morl/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace morl {

bool weakly_dominates(std::span<const double> u, std::span<const double> v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("dominance: objective vectors differ in dimension");
    for (std::size_t j = 0; j < u.size(); ++j)
        if (u[j] < v[j])
            return false;
    return true;
}

bool dominates(std::span<const double> u, std::span<const double> v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("dominance: objective vectors differ in dimension");
    bool strictly_better = false;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] < v[j])
            return false;
        if (u[j] > v[j])
            strictly_better = true;
    }
    return strictly_better;
}

void validate_points(const PointSet& points)
{
    if (points.empty())
        return;
    const auto k = points.front().size();
    for (const auto& p : points) {
        if (p.size() != k)
            throw std::invalid_argument("points differ in objective count");
        for (double x : p)
            if (!std::isfinite(x))
                throw std::invalid_argument("objective values must be finite");
    }
}

std::vector<std::size_t> nondominated_indices(const PointSet& points)
{
    validate_points(points);
    const auto counts = points.size() >= kernels::parallel_threshold
                            ? kernels::dominator_counts_parallel(points)
                            : kernels::dominator_counts_serial(points);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (counts[i] == 0)
            out.push_back(i);
    return out;
}

FrontApproximation nondominated_filter(const PointSet& points)
{
    return FrontApproximation::from_points(points);
}

FrontApproximation FrontApproximation::from_points(const PointSet& points)
{
    if (points.empty())
        throw std::invalid_argument("nondominated_filter: empty input");
    FrontApproximation f;
    for (auto i : nondominated_indices(points))
        f.points_.push_back(points[i]);
    return f;
}

FrontApproximation FrontApproximation::from_nondominated(PointSet points)
{
    if (points.empty())
        throw std::invalid_argument("front approximation must be nonempty");
    if (nondominated_indices(points).size() != points.size())
        throw std::invalid_argument("front approximation contains dominated points");
    FrontApproximation f;
    f.points_ = std::move(points);
    return f;
}

ObjectiveVector FrontApproximation::ideal() const
{
    if (points_.empty())
        throw std::logic_error("ideal of an empty front");
    ObjectiveVector out = points_.front();
    for (const auto& p : points_)
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = std::max(out[j], p[j]);
    return out;
}

ObjectiveVector FrontApproximation::nadir() const
{
    if (points_.empty())
        throw std::logic_error("nadir of an empty front");
    ObjectiveVector out = points_.front();
    for (const auto& p : points_)
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = std::min(out[j], p[j]);
    return out;
}

PointSet unique_points(const PointSet& points)
{
    PointSet out;
    for (const auto& p : points)
        if (std::find(out.begin(), out.end(), p) == out.end())
            out.push_back(p);
    return out;
}

std::vector<std::vector<std::size_t>> nondominated_fronts(const PointSet& points)
{
    if (points.empty())
        throw std::invalid_argument("nondominated sort: empty input");
    validate_points(points);

    const std::size_t n = points.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> counter(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                dominated[i].push_back(j);
                ++counter[j];
            } else if (dominates(points[j], points[i])) {
                dominated[j].push_back(i);
                ++counter[i];
            }
        }
    }

    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (counter[i] == 0)
            current.push_back(i);
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto i : current)
            for (auto j : dominated[i])
                if (--counter[j] == 0)
                    next.push_back(j);
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

RankedPopulation fast_nondominated_sort(const PointSet& points)
{
    RankedPopulation out;
    out.points = points;
    out.fronts = nondominated_fronts(points);
    out.rank.assign(points.size(), 0);
    out.crowding.assign(points.size(), 0.0);
    for (std::size_t r = 0; r < out.fronts.size(); ++r) {
        PointSet members;
        for (auto i : out.fronts[r]) {
            out.rank[i] = static_cast<int>(r);
            members.push_back(points[i]);
        }
        const auto cd = crowding_distance(members);
        for (std::size_t m = 0; m < cd.size(); ++m)
            out.crowding[out.fronts[r][m]] = cd[m];
    }
    return out;
}

std::vector<double> crowding_distance(const PointSet& front)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t n = front.size();
    std::vector<double> out(n, 0.0);
    if (n == 0)
        return out;

    // Distances are computed on the first copy of each distinct vector.
    std::vector<std::size_t> distinct;
    for (std::size_t i = 0; i < n; ++i) {
        bool seen = false;
        for (auto d : distinct)
            if (front[d] == front[i]) {
                seen = true;
                break;
            }
        if (!seen)
            distinct.push_back(i);
    }

    const std::size_t m = distinct.size();
    if (m <= 2) {
        for (auto d : distinct)
            out[d] = inf;
        return out;
    }

    const std::size_t k = front.front().size();
    std::vector<std::size_t> order(m);
    for (std::size_t obj = 0; obj < k; ++obj) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return front[distinct[a]][obj] < front[distinct[b]][obj];
        });
        const double lo = front[distinct[order.front()]][obj];
        const double hi = front[distinct[order.back()]][obj];
        const double range = hi - lo;
        if (range <= 0.0)
            continue;
        out[distinct[order.front()]] = inf;
        out[distinct[order.back()]] = inf;
        for (std::size_t s = 1; s + 1 < m; ++s) {
            const auto i = distinct[order[s]];
            if (std::isinf(out[i]))
                continue;
            out[i] += (front[distinct[order[s + 1]]][obj] - front[distinct[order[s - 1]]][obj]) / range;
        }
    }
    return out;
}

PointSet normalize(const PointSet& points, std::span<const double> ideal, std::span<const double> nadir)
{
    if (ideal.size() != nadir.size())
        throw std::invalid_argument("normalize: ideal and nadir differ in dimension");
    for (std::size_t j = 0; j < ideal.size(); ++j)
        if (ideal[j] == nadir[j])
            throw std::invalid_argument("normalize: ideal equals nadir in objective " + std::to_string(j));
    PointSet out;
    out.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != ideal.size())
            throw std::invalid_argument("normalize: point dimension mismatch");
        ObjectiveVector q(p.size());
        for (std::size_t j = 0; j < p.size(); ++j)
            q[j] = (p[j] - ideal[j]) / (nadir[j] - ideal[j]);
        out.push_back(std::move(q));
    }
    return out;
}

} // namespace morl
