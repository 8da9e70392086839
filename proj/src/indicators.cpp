#include "morl/indicators.hpp"

#include "morl/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace morl {

PointSet to_minimization(const PointSet& points)
{
    PointSet out = points;
    for (auto& p : out)
        for (auto& x : p)
            x = -x;
    return out;
}

namespace {

struct XY {
    double x;
    double y;
};

// Area dominated by points (all strictly inside the box) w.r.t. (rx, ry).
double sweep_2d(std::vector<XY> pts, double rx, double ry)
{
    std::sort(pts.begin(), pts.end(), [](const XY& a, const XY& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    double area = 0.0;
    double floor_y = ry;
    for (const auto& p : pts) {
        if (p.y < floor_y) {
            area += (rx - p.x) * (floor_y - p.y);
            floor_y = p.y;
        }
    }
    return area;
}

PointSet inside_box(const PointSet& front, std::span<const double> ref)
{
    PointSet kept;
    for (const auto& p : front) {
        if (p.size() != ref.size())
            throw std::invalid_argument("hypervolume: point and reference differ in dimension");
        bool inside = true;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (!(p[j] < ref[j]))
                inside = false;
        if (inside)
            kept.push_back(p);
    }
    return kept;
}

void check_pair(const PointSet& a, const PointSet& b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("distance indicator: empty point set");
    validate_points(a);
    validate_points(b);
    if (a.front().size() != b.front().size())
        throw std::invalid_argument("distance indicator: objective counts differ");
}

double nearest(const ObjectiveVector& p, const PointSet& set)
{
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : set) {
        double s = 0.0;
        for (std::size_t j = 0; j < p.size(); ++j)
            s += (p[j] - q[j]) * (p[j] - q[j]);
        best = std::min(best, s);
    }
    return std::sqrt(best);
}

} // namespace

double hypervolume_exact(const PointSet& front, std::span<const double> ref)
{
    const std::size_t k = ref.size();
    if (k < 2 || k > 3)
        throw std::invalid_argument("hypervolume_exact supports 2 or 3 objectives; use hypervolume_mc");
    const PointSet pts = inside_box(front, ref);
    if (pts.empty())
        return 0.0;

    if (k == 2) {
        std::vector<XY> xy;
        xy.reserve(pts.size());
        for (const auto& p : pts)
            xy.push_back({p[0], p[1]});
        return sweep_2d(std::move(xy), ref[0], ref[1]);
    }

    // Slices along the third objective; between consecutive z values the
    // cross-section is the 2-D dominated area of every point at or below z.
    PointSet sorted = pts;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a[2] < b[2]; });
    double volume = 0.0;
    std::vector<XY> active;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        active.push_back({sorted[i][0], sorted[i][1]});
        const double z_next = i + 1 < sorted.size() ? sorted[i + 1][2] : ref[2];
        const double height = z_next - sorted[i][2];
        if (height > 0.0)
            volume += sweep_2d(active, ref[0], ref[1]) * height;
    }
    return volume;
}

double hypervolume_mc(const PointSet& front, std::span<const double> ref, std::size_t samples, std::uint64_t seed)
{
    if (samples < 1)
        throw std::invalid_argument("hypervolume_mc: samples must be >= 1");
    if (front.empty())
        return 0.0;
    const std::size_t k = ref.size();
    ObjectiveVector lo = front.front();
    for (const auto& p : front) {
        if (p.size() != k)
            throw std::invalid_argument("hypervolume_mc: point and reference differ in dimension");
        for (std::size_t j = 0; j < k; ++j)
            lo[j] = std::min(lo[j], p[j]);
    }
    double box = 1.0;
    for (std::size_t j = 0; j < k; ++j)
        box *= std::max(0.0, ref[j] - lo[j]);
    if (box == 0.0)
        return 0.0;

    Rng rng(seed);
    std::vector<double> s(k);
    std::size_t hits = 0;
    for (std::size_t n = 0; n < samples; ++n) {
        for (std::size_t j = 0; j < k; ++j)
            s[j] = rng.uniform(lo[j], ref[j]);
        for (const auto& p : front) {
            bool covers = true;
            for (std::size_t j = 0; j < k && covers; ++j)
                covers = p[j] <= s[j];
            if (covers) {
                ++hits;
                break;
            }
        }
    }
    return box * static_cast<double>(hits) / static_cast<double>(samples);
}

std::vector<double> hv_contributions(const PointSet& front, std::span<const double> ref)
{
    const double total = hypervolume_exact(front, ref);
    std::vector<double> out(front.size());
    PointSet rest;
    for (std::size_t i = 0; i < front.size(); ++i) {
        rest.clear();
        for (std::size_t j = 0; j < front.size(); ++j)
            if (j != i)
                rest.push_back(front[j]);
        out[i] = std::max(0.0, total - hypervolume_exact(rest, ref));
    }
    return out;
}

double gd(const PointSet& approx, const PointSet& reference)
{
    check_pair(approx, reference);
    double sum = 0.0;
    for (const auto& a : approx)
        sum += nearest(a, reference);
    return sum / static_cast<double>(approx.size());
}

double igd(const PointSet& approx, const PointSet& reference)
{
    return gd(reference, approx);
}

FrontApproximation build_reference_front(const std::vector<PointSet>& runs)
{
    PointSet all;
    for (const auto& r : runs)
        all.insert(all.end(), r.begin(), r.end());
    if (all.empty())
        throw std::invalid_argument("build_reference_front: no points");
    return FrontApproximation::from_nondominated(unique_points(nondominated_filter(all).points()));
}

PointSet normalize_to_reference(const PointSet& points, const FrontApproximation& reference)
{
    const auto ideal = reference.ideal();
    const auto nadir = reference.nadir();
    for (std::size_t j = 0; j < ideal.size(); ++j)
        if (ideal[j] == nadir[j])
            throw std::invalid_argument("reference front is degenerate in objective " + std::to_string(j + 1) +
                                        " (ideal == nadir == " + std::to_string(ideal[j]) + ")");
    return normalize(points, ideal, nadir);
}

double normalized_hypervolume(const PointSet& points, const FrontApproximation& reference)
{
    PointSet norm = normalize_to_reference(points, reference);
    for (auto& p : norm)
        for (auto& x : p)
            x = std::max(0.0, x);
    const std::vector<double> ones(reference.objectives(), 1.0);
    return hypervolume_exact(norm, ones);
}

std::vector<IndicatorReport> indicator_series(const std::vector<PointSet>& generations,
                                              const FrontApproximation& reference, const std::string& algorithm,
                                              int run)
{
    std::vector<IndicatorReport> out;
    out.reserve(generations.size());
    for (std::size_t g = 0; g < generations.size(); ++g) {
        const auto front = nondominated_filter(generations[g]);
        IndicatorReport r;
        r.algorithm = algorithm;
        r.run = run;
        r.generation = static_cast<int>(g);
        r.hv = normalized_hypervolume(front.points(), reference);
        r.gd = gd(front.points(), reference.points());
        r.igd = igd(front.points(), reference.points());
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace morl
