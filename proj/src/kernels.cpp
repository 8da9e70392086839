#include "morl/kernels.hpp"

#include <cmath>

namespace morl::kernels {

std::vector<std::size_t> dominator_counts_serial(const PointSet& points)
{
    const std::size_t n = points.size();
    std::vector<std::size_t> counts(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && dominates(points[j], points[i]))
                ++counts[i];
    return counts;
}

std::vector<std::size_t> dominator_counts_parallel(const PointSet& points)
{
    const auto n = static_cast<std::ptrdiff_t>(points.size());
    std::vector<std::size_t> counts(points.size(), 0);
#pragma omp parallel for schedule(static) if (n >= static_cast<std::ptrdiff_t>(parallel_threshold))
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        std::size_t c = 0;
        for (std::ptrdiff_t j = 0; j < n; ++j)
            if (j != i && dominates(points[j], points[i]))
                ++c;
        counts[i] = c;
    }
    return counts;
}

namespace {
double distance(const ObjectiveVector& a, const ObjectiveVector& b)
{
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        s += (a[j] - b[j]) * (a[j] - b[j]);
    return std::sqrt(s);
}
} // namespace

std::vector<double> distance_matrix_serial(const PointSet& points)
{
    const std::size_t n = points.size();
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d[i * n + j] = distance(points[i], points[j]);
    return d;
}

std::vector<double> distance_matrix_parallel(const PointSet& points)
{
    const auto n = static_cast<std::ptrdiff_t>(points.size());
    std::vector<double> d(points.size() * points.size(), 0.0);
#pragma omp parallel for schedule(static) if (n >= static_cast<std::ptrdiff_t>(parallel_threshold))
    for (std::ptrdiff_t i = 0; i < n; ++i)
        for (std::ptrdiff_t j = 0; j < n; ++j)
            d[i * n + j] = distance(points[i], points[j]);
    return d;
}

} // namespace morl::kernels
