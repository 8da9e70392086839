#pragma once

// Data-parallel inner loops. Every kernel has a serial reference with the
// same signature; tests check that both produce identical output.

#include "morl/pareto.hpp"

#include <cstddef>
#include <vector>

namespace morl::kernels {

/// For each point, the number of points that dominate it.
std::vector<std::size_t> dominator_counts_serial(const PointSet& points);
std::vector<std::size_t> dominator_counts_parallel(const PointSet& points);

/// Pairwise Euclidean distance matrix, row-major n x n.
std::vector<double> distance_matrix_serial(const PointSet& points);
std::vector<double> distance_matrix_parallel(const PointSet& points);

/// Below this many points the parallel kernels run the serial loop.
inline constexpr std::size_t parallel_threshold = 256;

} // namespace morl::kernels
