#pragma once

#include "morl/pareto.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace morl {

// Hypervolume functions take minimization points. The single place where
// maximized returns are flipped is to_minimization().

PointSet to_minimization(const PointSet& points);

/// Exact Lebesgue measure of the union of boxes [p, ref]. Points that are
/// not strictly better than ref in every coordinate are dropped. Sweep for
/// k=2, slicing along the last objective for k=3; k > 3 throws.
double hypervolume_exact(const PointSet& front, std::span<const double> ref);

/// Monte Carlo estimate over the box [componentwise min of front, ref].
double hypervolume_mc(const PointSet& front, std::span<const double> ref, std::size_t samples, std::uint64_t seed);

/// Exclusive hypervolume contribution of each point (0 for duplicates and
/// for points outside the reference box).
std::vector<double> hv_contributions(const PointSet& front, std::span<const double> ref);

/// Mean distance from each approx point to its nearest reference point.
double gd(const PointSet& approx, const PointSet& reference);
/// gd(reference, approx).
double igd(const PointSet& approx, const PointSet& reference);

/// Nondominated union of all given point sets with exact duplicates removed.
FrontApproximation build_reference_front(const std::vector<PointSet>& runs);

struct IndicatorReport {
    std::string algorithm;
    int run = 0;
    int generation = 0;
    double hv = 0.0;
    double gd = 0.0;
    double igd = 0.0;
};

/// Maps maximized returns into the unit minimization box of a reference
/// front: ideal -> 0, nadir -> 1. Throws std::invalid_argument naming the
/// objective when the reference front is flat in it.
PointSet normalize_to_reference(const PointSet& points, const FrontApproximation& reference);

/// HV against (1,...,1) of maximized points normalized by the reference
/// front; coordinates below 0 are clipped to 0 before measuring.
double normalized_hypervolume(const PointSet& points, const FrontApproximation& reference);

/// Indicator rows for a sequence of per-generation populations.
std::vector<IndicatorReport> indicator_series(const std::vector<PointSet>& generations,
                                              const FrontApproximation& reference, const std::string& algorithm,
                                              int run);

} // namespace morl
