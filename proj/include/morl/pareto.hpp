#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace morl {

/// k returns of a policy. Maximization sense everywhere outside the
/// indicator internals.
using ObjectiveVector = std::vector<double>;
using PointSet = std::vector<ObjectiveVector>;

/// u dominates v: u >= v componentwise and u != v. Throws on size mismatch.
bool dominates(std::span<const double> u, std::span<const double> v);

/// u >= v componentwise (equality allowed).
bool weakly_dominates(std::span<const double> u, std::span<const double> v);

/// A set of mutually nondominated objective vectors. Duplicates are allowed.
class FrontApproximation {
public:
    FrontApproximation() = default;

    /// Keeps the nondominated subset of points (see nondominated_filter).
    static FrontApproximation from_points(const PointSet& points);

    /// Takes points that are already known to be mutually nondominated.
    /// Throws if that is not the case or if the set is empty.
    static FrontApproximation from_nondominated(PointSet points);

    const PointSet& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    std::size_t objectives() const noexcept { return points_.empty() ? 0 : points_.front().size(); }
    bool empty() const noexcept { return points_.empty(); }

    /// Componentwise max (ideal under maximization) and min (nadir).
    ObjectiveVector ideal() const;
    ObjectiveVector nadir() const;

private:
    PointSet points_;
};

/// Indices (ascending) of points not dominated by any other point.
std::vector<std::size_t> nondominated_indices(const PointSet& points);

/// Nondominated subset in input order; equal survivors are all kept.
/// Throws on empty input or ragged dimensions.
FrontApproximation nondominated_filter(const PointSet& points);

/// Removes exact objective-space duplicates, keeping first occurrences.
PointSet unique_points(const PointSet& points);

struct RankedPopulation {
    PointSet points;
    std::vector<int> rank;
    std::vector<double> crowding;
    /// fronts[r] holds the indices of rank r, ascending.
    std::vector<std::vector<std::size_t>> fronts;
};

/// Deb's fast nondominated sort plus per-front crowding distance.
RankedPopulation fast_nondominated_sort(const PointSet& points);

/// Rank-only variant used by the algorithms; fronts as in RankedPopulation.
std::vector<std::vector<std::size_t>> nondominated_fronts(const PointSet& points);

/// Crowding distance of a mutually nondominated set. Boundary points per
/// objective get +inf; zero-range objectives are skipped; repeated copies of
/// a vector after its first occurrence get 0.
std::vector<double> crowding_distance(const PointSet& front);

/// Affine map (p - ideal) / (nadir - ideal) per coordinate. Works for either
/// sense; throws if ideal and nadir coincide in any coordinate.
PointSet normalize(const PointSet& points, std::span<const double> ideal, std::span<const double> nadir);

/// Throws std::invalid_argument unless all points share one dimension and
/// every value is finite.
void validate_points(const PointSet& points);

} // namespace morl
