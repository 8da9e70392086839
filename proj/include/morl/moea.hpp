#pragma once

// Survival machinery of the multi-objective roster. Unless stated otherwise
// points are maximized mean returns.

#include "morl/evaluation.hpp"
#include "morl/operators.hpp"
#include "morl/soea.hpp"

#include <vector>

namespace morl {

PointSet objectives_of(const Population& pop);

// NSGA-II ------------------------------------------------------------------

/// Fill by rank; the overflowing front is cut by descending crowding
/// (stable, so equal crowding keeps input order). Returns pool indices.
std::vector<std::size_t> nsga2_survivors(const PointSet& pool, std::size_t n);

/// Tournament on (rank, crowding), SBX + PM offspring, (mu + lambda) survival.
Population nsga2_generation(const Population& pop, const BatchEvaluator& evaluate, const VariationParams& params,
                            Rng& rng);

// SPEA2 --------------------------------------------------------------------

struct Spea2Fitness {
    std::vector<double> strength;
    std::vector<double> raw;
    std::vector<double> density;
    std::vector<double> fitness; ///< raw + density, lower is better
};

/// kappa-th nearest neighbour (1-based, capped at n-1) in objective space.
Spea2Fitness spea2_fitness(const PointSet& points, std::size_t kappa);

/// Keeps all points with fitness < 1; truncates by iteratively removing the
/// point with the lexicographically smallest sorted distance list, or fills
/// with the best dominated points. Returns indices.
std::vector<std::size_t> spea2_environmental_selection(const PointSet& points, const std::vector<double>& fitness,
                                                       std::size_t n);

inline std::size_t spea2_kappa(std::size_t pop_size)
{
    std::size_t k = 0;
    while ((k + 1) * (k + 1) <= 2 * pop_size)
        ++k;
    return k;
}

struct Spea2State {
    Population archive;
    std::vector<double> archive_fitness;
};

Spea2State spea2_init(Population initial);
void spea2_generation(Spea2State& state, const BatchEvaluator& evaluate, const VariationParams& params, Rng& rng);

// SMS-EMOA -----------------------------------------------------------------

/// Reference point for a minimization pool: nadir + 10% of the range (1.0
/// where the range is zero).
ObjectiveVector smsemoa_reference(const PointSet& min_points);

/// Index of the point to discard from a pool: the least hypervolume
/// contributor of the worst nondominated rank. Throws for k > 3.
std::size_t smsemoa_removal_index(const PointSet& pool);

/// pop_size offspring evaluated as one batch, then one add/remove step per
/// offspring.
Population smsemoa_generation(const Population& pop, const BatchEvaluator& evaluate, const VariationParams& params,
                              Rng& rng);

// NSGA-III -----------------------------------------------------------------

/// Das-Dennis simplex lattice: C(k+p-1, p) directions summing to 1.
PointSet generate_reference_directions(int k, int partitions);

/// Smallest p whose lattice has at least pop_size directions.
int partitions_for(int k, std::size_t pop_size);

struct Association {
    std::size_t direction;
    double distance;
};

/// Nearest direction by perpendicular distance (ties: lowest index).
std::vector<Association> associate(const PointSet& normalized, const PointSet& directions);

/// Normalizes minimization points: ideal subtraction and hyperplane
/// intercepts through the ASF extreme points, falling back to the worst
/// value per axis when the hyperplane is degenerate.
PointSet nsga3_normalize(const PointSet& min_points);

std::vector<std::size_t> nsga3_survivors(const PointSet& pool, std::size_t n, const PointSet& directions, Rng& rng);

Population nsga3_generation(const Population& pop, const BatchEvaluator& evaluate, const VariationParams& params,
                            const PointSet& directions, Rng& rng);

// R-NSGA-II ----------------------------------------------------------------

struct PreferenceRank {
    std::vector<std::size_t> rank; ///< 1-based best position over reference points
    std::vector<bool> demoted;     ///< cleared by epsilon grouping
};

/// Points and reference points are in normalized minimization space.
PreferenceRank rnsga2_preference(const PointSet& normalized, const PointSet& reference_points, double epsilon);

/// Pool mapped into [0,1]^k minimization space by its own ideal and nadir.
PointSet rnsga2_normalize(const PointSet& pool);

/// Default reference points: corner j has objective j at 0, the rest at 1.
PointSet rnsga2_default_reference_points(int k);

std::vector<std::size_t> rnsga2_survivors(const PointSet& pool, std::size_t n, const PointSet& reference_points,
                                          double epsilon);

Population rnsga2_generation(const Population& pop, const BatchEvaluator& evaluate, const VariationParams& params,
                             const PointSet& reference_points, double epsilon, Rng& rng);

} // namespace morl
