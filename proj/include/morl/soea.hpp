#pragma once

// Scalarized single-objective EAs. All three maximize scalar_value.

#include "morl/evaluation.hpp"
#include "morl/operators.hpp"

#include <array>
#include <vector>

namespace morl {

using Population = std::vector<EvaluatedIndividual>;

/// Binary tournament on scalar_value; ties go to the first draw.
std::size_t scalar_tournament(const Population& pop, Rng& rng);

/// Index of the first individual with the largest scalar_value.
std::size_t best_scalar_index(const Population& pop);

/// Tournament selection, SBX + polynomial mutation, generational
/// replacement. The best parent replaces the worst offspring.
Population ga_generation(const Population& pop, const BatchEvaluator& evaluate, const VariationParams& params,
                         Rng& rng);

struct DeParams {
    double f = 0.5;
    double cr = 0.9;
    Bounds bounds;
};

/// Draws r1, r2, r3 distinct from each other and from target (rejection).
std::array<std::size_t, 3> de_pick_donors(std::size_t n, std::size_t target, Rng& rng);

/// rand/1/bin. Per target: donors, j_rand = index(n), then one uniform per
/// gene. Trials are evaluated as one batch; a trial replaces its target when
/// its scalar_value is >= the target's.
Population de_generation(const Population& pop, const BatchEvaluator& evaluate, const DeParams& params, Rng& rng);

struct PsoParams {
    double inertia = 0.7298;
    double c1 = 1.49618;
    double c2 = 1.49618;
    Bounds bounds;
};

struct PsoState {
    Population particles; ///< current positions with their evaluations
    std::vector<Genome> velocity;
    Population personal_best;
    std::size_t global_best = 0; ///< index into personal_best
};

/// Zero velocities, personal bests = initial particles.
PsoState pso_init(Population initial);

/// Per particle and gene: draw u1 then u2;
///   v <- w v + c1 u1 (pbest - x) + c2 u2 (gbest - x), clamped to +-width/2
///   x <- clamp(x + v)
/// then evaluate all positions and update personal/global bests.
void pso_generation(PsoState& state, const BatchEvaluator& evaluate, const PsoParams& params, Rng& rng);

} // namespace morl
