#pragma once

#include "morl/policy.hpp"
#include "morl/rng.hpp"

#include <utility>

namespace morl {

struct Bounds {
    double lo = -5.0;
    double hi = 5.0;
    double clamp(double x) const noexcept { return x < lo ? lo : (x > hi ? hi : x); }
    double width() const noexcept { return hi - lo; }
    bool operator==(const Bounds&) const = default;
};

struct VariationParams {
    double sbx_eta = 15.0;
    double sbx_prob = 0.9;       ///< per-pair crossover probability
    double sbx_gene_prob = 0.5;  ///< per-gene application probability
    double pm_eta = 20.0;
    double pm_prob = -1.0;       ///< negative means 1/n
    Bounds bounds;

    double mutation_probability(std::size_t n) const noexcept
    {
        return pm_prob < 0.0 ? 1.0 / static_cast<double>(n) : pm_prob;
    }
    bool operator==(const VariationParams&) const = default;
};

/// SBX spread factor for a uniform draw u in [0, 1).
double sbx_beta(double u, double eta);

/// Children ((1+b)p1 + (1-b)p2)/2 and ((1-b)p1 + (1+b)p2)/2, unclamped.
/// Equal genes are returned unchanged.
std::pair<double, double> sbx_gene(double p1, double p2, double u, double eta);

/// Per gene: draw u_apply then u_beta; when u_apply < gene_prob the pair of
/// genes is replaced by sbx_gene(..., u_beta). Children clamped to bounds.
std::pair<Genome, Genome> sbx_crossover(const Genome& a, const Genome& b, double eta, double gene_prob,
                                        const Bounds& bounds, Rng& rng);

/// Normalized polynomial perturbation for a uniform draw u; 0 at u = 0.5.
double polynomial_delta(double u, double eta);

/// Per gene: draw u_m; when u_m < p_m draw u and add delta(u) * bound width.
Genome polynomial_mutation(const Genome& g, double eta, double p_m, const Bounds& bounds, Rng& rng);

/// Crossover with probability sbx_prob (one draw), then mutation of each
/// child. This is the offspring step shared by GA and the MOEAs.
std::pair<Genome, Genome> make_offspring(const Genome& a, const Genome& b, const VariationParams& params, Rng& rng);

} // namespace morl
