#pragma once

#include "morl/moea.hpp"
#include "morl/soea.hpp"

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace morl {

enum class Algorithm { GA, DE, PSO, NSGA2, SPEA2, SMSEMOA, NSGA3, RNSGA2 };

std::string_view algorithm_name(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;
const std::vector<Algorithm>& all_algorithms();
bool is_scalarized(Algorithm a) noexcept;

/// Operator parameters shared by the whole roster.
struct AlgorithmParams {
    VariationParams variation;
    double de_f = 0.5;
    double de_cr = 0.9;
    double pso_inertia = 0.7298;
    double pso_c1 = 1.49618;
    double pso_c2 = 1.49618;
    double rnsga2_epsilon = 0.01;
    /// Normalized minimization space; empty means the default corners.
    PointSet rnsga2_reference_points;

    bool operator==(const AlgorithmParams&) const = default;
};

/// Uniform generation interface. initialize() takes the evaluated initial
/// population (generation 0); every step() consumes exactly pop_size
/// evaluations through the callback and leaves pop_size individuals.
class Optimizer {
public:
    virtual ~Optimizer() = default;
    virtual void initialize(Population initial) = 0;
    virtual void step(const BatchEvaluator& evaluate) = 0;
    /// The population recorded for the current generation.
    virtual const Population& population() const = 0;
    virtual Algorithm algorithm() const = 0;
};

/// Throws std::invalid_argument when the configuration cannot work with the
/// problem (odd pop_size, DE with fewer than 4, SMS-EMOA with k > 3, ...).
std::unique_ptr<Optimizer> make_optimizer(Algorithm a, const AlgorithmParams& params, int objectives,
                                          std::size_t pop_size, Rng rng);

} // namespace morl
