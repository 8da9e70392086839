#pragma once

#include "morl/environments.hpp"
#include "morl/pareto.hpp"
#include "morl/policy.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace morl {

struct EvaluatedIndividual {
    Genome genome;
    ObjectiveVector mean_return;
    int n_episodes = 0;
    /// Equal-weight scalarization of mean_return.
    double scalar_value = 0.0;
};

/// Thrown when a rollout produces NaN or infinite returns.
class NonFiniteEvaluation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mean of the components, i.e. weights 1/k.
double scalarize(std::span<const double> v);

/// Observation in, action out (action span pre-sized to action_dim).
using PolicyFn = std::function<void(std::span<const double>, std::span<double>)>;

/// One discounted vector return sum_{i<H} gamma^i r_{i+1}, starting from
/// reset(env, rng) and running the full horizon.
ObjectiveVector rollout(const EnvSpec& env, const PolicyFn& policy, Rng& rng);
ObjectiveVector rollout(const EnvSpec& env, const PolicySpec& spec, std::span<const double> genome, Rng& rng);

/// Stream seed for episode e of an individual with the given seed_base.
std::uint64_t episode_seed(std::uint64_t seed_base, int episode) noexcept;

/// Empirical mean over n_episodes rollouts, accumulated in episode order.
EvaluatedIndividual evaluate(const EnvSpec& env, const PolicySpec& spec, const Genome& genome, int n_episodes,
                             std::uint64_t seed_base);

struct EvaluationContext {
    EnvSpec env;
    PolicySpec policy;
    int n_episodes = 5;

    /// Throws if policy and environment dimensions disagree.
    void validate() const;
};

// Population kernels. seed_bases[i] belongs to genomes[i]; results come back
// in input order. The parallel variant fans out over individuals with OpenMP
// and is bit-identical to the serial one.
std::vector<EvaluatedIndividual> evaluate_population_serial(const EvaluationContext& ctx,
                                                            const std::vector<Genome>& genomes,
                                                            std::span<const std::uint64_t> seed_bases);
std::vector<EvaluatedIndividual> evaluate_population_parallel(const EvaluationContext& ctx,
                                                              const std::vector<Genome>& genomes,
                                                              std::span<const std::uint64_t> seed_bases,
                                                              int threads);

/// Callback handed to the optimizers: evaluates one batch of genomes.
using BatchEvaluator = std::function<std::vector<EvaluatedIndividual>(const std::vector<Genome>&)>;

/// Stateful batch evaluator for one run. Batch b, individual i uses
/// seed_base = derive_seed(run_seed, {b, i}); every batch is one generation.
class Evaluator {
public:
    Evaluator(EvaluationContext ctx, std::uint64_t run_seed, int threads = 1);

    std::vector<EvaluatedIndividual> operator()(const std::vector<Genome>& genomes);

    std::size_t evaluations() const noexcept { return evaluations_; }
    std::size_t batches() const noexcept { return batches_; }
    const EvaluationContext& context() const noexcept { return ctx_; }

    BatchEvaluator callback() { return [this](const std::vector<Genome>& g) { return (*this)(g); }; }

private:
    EvaluationContext ctx_;
    std::uint64_t run_seed_;
    int threads_;
    std::size_t evaluations_ = 0;
    std::size_t batches_ = 0;
};

} // namespace morl
