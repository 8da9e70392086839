#include "morl/evaluation.hpp"

#include <cmath>
#include <exception>
#include <numeric>

namespace morl {

double scalarize(std::span<const double> v)
{
    double s = 0.0;
    for (double x : v)
        s += x;
    return s / static_cast<double>(v.size());
}

ObjectiveVector rollout(const EnvSpec& env, const PolicyFn& policy, Rng& rng)
{
    EnvState state = reset(env, rng);
    ObjectiveVector total(static_cast<std::size_t>(env.objectives), 0.0);
    ObjectiveVector reward;
    std::vector<double> action(static_cast<std::size_t>(env.action_dim));
    double discount = 1.0;
    bool done = false;
    while (!done) {
        policy(state.vars, action);
        done = step_in_place(env, state, action, rng, reward);
        for (std::size_t j = 0; j < total.size(); ++j)
            total[j] += discount * reward[j];
        discount *= env.gamma;
    }
    return total;
}

ObjectiveVector rollout(const EnvSpec& env, const PolicySpec& spec, std::span<const double> genome, Rng& rng)
{
    if (spec.obs_dim != env.obs_dim || spec.action_dim != env.action_dim)
        throw std::invalid_argument("rollout: policy dimensions do not match environment '" + env.name + "'");
    if (genome.size() != genome_length(spec))
        throw std::invalid_argument("rollout: genome length does not match policy spec");
    std::vector<double> scratch;
    return rollout(
        env, [&](std::span<const double> obs, std::span<double> out) { act_into(spec, genome, obs, out, scratch); },
        rng);
}

std::uint64_t episode_seed(std::uint64_t seed_base, int episode) noexcept
{
    return derive_seed(seed_base, {static_cast<std::uint64_t>(episode)});
}

EvaluatedIndividual evaluate(const EnvSpec& env, const PolicySpec& spec, const Genome& genome, int n_episodes,
                             std::uint64_t seed_base)
{
    if (n_episodes < 1)
        throw std::invalid_argument("evaluate: n_episodes must be >= 1");
    EvaluatedIndividual out;
    out.genome = genome;
    out.n_episodes = n_episodes;
    out.mean_return.assign(static_cast<std::size_t>(env.objectives), 0.0);
    for (int e = 0; e < n_episodes; ++e) {
        Rng rng(episode_seed(seed_base, e));
        const auto r = rollout(env, spec, genome, rng);
        for (std::size_t j = 0; j < r.size(); ++j)
            out.mean_return[j] += r[j];
    }
    for (auto& x : out.mean_return)
        x /= static_cast<double>(n_episodes);
    out.scalar_value = scalarize(out.mean_return);
    return out;
}

void EvaluationContext::validate() const
{
    policy.validate();
    if (policy.obs_dim != env.obs_dim || policy.action_dim != env.action_dim)
        throw std::invalid_argument("policy dimensions do not match environment '" + env.name + "'");
    if (n_episodes < 1)
        throw std::invalid_argument("n_episodes must be >= 1");
}

namespace {
void check_finite(const EvaluatedIndividual& ind)
{
    for (double x : ind.mean_return)
        if (!std::isfinite(x))
            throw NonFiniteEvaluation("evaluation produced a non-finite return");
}
} // namespace

std::vector<EvaluatedIndividual> evaluate_population_serial(const EvaluationContext& ctx,
                                                            const std::vector<Genome>& genomes,
                                                            std::span<const std::uint64_t> seed_bases)
{
    if (seed_bases.size() != genomes.size())
        throw std::invalid_argument("one seed base per genome required");
    std::vector<EvaluatedIndividual> out;
    out.reserve(genomes.size());
    for (std::size_t i = 0; i < genomes.size(); ++i) {
        out.push_back(evaluate(ctx.env, ctx.policy, genomes[i], ctx.n_episodes, seed_bases[i]));
        check_finite(out.back());
    }
    return out;
}

std::vector<EvaluatedIndividual> evaluate_population_parallel(const EvaluationContext& ctx,
                                                              const std::vector<Genome>& genomes,
                                                              std::span<const std::uint64_t> seed_bases,
                                                              int threads)
{
    if (seed_bases.size() != genomes.size())
        throw std::invalid_argument("one seed base per genome required");
    const auto n = static_cast<std::ptrdiff_t>(genomes.size());
    std::vector<EvaluatedIndividual> out(genomes.size());
    std::vector<std::exception_ptr> errors(genomes.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[i] = evaluate(ctx.env, ctx.policy, genomes[i], ctx.n_episodes, seed_bases[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    // Report the lowest-index failure so the outcome matches the serial loop.
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        check_finite(out[i]);
    }
    return out;
}

Evaluator::Evaluator(EvaluationContext ctx, std::uint64_t run_seed, int threads)
    : ctx_(std::move(ctx)), run_seed_(run_seed), threads_(threads)
{
    ctx_.validate();
}

std::vector<EvaluatedIndividual> Evaluator::operator()(const std::vector<Genome>& genomes)
{
    std::vector<std::uint64_t> seeds(genomes.size());
    for (std::size_t i = 0; i < genomes.size(); ++i)
        seeds[i] = derive_seed(run_seed_, {static_cast<std::uint64_t>(batches_), static_cast<std::uint64_t>(i)});
    ++batches_;
    evaluations_ += genomes.size();
    if (threads_ > 1)
        return evaluate_population_parallel(ctx_, genomes, seeds, threads_);
    return evaluate_population_serial(ctx_, genomes, seeds);
}

} // namespace morl
