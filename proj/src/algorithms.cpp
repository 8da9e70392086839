#include "morl/algorithms.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace morl {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 8> names{{
    {Algorithm::GA, "GA"},
    {Algorithm::DE, "DE"},
    {Algorithm::PSO, "PSO"},
    {Algorithm::NSGA2, "NSGA2"},
    {Algorithm::SPEA2, "SPEA2"},
    {Algorithm::SMSEMOA, "SMSEMOA"},
    {Algorithm::NSGA3, "NSGA3"},
    {Algorithm::RNSGA2, "RNSGA2"},
}};

class PopulationOptimizer : public Optimizer {
public:
    PopulationOptimizer(Algorithm a, AlgorithmParams params, Rng rng)
        : algorithm_(a), params_(std::move(params)), rng_(rng)
    {
    }

    void initialize(Population initial) override { population_ = std::move(initial); }
    const Population& population() const override { return population_; }
    Algorithm algorithm() const override { return algorithm_; }

protected:
    Algorithm algorithm_;
    AlgorithmParams params_;
    Rng rng_;
    Population population_;
};

class Ga final : public PopulationOptimizer {
public:
    using PopulationOptimizer::PopulationOptimizer;
    void step(const BatchEvaluator& evaluate) override
    {
        population_ = ga_generation(population_, evaluate, params_.variation, rng_);
    }
};

class De final : public PopulationOptimizer {
public:
    using PopulationOptimizer::PopulationOptimizer;
    void step(const BatchEvaluator& evaluate) override
    {
        const DeParams de{params_.de_f, params_.de_cr, params_.variation.bounds};
        population_ = de_generation(population_, evaluate, de, rng_);
    }
};

class Pso final : public PopulationOptimizer {
public:
    using PopulationOptimizer::PopulationOptimizer;
    void initialize(Population initial) override
    {
        state_ = pso_init(std::move(initial));
        population_ = state_.personal_best;
    }
    void step(const BatchEvaluator& evaluate) override
    {
        const PsoParams pso{params_.pso_inertia, params_.pso_c1, params_.pso_c2, params_.variation.bounds};
        pso_generation(state_, evaluate, pso, rng_);
        population_ = state_.personal_best;
    }

private:
    PsoState state_;
};

class Nsga2 final : public PopulationOptimizer {
public:
    using PopulationOptimizer::PopulationOptimizer;
    void step(const BatchEvaluator& evaluate) override
    {
        population_ = nsga2_generation(population_, evaluate, params_.variation, rng_);
    }
};

class Spea2 final : public PopulationOptimizer {
public:
    using PopulationOptimizer::PopulationOptimizer;
    void initialize(Population initial) override
    {
        state_ = spea2_init(std::move(initial));
        population_ = state_.archive;
    }
    void step(const BatchEvaluator& evaluate) override
    {
        spea2_generation(state_, evaluate, params_.variation, rng_);
        population_ = state_.archive;
    }

private:
    Spea2State state_;
};

class SmsEmoa final : public PopulationOptimizer {
public:
    using PopulationOptimizer::PopulationOptimizer;
    void step(const BatchEvaluator& evaluate) override
    {
        population_ = smsemoa_generation(population_, evaluate, params_.variation, rng_);
    }
};

class Nsga3 final : public PopulationOptimizer {
public:
    Nsga3(Algorithm a, AlgorithmParams params, Rng rng, PointSet directions)
        : PopulationOptimizer(a, std::move(params), rng), directions_(std::move(directions))
    {
    }
    void step(const BatchEvaluator& evaluate) override
    {
        population_ = nsga3_generation(population_, evaluate, params_.variation, directions_, rng_);
    }

private:
    PointSet directions_;
};

class Rnsga2 final : public PopulationOptimizer {
public:
    using PopulationOptimizer::PopulationOptimizer;
    void step(const BatchEvaluator& evaluate) override
    {
        population_ = rnsga2_generation(population_, evaluate, params_.variation, params_.rnsga2_reference_points,
                                        params_.rnsga2_epsilon, rng_);
    }
};

} // namespace

std::string_view algorithm_name(Algorithm a) noexcept
{
    for (const auto& [alg, name] : names)
        if (alg == a)
            return name;
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept
{
    for (const auto& [alg, n] : names)
        if (n == name)
            return alg;
    return std::nullopt;
}

const std::vector<Algorithm>& all_algorithms()
{
    static const std::vector<Algorithm> list = [] {
        std::vector<Algorithm> v;
        for (const auto& entry : names)
            v.push_back(entry.first);
        return v;
    }();
    return list;
}

bool is_scalarized(Algorithm a) noexcept
{
    return a == Algorithm::GA || a == Algorithm::DE || a == Algorithm::PSO;
}

std::unique_ptr<Optimizer> make_optimizer(Algorithm a, const AlgorithmParams& params, int objectives,
                                          std::size_t pop_size, Rng rng)
{
    if (pop_size < 2 || pop_size % 2 != 0)
        throw std::invalid_argument("pop_size must be even and >= 2");
    if (a == Algorithm::DE && pop_size < 4)
        throw std::invalid_argument("DE needs pop_size >= 4");
    if (a == Algorithm::SMSEMOA && objectives > 3)
        throw std::invalid_argument("SMSEMOA supports at most 3 objectives (exact hypervolume)");

    switch (a) {
    case Algorithm::GA:
        return std::make_unique<Ga>(a, params, rng);
    case Algorithm::DE:
        return std::make_unique<De>(a, params, rng);
    case Algorithm::PSO:
        return std::make_unique<Pso>(a, params, rng);
    case Algorithm::NSGA2:
        return std::make_unique<Nsga2>(a, params, rng);
    case Algorithm::SPEA2:
        return std::make_unique<Spea2>(a, params, rng);
    case Algorithm::SMSEMOA:
        return std::make_unique<SmsEmoa>(a, params, rng);
    case Algorithm::NSGA3:
        return std::make_unique<Nsga3>(a, params, rng,
                                       generate_reference_directions(objectives, partitions_for(objectives, pop_size)));
    case Algorithm::RNSGA2: {
        AlgorithmParams p = params;
        if (p.rnsga2_reference_points.empty())
            p.rnsga2_reference_points = rnsga2_default_reference_points(objectives);
        for (const auto& r : p.rnsga2_reference_points)
            if (static_cast<int>(r.size()) != objectives)
                throw std::invalid_argument("R-NSGA-II reference point has wrong dimension");
        return std::make_unique<Rnsga2>(a, std::move(p), rng);
    }
    }
    throw std::invalid_argument("unknown algorithm");
}

} // namespace morl
