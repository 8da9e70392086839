#include "morl/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace morl {

double sbx_beta(double u, double eta)
{
    const double e = 1.0 / (eta + 1.0);
    if (u <= 0.5)
        return std::pow(2.0 * u, e);
    return std::pow(1.0 / (2.0 * (1.0 - u)), e);
}

std::pair<double, double> sbx_gene(double p1, double p2, double u, double eta)
{
    if (p1 == p2)
        return {p1, p2};
    const double beta = sbx_beta(u, eta);
    return {0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2), 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2)};
}

std::pair<Genome, Genome> sbx_crossover(const Genome& a, const Genome& b, double eta, double gene_prob,
                                        const Bounds& bounds, Rng& rng)
{
    if (a.size() != b.size())
        throw std::invalid_argument("sbx: parents differ in length");
    if (!(eta > 0.0))
        throw std::invalid_argument("sbx: distribution index must be positive");
    Genome c1 = a;
    Genome c2 = b;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double u_apply = rng.uniform();
        const double u_beta = rng.uniform();
        if (u_apply < gene_prob) {
            const auto [x, y] = sbx_gene(a[i], b[i], u_beta, eta);
            c1[i] = bounds.clamp(x);
            c2[i] = bounds.clamp(y);
        }
    }
    return {std::move(c1), std::move(c2)};
}

double polynomial_delta(double u, double eta)
{
    const double e = 1.0 / (eta + 1.0);
    if (u < 0.5)
        return std::pow(2.0 * u, e) - 1.0;
    return 1.0 - std::pow(2.0 * (1.0 - u), e);
}

Genome polynomial_mutation(const Genome& g, double eta, double p_m, const Bounds& bounds, Rng& rng)
{
    if (!(p_m >= 0.0 && p_m <= 1.0))
        throw std::invalid_argument("polynomial mutation: probability must lie in [0, 1]");
    Genome out = g;
    for (auto& x : out) {
        if (rng.uniform() < p_m)
            x = bounds.clamp(x + polynomial_delta(rng.uniform(), eta) * bounds.width());
    }
    return out;
}

std::pair<Genome, Genome> make_offspring(const Genome& a, const Genome& b, const VariationParams& params, Rng& rng)
{
    std::pair<Genome, Genome> kids;
    if (rng.uniform() < params.sbx_prob)
        kids = sbx_crossover(a, b, params.sbx_eta, params.sbx_gene_prob, params.bounds, rng);
    else
        kids = {a, b};
    const double p_m = params.mutation_probability(a.size());
    kids.first = polynomial_mutation(kids.first, params.pm_eta, p_m, params.bounds, rng);
    kids.second = polynomial_mutation(kids.second, params.pm_eta, p_m, params.bounds, rng);
    return kids;
}

} // namespace morl
