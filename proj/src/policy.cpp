#include "morl/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace morl {

void PolicySpec::validate() const
{
    for (int w : widths())
        if (w < 1)
            throw std::invalid_argument("policy layer widths must be >= 1");
}

std::size_t genome_length(const PolicySpec& spec)
{
    spec.validate();
    const auto w = spec.widths();
    std::size_t n = 0;
    for (std::size_t l = 0; l + 1 < w.size(); ++l)
        n += static_cast<std::size_t>(w[l]) * static_cast<std::size_t>(w[l + 1]) + static_cast<std::size_t>(w[l + 1]);
    return n;
}

Genome init_genome(const PolicySpec& spec, Rng& rng)
{
    Genome g(genome_length(spec));
    for (auto& x : g)
        x = rng.uniform(-1.0, 1.0);
    return g;
}

void act_into(const PolicySpec& spec, std::span<const double> genome, std::span<const double> observation,
              std::span<double> out, std::vector<double>& scratch)
{
    const auto w = spec.widths();
    int widest = 0;
    for (int x : w)
        widest = std::max(widest, x);
    scratch.resize(2 * static_cast<std::size_t>(widest));
    double* in = scratch.data();
    double* next = scratch.data() + widest;
    std::copy(observation.begin(), observation.end(), in);

    std::size_t p = 0;
    for (std::size_t l = 0; l + 1 < w.size(); ++l) {
        const int n_in = w[l];
        const int n_out = w[l + 1];
        const double* weights = genome.data() + p;
        const double* bias = weights + static_cast<std::size_t>(n_in) * n_out;
        for (int o = 0; o < n_out; ++o) {
            double s = 0.0;
            for (int i = 0; i < n_in; ++i)
                s += weights[o * n_in + i] * in[i];
            next[o] = std::tanh(s + bias[o]);
        }
        p += static_cast<std::size_t>(n_in) * n_out + n_out;
        std::swap(in, next);
    }
    std::copy(in, in + spec.action_dim, out.begin());
}

std::vector<double> act(const PolicySpec& spec, std::span<const double> genome, std::span<const double> observation)
{
    if (genome.size() != genome_length(spec))
        throw std::invalid_argument("act: genome length does not match policy spec");
    if (static_cast<int>(observation.size()) != spec.obs_dim)
        throw std::invalid_argument("act: observation length does not match policy spec");
    std::vector<double> out(static_cast<std::size_t>(spec.action_dim));
    std::vector<double> scratch;
    act_into(spec, genome, observation, out, scratch);
    return out;
}

} // namespace morl
