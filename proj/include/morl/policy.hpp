#pragma once

#include "morl/rng.hpp"

#include <array>
#include <span>
#include <vector>

namespace morl {

/// Flat parameter vector of a policy network.
using Genome = std::vector<double>;

/// Fixed-topology MLP: obs -> h1 -> h2 -> h3 -> action, tanh everywhere.
/// Genome layout, per layer in input-to-output order: the out x in weight
/// matrix row-major, then the out-sized bias vector.
struct PolicySpec {
    int obs_dim = 1;
    std::array<int, 3> hidden{4, 4, 4};
    int action_dim = 1;

    /// Throws std::invalid_argument if any width is < 1.
    void validate() const;
    std::array<int, 5> widths() const { return {obs_dim, hidden[0], hidden[1], hidden[2], action_dim}; }
};

std::size_t genome_length(const PolicySpec& spec);

/// Every parameter ~ Uniform(-1, 1), drawn in layout order.
Genome init_genome(const PolicySpec& spec, Rng& rng);

/// Forward pass. Throws on observation or genome length mismatch.
std::vector<double> act(const PolicySpec& spec, std::span<const double> genome, std::span<const double> observation);

/// Allocation-free forward pass for rollouts; `out` must have action_dim
/// entries. Lengths are not rechecked.
void act_into(const PolicySpec& spec, std::span<const double> genome, std::span<const double> observation,
              std::span<double> out, std::vector<double>& scratch);

} // namespace morl
