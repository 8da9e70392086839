#pragma once

#include "morl/pareto.hpp"
#include "morl/rng.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morl {

enum class EnvKind {
    tradeoff_bandit,    ///< k=2, one step, reward (u, 1-u) with u = (a+1)/2
    noisy_point_walker, ///< k=2, speed vs energy on a damped 1-D point
    hop_lander,         ///< k=3, forward speed vs height vs energy
};

/// Immutable description of a built-in MOMDP.
struct EnvSpec {
    std::string name;
    EnvKind kind = EnvKind::tradeoff_bandit;
    int obs_dim = 1;
    int action_dim = 1;
    int objectives = 2;
    int horizon = 1;
    double gamma = 0.99;
    /// Standard deviation of the Gaussian transition noise.
    double sigma = 0.01;
};

inline constexpr double default_noise_sigma = 0.01;

/// Looks up an environment by name ("TradeoffBandit", "NoisyPointWalker",
/// "HopLander"). Throws std::invalid_argument for unknown names or a negative
/// sigma.
EnvSpec make_env(std::string_view name, std::optional<double> sigma = std::nullopt);

std::vector<std::string> environment_names();

/// Full state; also the observation handed to the policy.
struct EnvState {
    std::vector<double> vars;
    int step_index = 0;
};

struct StepResult {
    EnvState next_state;
    ObjectiveVector reward;
    bool done = false;
};

/// Draws an initial state from the environment's start distribution.
EnvState reset(const EnvSpec& env, Rng& rng);

/// Advances one step. Actions are clamped to [-1, 1]. Throws if the episode
/// is already finished or the action has the wrong length.
StepResult step(const EnvSpec& env, const EnvState& state, std::span<const double> action, Rng& rng);

/// In-place variant used by rollouts; writes the reward into `reward`
/// (resized to k) and returns done.
bool step_in_place(const EnvSpec& env, EnvState& state, std::span<const double> action, Rng& rng,
                   ObjectiveVector& reward);

/// {(u, 1-u) : u = i/(resolution-1)} for TradeoffBandit. Throws for other
/// environments or resolution < 2.
FrontApproximation analytic_front(const EnvSpec& env, int resolution);

} // namespace morl
