#include "morl/environments.hpp"

#include <algorithm>
#include <stdexcept>

namespace morl {

EnvSpec make_env(std::string_view name, std::optional<double> sigma)
{
    EnvSpec env;
    env.name = std::string(name);
    if (name == "TradeoffBandit") {
        env.kind = EnvKind::tradeoff_bandit;
        env.obs_dim = 1;
        env.action_dim = 1;
        env.objectives = 2;
        env.horizon = 1;
    } else if (name == "NoisyPointWalker") {
        env.kind = EnvKind::noisy_point_walker;
        env.obs_dim = 2;
        env.action_dim = 1;
        env.objectives = 2;
        env.horizon = 20;
    } else if (name == "HopLander") {
        env.kind = EnvKind::hop_lander;
        env.obs_dim = 3;
        env.action_dim = 2;
        env.objectives = 3;
        env.horizon = 20;
    } else {
        throw std::invalid_argument("unknown environment '" + std::string(name) + "'");
    }
    env.gamma = 0.99;
    env.sigma = sigma.value_or(default_noise_sigma);
    if (!(env.sigma >= 0.0))
        throw std::invalid_argument("noise sigma must be nonnegative");
    return env;
}

std::vector<std::string> environment_names()
{
    return {"TradeoffBandit", "NoisyPointWalker", "HopLander"};
}

EnvState reset(const EnvSpec& env, Rng& rng)
{
    EnvState s;
    switch (env.kind) {
    case EnvKind::tradeoff_bandit:
        s.vars = {1.0};
        break;
    case EnvKind::noisy_point_walker:
        s.vars = {0.0, rng.uniform(-0.05, 0.05)};
        break;
    case EnvKind::hop_lander:
        s.vars = {1.0 + rng.uniform(-0.05, 0.05), 0.0, 0.0};
        break;
    }
    return s;
}

bool step_in_place(const EnvSpec& env, EnvState& state, std::span<const double> action, Rng& rng,
                   ObjectiveVector& reward)
{
    if (state.step_index >= env.horizon)
        throw std::invalid_argument("step: episode already finished");
    if (static_cast<int>(action.size()) != env.action_dim)
        throw std::invalid_argument("step: action has wrong dimension");

    auto clamp_action = [&](std::size_t i) { return std::clamp(action[i], -1.0, 1.0); };
    reward.resize(static_cast<std::size_t>(env.objectives));

    switch (env.kind) {
    case EnvKind::tradeoff_bandit: {
        const double u = (clamp_action(0) + 1.0) / 2.0;
        reward[0] = u;
        reward[1] = 1.0 - u;
        break;
    }
    case EnvKind::noisy_point_walker: {
        const double a = clamp_action(0);
        double& x = state.vars[0];
        double& v = state.vars[1];
        const double eps = env.sigma * rng.normal();
        v = std::clamp(v + 0.1 * a - 0.05 * v + eps, -1.0, 1.0);
        x = x + 0.1 * v;
        reward[0] = v;
        reward[1] = -(a * a);
        break;
    }
    case EnvKind::hop_lander: {
        const double a1 = clamp_action(0);
        const double a2 = clamp_action(1);
        double& h = state.vars[0];
        double& w = state.vars[1];
        double& v = state.vars[2];
        w = w + 0.1 * a1 - 0.02;
        h = std::max(0.0, h + 0.1 * w);
        if (h == 0.0)
            w = 0.0;
        const double eps = env.sigma * rng.normal();
        v = 0.95 * v + 0.1 * a2 + eps;
        reward[0] = v;
        reward[1] = h;
        reward[2] = -(a1 * a1 + a2 * a2);
        break;
    }
    }
    ++state.step_index;
    return state.step_index >= env.horizon;
}

StepResult step(const EnvSpec& env, const EnvState& state, std::span<const double> action, Rng& rng)
{
    StepResult out;
    out.next_state = state;
    out.done = step_in_place(env, out.next_state, action, rng, out.reward);
    return out;
}

FrontApproximation analytic_front(const EnvSpec& env, int resolution)
{
    if (env.kind != EnvKind::tradeoff_bandit)
        throw std::invalid_argument("analytic front is only known for TradeoffBandit");
    if (resolution < 2)
        throw std::invalid_argument("analytic front resolution must be >= 2");
    PointSet pts;
    pts.reserve(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(resolution - 1);
        pts.push_back({u, 1.0 - u});
    }
    return FrontApproximation::from_nondominated(std::move(pts));
}

} // namespace morl
