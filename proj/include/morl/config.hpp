#pragma once

#include "morl/algorithms.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morl {

/// Parse failure; what() carries "line N: ..." when a line is at fault.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(int line, const std::string& message);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// One experiment. Text form is flat UTF-8 `key = value` lines, `#` starts a
/// comment, lists are written `[a, b, c]` and nested lists `[[0, 1], [1, 0]]`.
///
///   environment = NoisyPointWalker
///   algorithms = [NSGA2, SPEA2, GA, DE]
///   n_episodes = 5
struct ExperimentConfig {
    std::string environment;
    std::optional<double> sigma;
    std::array<int, 3> layers{4, 4, 4};
    std::vector<Algorithm> algorithms;
    int pop_size = 50;
    int generations = 25;
    int n_episodes = 5;
    int n_runs = 10;
    std::uint64_t master_seed = 0;
    std::string output_dir;
    AlgorithmParams params;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Validates and applies defaults; unknown or repeated keys are errors.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

/// Canonical text listing every key; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig& config);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double x);

} // namespace morl
