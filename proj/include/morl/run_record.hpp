#pragma once

#include "morl/algorithms.hpp"
#include "morl/config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace morl {

/// Everything one (algorithm, run) produced. Serialized as JSON Lines: a
/// header object followed by one object per generation.
struct RunRecord {
    ExperimentConfig config;
    Algorithm algorithm = Algorithm::NSGA2;
    int run = 0;
    std::uint64_t seed = 0; ///< derived from (master_seed, algorithm, run)
    int objectives = 2;
    std::size_t evaluations = 0;
    bool aborted = false;
    std::string abort_reason;
    std::vector<Population> generations;
    double wall_time_seconds = 0.0; ///< not serialized into the record file
};

std::string record_file_name(Algorithm a, int run);

void write_run_record(const RunRecord& record, const std::string& path);
RunRecord read_run_record(const std::string& path);

} // namespace morl
