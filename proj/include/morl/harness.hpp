#pragma once

#include "morl/config.hpp"
#include "morl/indicators.hpp"
#include "morl/run_record.hpp"
#include "morl/stats.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace morl {

/// Seed of one (algorithm, run) job.
std::uint64_t run_seed(std::uint64_t master_seed, Algorithm a, int run);

/// Executes one job. `threads` only changes how a generation's evaluations
/// are scheduled, never the result. Non-finite returns abort the run and
/// mark the record; earlier generations are kept.
RunRecord run_single(const ExperimentConfig& config, Algorithm a, int run, int threads = 1);

/// Every (algorithm, run) pair, algorithms in config order.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config, int threads = 1);

/// Writes config.txt, runs/<ALG>_run<r>.jsonl and timing.csv under dir.
void write_experiment(const std::vector<RunRecord>& records, const ExperimentConfig& config, const std::string& dir);

/// Reads runs/*.jsonl back, ordered by (algorithm position in the config, run).
std::vector<RunRecord> load_records(const std::string& dir);

struct MetricRow {
    std::string algorithm;
    int run = 0;
    int generation = 0;
    double hv = 0.0;
    double gd = 0.0;
    double igd = 0.0;
    double scalarized_best = 0.0;
};

struct AlgorithmFront {
    std::string algorithm;
    FrontApproximation front;
};

struct MetricsResult {
    FrontApproximation reference;
    std::vector<AlgorithmFront> algorithm_fronts;
    std::vector<MetricRow> rows;
};

/// Reference front from the final populations of completed runs, per-
/// algorithm union fronts, then one indicator row per recorded generation.
MetricsResult compute_metrics(const std::vector<RunRecord>& records);

void write_metrics_csv(const std::vector<MetricRow>& rows, const std::string& path);
std::vector<MetricRow> read_metrics_csv(const std::string& path);
void write_fronts_csv(const MetricsResult& metrics, const std::string& path);

enum class Metric { hv, gd, igd };
Metric parse_metric(const std::string& name);
std::string metric_name(Metric m);

/// Final-generation score table. One dataset per (problem, run) cell, or per
/// problem with runs averaged.
stats::ScoreTable final_score_table(const std::vector<std::vector<MetricRow>>& problems, Metric metric,
                                    bool average_runs);

/// cd.csv rows for one metric: "metric,algorithm,mean_rank,group_ids".
/// Existing rows of other metrics in the file are preserved.
void write_cd_csv(const stats::CDResult& result, Metric metric, const std::string& path);

/// Mean/std across runs per (algorithm, generation): curves.csv.
void write_curves_csv(const std::vector<MetricRow>& rows, const std::string& path);

} // namespace morl
