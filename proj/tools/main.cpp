// morl: run experiments, compute indicators, compare algorithms.
//
//   morl run experiment.cfg --out results/ [--seed N] [--jobs N]
//   morl metrics results/
//   morl stats results/ [more/problem/dirs...] --metric hv --alpha 0.05
//   morl export-plots results/

#include "morl/harness.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;

namespace {

void compute_and_write_metrics(const std::string& dir)
{
    const auto records = morl::load_records(dir);
    const auto metrics = morl::compute_metrics(records);
    morl::write_metrics_csv(metrics.rows, (fs::path(dir) / "metrics.csv").string());
    morl::write_fronts_csv(metrics, (fs::path(dir) / "fronts.csv").string());
    std::cout << "metrics: " << metrics.rows.size() << " rows, reference front of " << metrics.reference.size()
              << " points -> " << dir << "\n";
}

int cmd_run(const std::string& config_path, std::string out, std::optional<std::uint64_t> seed, int jobs)
{
    auto config = morl::load_config(config_path);
    if (seed)
        config.master_seed = *seed;
    if (out.empty())
        out = config.output_dir;
    if (out.empty())
        throw std::invalid_argument("no output directory: pass --out or set output_dir in the config");
    config.output_dir.clear();

    const auto records = morl::run_experiment(config, jobs);
    morl::write_experiment(records, config, out);
    for (const auto& r : records)
        std::cout << morl::algorithm_name(r.algorithm) << " run " << r.run << ": " << r.generations.size()
                  << " generations, " << r.evaluations << " evaluations"
                  << (r.aborted ? " (aborted: " + r.abort_reason + ")" : "") << "\n";
    compute_and_write_metrics(out);
    return 0;
}

int cmd_stats(const std::vector<std::string>& dirs, const std::string& metric_name, double alpha, bool average)
{
    const auto metric = morl::parse_metric(metric_name);
    std::vector<std::vector<morl::MetricRow>> problems;
    for (const auto& d : dirs) {
        const auto path = fs::path(d) / "metrics.csv";
        if (!fs::exists(path))
            compute_and_write_metrics(d);
        problems.push_back(morl::read_metrics_csv(path.string()));
    }
    const auto table = morl::final_score_table(problems, metric, average);
    const auto result = morl::stats::critical_difference_analysis(table, alpha);
    morl::write_cd_csv(result, metric, (fs::path(dirs.front()) / "cd.csv").string());

    std::cout << "Friedman chi2 = " << morl::format_double(result.statistic)
              << ", p = " << morl::format_double(result.p_value) << " (" << table.scores.size() << " datasets, "
              << table.algorithms.size() << " algorithms)\n";
    std::cout << "Nemenyi CD (alpha " << alpha << ") = " << morl::format_double(result.critical_difference) << "\n";
    for (std::size_t a = 0; a < result.algorithms.size(); ++a)
        std::cout << "  " << result.algorithms[a] << "  mean rank " << morl::format_double(result.mean_ranks[a])
                  << "\n";
    for (const auto& g : result.groups) {
        std::cout << "  group:";
        for (auto i : g)
            std::cout << ' ' << result.algorithms[i];
        std::cout << "\n";
    }
    return 0;
}

int cmd_export(const std::string& dir)
{
    const auto records = morl::load_records(dir);
    const auto metrics = morl::compute_metrics(records);
    morl::write_metrics_csv(metrics.rows, (fs::path(dir) / "metrics.csv").string());
    morl::write_fronts_csv(metrics, (fs::path(dir) / "fronts.csv").string());
    morl::write_curves_csv(metrics.rows, (fs::path(dir) / "curves.csv").string());
    std::cout << "wrote metrics.csv, fronts.csv, curves.csv to " << dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Evolutionary multi-objective policy search benchmark"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
    auto* run = app.add_subcommand("run", "Run every (algorithm, run) job of a config");
    run->add_option("config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
    run->add_option("--out", out_dir, "Output directory (overrides output_dir)");
    run->add_option("--seed", seed, "Master seed (overrides master_seed)");
    run->add_option("--jobs", jobs, "Evaluation threads")->check(CLI::PositiveNumber);

    std::string metrics_dir;
    auto* metrics = app.add_subcommand("metrics", "Recompute metrics.csv and fronts.csv from run records");
    metrics->add_option("dir", metrics_dir)->required()->check(CLI::ExistingDirectory);

    std::vector<std::string> stats_dirs;
    std::string metric = "hv";
    double alpha = 0.05;
    bool average = false;
    auto* stats = app.add_subcommand("stats", "Friedman test with Nemenyi post-hoc on final-generation metrics");
    stats->add_option("dirs", stats_dirs, "One result directory per problem")->required()->check(CLI::ExistingDirectory);
    stats->add_option("--metric", metric, "hv, gd or igd")->check(CLI::IsMember({"hv", "gd", "igd"}));
    stats->add_option("--alpha", alpha, "Significance level (0.05 tabulated)");
    stats->add_flag("--average-runs", average, "One dataset per problem (runs averaged) instead of per run");

    std::string export_dir;
    auto* exporter = app.add_subcommand("export-plots", "Write plot-ready CSVs (curves, fronts)");
    exporter->add_option("dir", export_dir)->required()->check(CLI::ExistingDirectory);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run)
            return cmd_run(config_path, out_dir, seed, jobs);
        if (*metrics) {
            compute_and_write_metrics(metrics_dir);
            return 0;
        }
        if (*stats)
            return cmd_stats(stats_dirs, metric, alpha, average);
        if (*exporter)
            return cmd_export(export_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
