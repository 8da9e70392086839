#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "morl/environments.hpp"
#include "morl/harness.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace morl;
namespace fs = std::filesystem;

namespace {
std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name)
{
    const auto p = fs::temp_directory_path() / ("morl_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

ExperimentConfig small(const std::string& env, std::vector<Algorithm> algs)
{
    ExperimentConfig c;
    c.environment = env;
    c.algorithms = std::move(algs);
    c.pop_size = 8;
    c.generations = 4;
    c.n_episodes = 2;
    c.n_runs = 2;
    c.master_seed = 3;
    return c;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }
} // namespace

TEST_CASE("records: count, budget, shape and determinism")
{
    const auto cfg = small("NoisyPointWalker", {Algorithm::NSGA2, Algorithm::GA});
    const auto a = run_experiment(cfg);
    const auto b = run_experiment(cfg, 4);
    REQUIRE(a.size() == 4);
    CHECK(a[0].algorithm == Algorithm::NSGA2);
    CHECK(a[2].algorithm == Algorithm::GA);
    CHECK(a[1].run == 1);
    for (std::size_t r = 0; r < a.size(); ++r) {
        CHECK(a[r].evaluations == 32);
        CHECK(a[r].generations.size() == 4);
        for (const auto& g : a[r].generations)
            CHECK(g.size() == 8);
        CHECK(a[r].seed == run_seed(3, a[r].algorithm, a[r].run));
        for (std::size_t g = 0; g < 4; ++g)
            for (std::size_t i = 0; i < 8; ++i) {
                CHECK(a[r].generations[g][i].genome == b[r].generations[g][i].genome);
                CHECK(a[r].generations[g][i].mean_return == b[r].generations[g][i].mean_return);
            }
    }
    CHECK(run_seed(3, Algorithm::GA, 0) != run_seed(3, Algorithm::GA, 1));
    CHECK(run_seed(3, Algorithm::GA, 0) != run_seed(3, Algorithm::DE, 0));
}

TEST_CASE("persistence round trip is byte-identical")
{
    const auto cfg = small("HopLander", {Algorithm::SPEA2, Algorithm::PSO});
    const auto recs = run_experiment(cfg);
    const auto d1 = scratch("persist1");
    const auto d2 = scratch("persist2");
    write_experiment(recs, cfg, d1.string());
    const auto loaded = load_records(d1.string());
    REQUIRE(loaded.size() == recs.size());
    write_experiment(loaded, cfg, d2.string());
    for (const auto& r : recs) {
        const auto name = record_file_name(r.algorithm, r.run);
        CHECK(fs::exists(d1 / "runs" / name));
        CHECK(slurp(d1 / "runs" / name) == slurp(d2 / "runs" / name));
    }
    CHECK(loaded[0].config == cfg);
    CHECK(loaded[0].generations[3][5].mean_return == recs[0].generations[3][5].mean_return);
    CHECK(parse_config(slurp(d1 / "config.txt")) == cfg);
    CHECK(fs::exists(d1 / "timing.csv"));
    CHECK(record_file_name(Algorithm::NSGA3, 7) == "NSGA3_run7.jsonl");
}

TEST_CASE("metrics: rows, headers, fronts and re-export")
{
    const auto cfg = small("TradeoffBandit", {Algorithm::NSGA2, Algorithm::DE, Algorithm::SMSEMOA});
    const auto recs = run_experiment(cfg);
    const auto m = compute_metrics(recs);
    CHECK(m.rows.size() == 6 * 4);
    CHECK(m.algorithm_fronts.size() == 3);
    for (const auto& p : m.reference.points())
        CHECK(p[0] + p[1] <= 1.0 + 1e-9);
    for (const auto& row : m.rows) {
        CHECK(row.hv >= 0.0);
        CHECK(row.hv <= 1.0);
        CHECK(row.gd >= 0.0);
    }
    const auto& first = m.rows.front();
    double best = -1e300;
    for (const auto& ind : recs[0].generations[0])
        best = std::max(best, ind.scalar_value);
    CHECK(first.scalarized_best == best);

    const auto dir = scratch("metrics");
    write_metrics_csv(m.rows, (dir / "metrics.csv").string());
    write_fronts_csv(m, (dir / "fronts.csv").string());
    const auto text = slurp(dir / "metrics.csv");
    CHECK(first_line(text) == "algorithm,run,generation,hv,gd,igd,scalarized_best");
    CHECK(first_line(slurp(dir / "fronts.csv")) == "scope,algorithm,f1,f2");

    const auto back = read_metrics_csv((dir / "metrics.csv").string());
    REQUIRE(back.size() == m.rows.size());
    CHECK(back[5].hv == m.rows[5].hv);
    write_metrics_csv(back, (dir / "again.csv").string());
    CHECK(slurp(dir / "again.csv") == text);

    write_fronts_csv(compute_metrics(recs), (dir / "fronts2.csv").string());
    CHECK(slurp(dir / "fronts2.csv") == slurp(dir / "fronts.csv"));

    CHECK_THROWS(write_metrics_csv(m.rows, (dir / "missing" / "x" / "metrics.csv").string()));
}

TEST_CASE("a collapsed final population is a degenerate reference front")
{
    auto cfg = small("TradeoffBandit", {Algorithm::GA});
    cfg.n_runs = 1;
    auto recs = run_experiment(cfg);
    // collapse the final generation onto a single individual
    auto& last = recs[0].generations.back();
    for (auto& ind : last)
        ind = last.front();
    // degenerate reference front is rejected with a diagnostic
    CHECK_THROWS_AS(compute_metrics(recs), std::invalid_argument);
}

TEST_CASE("score tables and cd export")
{
    const auto cfg = small("TradeoffBandit", {Algorithm::NSGA2, Algorithm::GA, Algorithm::DE});
    const auto m = compute_metrics(run_experiment(cfg));
    const auto per_run = final_score_table({m.rows}, Metric::igd, false);
    CHECK(per_run.scores.size() == 2);
    CHECK(per_run.algorithms == std::vector<std::string>{"NSGA2", "GA", "DE"});
    CHECK(per_run.better == stats::Direction::lower_better);
    const auto averaged = final_score_table({m.rows, m.rows}, Metric::hv, true);
    CHECK(averaged.scores.size() == 2);
    CHECK(averaged.better == stats::Direction::higher_better);

    const auto res = stats::critical_difference_analysis(per_run);
    const auto dir = scratch("cd");
    write_cd_csv(res, Metric::igd, (dir / "cd.csv").string());
    write_cd_csv(stats::critical_difference_analysis(averaged), Metric::hv, (dir / "cd.csv").string());
    const auto text = slurp(dir / "cd.csv");
    CHECK(first_line(text) == "metric,algorithm,mean_rank,group_ids");
    CHECK(text.find("\nigd,NSGA2,") != std::string::npos);
    CHECK(text.find("\nhv,NSGA2,") != std::string::npos);

    write_curves_csv(m.rows, (dir / "curves.csv").string());
    CHECK(fs::file_size(dir / "curves.csv") > 0);
    CHECK(parse_metric("gd") == Metric::gd);
    CHECK(metric_name(Metric::hv) == "hv");
    CHECK_THROWS(parse_metric("r2"));
}
