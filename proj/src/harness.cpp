#include "morl/harness.hpp"

#include "morl/environments.hpp"
#include "morl/evaluation.hpp"
#include "morl/policy.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace morl {

std::uint64_t run_seed(std::uint64_t master_seed, Algorithm a, int run)
{
    const std::string name(algorithm_name(a));
    return derive_seed(master_seed, {hash_name(name.c_str()), static_cast<std::uint64_t>(run)});
}

RunRecord run_single(const ExperimentConfig& config, Algorithm a, int run, int threads)
{
    RunRecord r;
    r.config = config;
    r.algorithm = a;
    r.run = run;
    r.seed = run_seed(config.master_seed, a, run);

    const EnvSpec env = make_env(config.environment, config.sigma);
    r.objectives = env.objectives;
    const PolicySpec policy{env.obs_dim, config.layers, env.action_dim};
    Evaluator evaluator(EvaluationContext{env, policy, config.n_episodes}, derive_seed(r.seed, {2}), threads);
    const auto pop_size = static_cast<std::size_t>(config.pop_size);
    auto optimizer = make_optimizer(a, config.params, env.objectives, pop_size, Rng(derive_seed(r.seed, {1})));

    Rng init_rng(derive_seed(r.seed, {0}));
    std::vector<Genome> genomes;
    genomes.reserve(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i)
        genomes.push_back(init_genome(policy, init_rng));

    const auto start = std::chrono::steady_clock::now();
    try {
        optimizer->initialize(evaluator(genomes));
        r.generations.push_back(optimizer->population());
        const auto callback = evaluator.callback();
        for (int g = 1; g < config.generations; ++g) {
            const auto before = evaluator.evaluations();
            optimizer->step(callback);
            if (evaluator.evaluations() - before != pop_size)
                throw std::logic_error(std::string(algorithm_name(a)) + " broke the per-generation evaluation budget");
            if (optimizer->population().size() != pop_size)
                throw std::logic_error(std::string(algorithm_name(a)) + " changed the population size");
            r.generations.push_back(optimizer->population());
        }
    } catch (const NonFiniteEvaluation& e) {
        r.aborted = true;
        r.abort_reason = e.what();
    }
    r.evaluations = evaluator.evaluations();
    r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config, int threads)
{
    std::vector<RunRecord> out;
    for (auto a : config.algorithms)
        for (int run = 0; run < config.n_runs; ++run)
            out.push_back(run_single(config, a, run, threads));
    return out;
}

void write_experiment(const std::vector<RunRecord>& records, const ExperimentConfig& config, const std::string& dir)
{
    std::error_code ec;
    fs::create_directories(fs::path(dir) / "runs", ec);
    if (ec)
        throw std::runtime_error("cannot create output directory '" + dir + "': " + ec.message());

    {
        std::ofstream cfg(fs::path(dir) / "config.txt", std::ios::binary | std::ios::trunc);
        if (!cfg)
            throw std::runtime_error("cannot write to '" + dir + "'");
        cfg << serialize_config(config);
    }
    std::ofstream timing(fs::path(dir) / "timing.csv", std::ios::binary | std::ios::trunc);
    timing << "algorithm,run,wall_time_seconds,evaluations,status\n";
    for (const auto& r : records) {
        write_run_record(r, (fs::path(dir) / "runs" / record_file_name(r.algorithm, r.run)).string());
        timing << algorithm_name(r.algorithm) << ',' << r.run << ',' << format_double(r.wall_time_seconds) << ','
               << r.evaluations << ',' << (r.aborted ? "aborted" : "ok") << '\n';
    }
}

std::vector<RunRecord> load_records(const std::string& dir)
{
    const fs::path runs = fs::path(dir) / "runs";
    if (!fs::is_directory(runs))
        throw std::runtime_error("no run records under '" + runs.string() + "'");
    std::vector<RunRecord> out;
    for (const auto& entry : fs::directory_iterator(runs))
        if (entry.is_regular_file() && entry.path().extension() == ".jsonl")
            out.push_back(read_run_record(entry.path().string()));
    if (out.empty())
        throw std::runtime_error("no run records under '" + runs.string() + "'");

    const auto& roster = out.front().config.algorithms;
    auto position = [&](Algorithm a) {
        return static_cast<std::size_t>(std::find(roster.begin(), roster.end(), a) - roster.begin());
    };
    std::sort(out.begin(), out.end(), [&](const RunRecord& x, const RunRecord& y) {
        const auto px = position(x.algorithm);
        const auto py = position(y.algorithm);
        return px != py ? px < py : x.run < y.run;
    });
    return out;
}

MetricsResult compute_metrics(const std::vector<RunRecord>& records)
{
    if (records.empty())
        throw std::invalid_argument("compute_metrics: no records");

    std::vector<PointSet> finals;
    std::vector<std::string> order;
    std::map<std::string, std::vector<PointSet>> by_algorithm;
    for (const auto& r : records) {
        const std::string name(algorithm_name(r.algorithm));
        if (std::find(order.begin(), order.end(), name) == order.end())
            order.push_back(name);
        if (r.aborted || r.generations.empty())
            continue;
        finals.push_back(objectives_of(r.generations.back()));
        by_algorithm[name].push_back(finals.back());
    }
    if (finals.empty())
        throw std::invalid_argument("compute_metrics: every run was aborted");

    MetricsResult out;
    out.reference = build_reference_front(finals);
    for (const auto& name : order)
        if (auto it = by_algorithm.find(name); it != by_algorithm.end())
            out.algorithm_fronts.push_back({name, build_reference_front(it->second)});

    for (const auto& r : records) {
        std::vector<PointSet> gens;
        gens.reserve(r.generations.size());
        for (const auto& pop : r.generations)
            gens.push_back(objectives_of(pop));
        const std::string name(algorithm_name(r.algorithm));
        const auto series = indicator_series(gens, out.reference, name, r.run);
        for (std::size_t g = 0; g < series.size(); ++g) {
            MetricRow row;
            row.algorithm = name;
            row.run = r.run;
            row.generation = series[g].generation;
            row.hv = series[g].hv;
            row.gd = series[g].gd;
            row.igd = series[g].igd;
            row.scalarized_best = r.generations[g][best_scalar_index(r.generations[g])].scalar_value;
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

namespace {

std::ofstream open_for_write(const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    if (!line.empty() && line.back() == sep)
        out.emplace_back();
    return out;
}

double to_double(const std::string& s, const std::string& where)
{
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::runtime_error(where + ": bad number '" + s + "'");
    return v;
}

constexpr const char* metrics_header = "algorithm,run,generation,hv,gd,igd,scalarized_best";

} // namespace

void write_metrics_csv(const std::vector<MetricRow>& rows, const std::string& path)
{
    auto out = open_for_write(path);
    out << metrics_header << '\n';
    for (const auto& r : rows)
        out << r.algorithm << ',' << r.run << ',' << r.generation << ',' << format_double(r.hv) << ','
            << format_double(r.gd) << ',' << format_double(r.igd) << ',' << format_double(r.scalarized_best) << '\n';
}

std::vector<MetricRow> read_metrics_csv(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != metrics_header)
        throw std::runtime_error(path + ": unexpected header");
    std::vector<MetricRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const auto f = split(line, ',');
        const std::string where = path + ":" + std::to_string(line_no);
        if (f.size() != 7)
            throw std::runtime_error(where + ": expected 7 fields");
        MetricRow r;
        r.algorithm = f[0];
        r.run = static_cast<int>(to_double(f[1], where));
        r.generation = static_cast<int>(to_double(f[2], where));
        r.hv = to_double(f[3], where);
        r.gd = to_double(f[4], where);
        r.igd = to_double(f[5], where);
        r.scalarized_best = to_double(f[6], where);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_fronts_csv(const MetricsResult& metrics, const std::string& path)
{
    auto out = open_for_write(path);
    out << "scope,algorithm";
    for (std::size_t j = 0; j < metrics.reference.objectives(); ++j)
        out << ",f" << j + 1;
    out << '\n';
    auto emit = [&](const char* scope, const std::string& algorithm, const FrontApproximation& front) {
        for (const auto& p : front.points()) {
            out << scope << ',' << algorithm;
            for (double x : p)
                out << ',' << format_double(x);
            out << '\n';
        }
    };
    emit("reference", "all", metrics.reference);
    for (const auto& f : metrics.algorithm_fronts)
        emit("algorithm", f.algorithm, f.front);
}

Metric parse_metric(const std::string& name)
{
    if (name == "hv")
        return Metric::hv;
    if (name == "gd")
        return Metric::gd;
    if (name == "igd")
        return Metric::igd;
    throw std::invalid_argument("unknown metric '" + name + "' (expected hv, gd or igd)");
}

std::string metric_name(Metric m)
{
    switch (m) {
    case Metric::hv:
        return "hv";
    case Metric::gd:
        return "gd";
    case Metric::igd:
        return "igd";
    }
    return "?";
}

stats::ScoreTable final_score_table(const std::vector<std::vector<MetricRow>>& problems, Metric metric,
                                    bool average_runs)
{
    if (problems.empty())
        throw std::invalid_argument("no metric tables given");
    stats::ScoreTable table;
    table.better = metric == Metric::hv ? stats::Direction::higher_better : stats::Direction::lower_better;

    auto value_of = [metric](const MetricRow& r) {
        switch (metric) {
        case Metric::hv:
            return r.hv;
        case Metric::gd:
            return r.gd;
        case Metric::igd:
            return r.igd;
        }
        return r.hv;
    };

    for (const auto& r : problems.front())
        if (std::find(table.algorithms.begin(), table.algorithms.end(), r.algorithm) == table.algorithms.end())
            table.algorithms.push_back(r.algorithm);

    for (std::size_t p = 0; p < problems.size(); ++p) {
        // final generation per (algorithm, run)
        std::map<std::pair<std::string, int>, const MetricRow*> last;
        for (const auto& r : problems[p]) {
            auto& slot = last[{r.algorithm, r.run}];
            if (!slot || r.generation > slot->generation)
                slot = &r;
        }
        std::vector<int> runs;
        for (const auto& [key, row] : last)
            if (std::find(runs.begin(), runs.end(), key.second) == runs.end())
                runs.push_back(key.second);
        std::sort(runs.begin(), runs.end());

        auto cell = [&](const std::string& alg, int run) {
            const auto it = last.find({alg, run});
            if (it == last.end())
                throw std::invalid_argument("problem " + std::to_string(p) + ": algorithm " + alg + " has no run " +
                                            std::to_string(run));
            return value_of(*it->second);
        };

        if (average_runs) {
            std::vector<double> row;
            for (const auto& alg : table.algorithms) {
                double s = 0.0;
                for (int run : runs)
                    s += cell(alg, run);
                row.push_back(s / static_cast<double>(runs.size()));
            }
            table.scores.push_back(std::move(row));
            table.datasets.push_back("problem" + std::to_string(p));
        } else {
            for (int run : runs) {
                std::vector<double> row;
                for (const auto& alg : table.algorithms)
                    row.push_back(cell(alg, run));
                table.scores.push_back(std::move(row));
                table.datasets.push_back("problem" + std::to_string(p) + "/run" + std::to_string(run));
            }
        }
    }
    table.validate();
    return table;
}

void write_cd_csv(const stats::CDResult& result, Metric metric, const std::string& path)
{
    const std::string header = "metric,algorithm,mean_rank,group_ids";
    const std::string name = metric_name(metric);
    std::vector<std::string> kept;
    if (std::ifstream in(path, std::ios::binary); in) {
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line))
            if (!line.empty() && line.rfind(name + ",", 0) != 0)
                kept.push_back(line);
    }
    auto out = open_for_write(path);
    out << header << '\n';
    for (const auto& line : kept)
        out << line << '\n';
    for (std::size_t a = 0; a < result.algorithms.size(); ++a) {
        out << name << ',' << result.algorithms[a] << ',' << format_double(result.mean_ranks[a]) << ',';
        bool first = true;
        for (std::size_t g = 0; g < result.groups.size(); ++g)
            if (std::find(result.groups[g].begin(), result.groups[g].end(), a) != result.groups[g].end()) {
                out << (first ? "" : ";") << g;
                first = false;
            }
        out << '\n';
    }
}

void write_curves_csv(const std::vector<MetricRow>& rows, const std::string& path)
{
    std::vector<std::string> order;
    std::map<std::pair<std::string, int>, std::vector<const MetricRow*>> cells;
    for (const auto& r : rows) {
        if (std::find(order.begin(), order.end(), r.algorithm) == order.end())
            order.push_back(r.algorithm);
        cells[{r.algorithm, r.generation}].push_back(&r);
    }

    auto out = open_for_write(path);
    out << "algorithm,generation,runs,hv_mean,hv_std,gd_mean,gd_std,igd_mean,igd_std,"
           "scalarized_best_mean,scalarized_best_std\n";
    auto moments = [](const std::vector<const MetricRow*>& v, double MetricRow::*field) {
        double mean = 0.0;
        for (auto* r : v)
            mean += r->*field;
        mean /= static_cast<double>(v.size());
        double ss = 0.0;
        for (auto* r : v)
            ss += (r->*field - mean) * (r->*field - mean);
        const double sd = v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1)) : 0.0;
        return std::pair{mean, sd};
    };
    for (const auto& alg : order) {
        for (auto it = cells.lower_bound({alg, std::numeric_limits<int>::min()});
             it != cells.end() && it->first.first == alg; ++it) {
            out << alg << ',' << it->first.second << ',' << it->second.size();
            for (auto field : {&MetricRow::hv, &MetricRow::gd, &MetricRow::igd, &MetricRow::scalarized_best}) {
                const auto [m, s] = moments(it->second, field);
                out << ',' << format_double(m) << ',' << format_double(s);
            }
            out << '\n';
        }
    }
}

} // namespace morl
