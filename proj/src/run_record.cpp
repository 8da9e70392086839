#include "morl/run_record.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace morl {

using nlohmann::json;

std::string record_file_name(Algorithm a, int run)
{
    return std::string(algorithm_name(a)) + "_run" + std::to_string(run) + ".jsonl";
}

void write_run_record(const RunRecord& r, const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write run record '" + path + "'");

    json header = {
        {"type", "header"},
        {"algorithm", std::string(algorithm_name(r.algorithm))},
        {"run", r.run},
        {"seed", r.seed},
        {"objectives", r.objectives},
        {"evaluations", r.evaluations},
        {"status", r.aborted ? "aborted" : "ok"},
        {"abort_reason", r.abort_reason},
        {"generations", r.generations.size()},
        {"config", serialize_config(r.config)},
    };
    out << header.dump() << '\n';

    for (std::size_t g = 0; g < r.generations.size(); ++g) {
        json genomes = json::array();
        json returns = json::array();
        json scalars = json::array();
        json episodes = json::array();
        for (const auto& ind : r.generations[g]) {
            genomes.push_back(ind.genome);
            returns.push_back(ind.mean_return);
            scalars.push_back(ind.scalar_value);
            episodes.push_back(ind.n_episodes);
        }
        json line = {
            {"type", "generation"},    {"generation", g},         {"genomes", std::move(genomes)},
            {"mean_returns", returns}, {"scalar_values", scalars}, {"n_episodes", episodes},
        };
        out << line.dump() << '\n';
    }
    if (!out)
        throw std::runtime_error("failed writing run record '" + path + "'");
}

RunRecord read_run_record(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read run record '" + path + "'");
    RunRecord r;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    try {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty())
                continue;
            const json j = json::parse(line);
            const auto type = j.at("type").get<std::string>();
            if (type == "header") {
                const auto name = j.at("algorithm").get<std::string>();
                const auto a = parse_algorithm(name);
                if (!a)
                    throw std::runtime_error("unknown algorithm '" + name + "'");
                r.algorithm = *a;
                r.run = j.at("run").get<int>();
                r.seed = j.at("seed").get<std::uint64_t>();
                r.objectives = j.at("objectives").get<int>();
                r.evaluations = j.at("evaluations").get<std::size_t>();
                r.aborted = j.at("status").get<std::string>() == "aborted";
                r.abort_reason = j.at("abort_reason").get<std::string>();
                r.config = parse_config(j.at("config").get<std::string>());
                have_header = true;
            } else if (type == "generation") {
                if (!have_header)
                    throw std::runtime_error("generation line before header");
                const auto& genomes = j.at("genomes");
                const auto& returns = j.at("mean_returns");
                const auto& scalars = j.at("scalar_values");
                const auto& episodes = j.at("n_episodes");
                Population pop(genomes.size());
                for (std::size_t i = 0; i < pop.size(); ++i) {
                    pop[i].genome = genomes[i].get<Genome>();
                    pop[i].mean_return = returns[i].get<ObjectiveVector>();
                    pop[i].scalar_value = scalars[i].get<double>();
                    pop[i].n_episodes = episodes[i].get<int>();
                }
                r.generations.push_back(std::move(pop));
            } else {
                throw std::runtime_error("unknown line type '" + type + "'");
            }
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!have_header)
        throw std::runtime_error(path + ": missing header line");
    return r;
}

} // namespace morl
