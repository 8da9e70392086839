#include "morl/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace morl::stats {

void ScoreTable::validate() const
{
    const auto m = algorithms.size();
    if (m < 2)
        throw std::invalid_argument("score table needs at least 2 algorithms");
    if (scores.size() < 2)
        throw std::invalid_argument("score table needs at least 2 datasets");
    if (!datasets.empty() && datasets.size() != scores.size())
        throw std::invalid_argument("score table dataset labels do not match rows");
    for (const auto& row : scores) {
        if (row.size() != m)
            throw std::invalid_argument("score table has a missing cell");
        for (double x : row)
            if (!std::isfinite(x))
                throw std::invalid_argument("score table has a non-finite cell");
    }
}

std::vector<std::vector<double>> rank_rows(const ScoreTable& table)
{
    table.validate();
    const std::size_t m = table.algorithms.size();
    const bool higher = table.better == Direction::higher_better;
    std::vector<std::vector<double>> ranks;
    ranks.reserve(table.scores.size());
    std::vector<std::size_t> order(m);
    for (const auto& row : table.scores) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return higher ? row[a] > row[b] : row[a] < row[b]; });
        std::vector<double> r(m);
        for (std::size_t s = 0; s < m;) {
            std::size_t e = s + 1;
            while (e < m && row[order[e]] == row[order[s]])
                ++e;
            const double avg = (static_cast<double>(s + 1) + static_cast<double>(e)) / 2.0;
            for (std::size_t t = s; t < e; ++t)
                r[order[t]] = avg;
            s = e;
        }
        ranks.push_back(std::move(r));
    }
    return ranks;
}

std::vector<double> mean_ranks(const std::vector<std::vector<double>>& ranks)
{
    if (ranks.empty())
        return {};
    std::vector<double> out(ranks.front().size(), 0.0);
    for (const auto& row : ranks)
        for (std::size_t j = 0; j < row.size(); ++j)
            out[j] += row[j];
    for (auto& x : out)
        x /= static_cast<double>(ranks.size());
    return out;
}

FriedmanResult friedman(const ScoreTable& table)
{
    const auto ranks = rank_rows(table);
    const double m = static_cast<double>(table.algorithms.size());
    const double n = static_cast<double>(table.scores.size());
    if (table.algorithms.size() < 3)
        throw std::invalid_argument("Friedman chi-square approximation needs at least 3 algorithms");
    const auto rbar = mean_ranks(ranks);
    double sum_sq = 0.0;
    for (double r : rbar)
        sum_sq += r * r;
    FriedmanResult out;
    out.statistic = 12.0 * n / (m * (m + 1.0)) * (sum_sq - m * (m + 1.0) * (m + 1.0) / 4.0);
    if (out.statistic < 0.0 && out.statistic > -1e-9)
        out.statistic = 0.0;
    const boost::math::chi_squared dist(m - 1.0);
    out.p_value = boost::math::cdf(boost::math::complement(dist, std::max(0.0, out.statistic)));
    return out;
}

double nemenyi_q(int m, double alpha)
{
    // q_0.05 for m = 2..10 (studentized range at infinite df divided by sqrt 2).
    static constexpr std::array<double, 9> q05{1.960, 2.343, 2.569, 2.728, 2.850, 2.949, 3.031, 3.102, 3.164};
    if (alpha != 0.05)
        throw std::invalid_argument("only alpha = 0.05 is tabulated for the Nemenyi test");
    if (m < 2 || m > 10)
        throw std::invalid_argument("Nemenyi critical values are tabulated for 2..10 algorithms");
    return q05[static_cast<std::size_t>(m - 2)];
}

double nemenyi_cd(int m, int n, double alpha)
{
    if (n < 1)
        throw std::invalid_argument("Nemenyi CD needs n >= 1");
    return nemenyi_q(m, alpha) * std::sqrt(static_cast<double>(m) * (m + 1) / (6.0 * n));
}

std::vector<std::vector<std::size_t>> cd_groups(const std::vector<double>& mean_ranks, double cd)
{
    const std::size_t m = mean_ranks.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return mean_ranks[a] < mean_ranks[b]; });

    std::vector<std::vector<std::size_t>> groups;
    std::size_t last_end = 0; // exclusive end of the previous emitted window
    for (std::size_t s = 0; s < m; ++s) {
        std::size_t e = s + 1;
        while (e < m && mean_ranks[order[e]] - mean_ranks[order[s]] <= cd)
            ++e;
        if (e > last_end) {
            groups.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(s),
                                order.begin() + static_cast<std::ptrdiff_t>(e));
            last_end = e;
        }
    }
    return groups;
}

CDResult critical_difference_analysis(const ScoreTable& table, double alpha)
{
    CDResult out;
    out.algorithms = table.algorithms;
    out.mean_ranks = mean_ranks(rank_rows(table));
    const auto f = friedman(table);
    out.statistic = f.statistic;
    out.p_value = f.p_value;
    out.critical_difference =
        nemenyi_cd(static_cast<int>(table.algorithms.size()), static_cast<int>(table.scores.size()), alpha);
    out.groups = cd_groups(out.mean_ranks, out.critical_difference);
    return out;
}

} // namespace morl::stats
