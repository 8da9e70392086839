#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "morl/stats.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace morl::stats;

namespace {
ScoreTable table(std::vector<std::vector<double>> rows, Direction d = Direction::higher_better)
{
    ScoreTable t;
    for (std::size_t j = 0; j < rows.front().size(); ++j)
        t.algorithms.push_back("A" + std::to_string(j));
    for (std::size_t i = 0; i < rows.size(); ++i)
        t.datasets.push_back("d" + std::to_string(i));
    t.scores = std::move(rows);
    t.better = d;
    return t;
}

ScoreTable random_table(std::mt19937_64& gen, std::size_t n, std::size_t m)
{
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<std::vector<double>> rows(n, std::vector<double>(m));
    for (auto& r : rows)
        for (auto& x : r)
            x = u(gen);
    return table(rows);
}
} // namespace

TEST_CASE("rank rows")
{
    CHECK(rank_rows(table({{3, 2, 1}, {0, 0, 0}})) ==
          std::vector<std::vector<double>>{{1, 2, 3}, {2, 2, 2}});
    CHECK(rank_rows(table({{1, 1, 2}, {1, 2, 3}}))[0] == std::vector<double>{2.5, 2.5, 1});
    CHECK(rank_rows(table({{3, 2, 1}, {1, 2, 3}}, Direction::lower_better))[0] == std::vector<double>{3, 2, 1});

    std::mt19937_64 gen(1);
    const auto t = random_table(gen, 100, 6);
    auto flipped = t;
    flipped.better = Direction::lower_better;
    const auto r = rank_rows(t);
    const auto rf = rank_rows(flipped);
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(std::accumulate(r[i].begin(), r[i].end(), 0.0) == doctest::Approx(21.0));
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(rf[i][j] == doctest::Approx(7 - r[i][j]));
    }
    CHECK_THROWS_AS(table({{1, 2}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(table({{1, 2}, {1}}).validate(), std::invalid_argument);
}

TEST_CASE("Friedman")
{
    const auto consensus = table({{3, 2, 1}, {3, 2, 1}, {3, 2, 1}});
    const auto res = friedman(consensus);
    CHECK(res.statistic == 6.0);
    CHECK(res.p_value == doctest::Approx(std::exp(-3.0)).epsilon(1e-12)); // chi2(2) survival = e^{-x/2}
    CHECK(friedman(table({{1, 1, 1}, {2, 2, 2}})).statistic == 0.0);
    CHECK_THROWS_AS(friedman(table({{1, 2}, {2, 1}})), std::invalid_argument);

    std::mt19937_64 gen(2);
    for (int trial = 0; trial < 10; ++trial) {
        const auto t = random_table(gen, 10, 8);
        const auto ranks = rank_rows(t);
        double s = 0;
        for (std::size_t j = 0; j < 8; ++j) {
            double rj = 0;
            for (const auto& row : ranks)
                rj += row[j];
            rj /= 10.0;
            s += rj * rj;
        }
        const double expect = 12.0 * 10 / (8 * 9) * (s - 8 * 81 / 4.0);
        CHECK(friedman(t).statistic == doctest::Approx(expect).epsilon(1e-10));

        // strictly monotone per-row transform keeps the statistic
        auto cubed = t;
        for (auto& row : cubed.scores)
            for (auto& x : row)
                x = x * x * x + 5;
        CHECK(friedman(cubed).statistic == friedman(t).statistic);
    }
}

TEST_CASE("Nemenyi critical difference")
{
    CHECK(std::abs(nemenyi_cd(8, 10) - 3.320) < 1e-3);
    CHECK(nemenyi_cd(8, 10) == doctest::Approx(3.031 * std::sqrt(72.0 / 60.0)));
    CHECK(nemenyi_cd(2, 9) == doctest::Approx(1.960 / 3.0));
    CHECK(nemenyi_cd(5, 20) < nemenyi_cd(5, 10));
    const double q[] = {1.960, 2.343, 2.569, 2.728, 2.850, 2.949, 3.031, 3.102, 3.164};
    for (int m = 2; m <= 10; ++m)
        CHECK(nemenyi_q(m) == q[m - 2]);
    CHECK_THROWS_AS(nemenyi_cd(11, 10), std::invalid_argument);
    CHECK_THROWS_AS(nemenyi_q(4, 0.1), std::invalid_argument);
}

TEST_CASE("CD groups")
{
    using G = std::vector<std::vector<std::size_t>>;
    CHECK(cd_groups({1.0, 1.2, 1.4}, 1.0) == G{{0, 1, 2}});
    CHECK(cd_groups({1.0, 5.0}, 1.0) == G{{0}, {1}});
    CHECK(cd_groups({1.0, 1.5, 3.0}, 1.6) == G{{0, 1}, {1, 2}});
    CHECK(cd_groups({3.0, 1.0, 1.5}, 1.6) == G{{1, 2}, {2, 0}});

    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(1, 8);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> r(8);
        for (auto& x : r)
            x = u(gen);
        const auto groups = cd_groups(r, 1.5);
        std::vector<bool> covered(8, false);
        for (const auto& g : groups) {
            double lo = 1e9, hi = -1e9;
            for (auto i : g) {
                covered[i] = true;
                lo = std::min(lo, r[i]);
                hi = std::max(hi, r[i]);
            }
            CHECK(hi - lo <= 1.5);
        }
        for (bool c : covered)
            CHECK(c);
        for (std::size_t a = 0; a < groups.size(); ++a)
            for (std::size_t b = 0; b < groups.size(); ++b)
                if (a != b) {
                    const bool subset = std::all_of(groups[a].begin(), groups[a].end(), [&](std::size_t x) {
                        return std::find(groups[b].begin(), groups[b].end(), x) != groups[b].end();
                    });
                    CHECK_FALSE(subset);
                }
    }
}

TEST_CASE("full analysis")
{
    std::mt19937_64 gen(4);
    const auto t = random_table(gen, 10, 8);
    const auto res = critical_difference_analysis(t);
    CHECK(res.algorithms == t.algorithms);
    CHECK(std::accumulate(res.mean_ranks.begin(), res.mean_ranks.end(), 0.0) == doctest::Approx(36.0));
    CHECK(res.critical_difference == doctest::Approx(nemenyi_cd(8, 10)));
    CHECK(res.statistic == friedman(t).statistic);
    CHECK(res.p_value >= 0.0);
    CHECK(res.p_value <= 1.0);
}
