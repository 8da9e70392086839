#pragma once

#include <string>
#include <vector>

namespace morl::stats {

enum class Direction { higher_better, lower_better };

/// n datasets (rows) by m algorithms (columns).
struct ScoreTable {
    std::vector<std::string> algorithms;
    std::vector<std::string> datasets;
    std::vector<std::vector<double>> scores;
    Direction better = Direction::higher_better;

    /// Throws unless n >= 2, m >= 2 and every row has m finite entries.
    void validate() const;
};

/// Rank 1 = best under the direction flag; ties share the average rank.
std::vector<std::vector<double>> rank_rows(const ScoreTable& table);

std::vector<double> mean_ranks(const std::vector<std::vector<double>>& ranks);

struct FriedmanResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Plain chi-square form
///   chi2_F = 12n / (m(m+1)) * (sum_j Rbar_j^2 - m(m+1)^2 / 4),
/// p-value from the chi-square distribution with m-1 degrees of freedom.
/// Requires m >= 3.
FriedmanResult friedman(const ScoreTable& table);

/// Two-tailed Nemenyi critical value q_alpha (studentized range / sqrt 2).
/// Only alpha = 0.05 and 2 <= m <= 10 are tabulated.
double nemenyi_q(int m, double alpha = 0.05);

/// CD = q_alpha(m) * sqrt(m(m+1) / (6n)).
double nemenyi_cd(int m, int n, double alpha = 0.05);

/// Maximal runs of algorithms (by ascending mean rank) whose extreme ranks
/// differ by at most cd. Indices refer to the input order of mean_ranks.
std::vector<std::vector<std::size_t>> cd_groups(const std::vector<double>& mean_ranks, double cd);

struct CDResult {
    std::vector<std::string> algorithms;
    std::vector<double> mean_ranks;
    double statistic = 0.0;
    double p_value = 1.0;
    double critical_difference = 0.0;
    std::vector<std::vector<std::size_t>> groups;
};

/// Friedman + Nemenyi on a score table.
CDResult critical_difference_analysis(const ScoreTable& table, double alpha = 0.05);

} // namespace morl::stats
