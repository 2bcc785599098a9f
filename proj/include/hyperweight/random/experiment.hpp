#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperweight {

/// Per-trial quantities an experiment can record. Indicators take values 0 or 1.
enum class Statistic {
    EdgeCount,
    X2,
    X3,
    X4,
    X3Edges,
    X2Zero,
    X3Zero,
    OffsetQuadFree,
    Strong1,
    Weak1,
    PairsCovered,
};

std::string to_string(Statistic s);
std::optional<Statistic> parse_statistic(const std::string& name);
bool is_indicator(Statistic s);
const std::vector<Statistic>& all_statistics();

struct ExperimentConfig {
    std::size_t n = 0;
    std::size_t r = 0;
    double p = 0.5;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::vector<Statistic> statistics;
    unsigned jobs = 1;
};

struct StatisticSummary {
    Statistic statistic = Statistic::X2;
    double mean = 0;
    double variance = 0;    // sample variance, 0 for a single trial
    double std_error = 0;   // sqrt(variance / trials)
    bool indicator = false; // mean is then a frequency
    std::vector<double> values;  // one per trial, in trial order
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<StatisticSummary> summaries;  // in config.statistics order
    double wall_ms = 0;

    /// Throws std::out_of_range if the statistic was not requested.
    const StatisticSummary& get(Statistic s) const;
};

/**
 * Samples config.trials independent copies of H^(r)(n, p), trial t drawn from
 * trial_seed(seed, t), and records the requested statistics. Degree-only
 * statistics never materialize the edges; edge statistics replay the same
 * stream. With jobs > 1 trials are spread over threads; the report does not
 * depend on jobs.
 */
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace hyperweight
