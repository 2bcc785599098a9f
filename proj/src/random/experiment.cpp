#include "hyperweight/random/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "hyperweight/random/collision.hpp"
#include "hyperweight/random/sampler.hpp"

namespace hyperweight {

namespace {

struct StatisticInfo {
    Statistic statistic;
    const char* name;
    bool indicator;
};

constexpr StatisticInfo kStatistics[] = {
    {Statistic::EdgeCount, "edges", false},
    {Statistic::X2, "x2", false},
    {Statistic::X3, "x3", false},
    {Statistic::X4, "x4", false},
    {Statistic::X3Edges, "x3_edges", false},
    {Statistic::X2Zero, "x2_zero", true},
    {Statistic::X3Zero, "x3_zero", true},
    {Statistic::OffsetQuadFree, "offset_quad_free", true},
    {Statistic::Strong1, "strong1", true},
    {Statistic::Weak1, "weak1", true},
    {Statistic::PairsCovered, "pairs_covered", true},
};

const StatisticInfo& info(Statistic s) {
    for (const auto& i : kStatistics) {
        if (i.statistic == s) {
            return i;
        }
    }
    throw std::logic_error("unknown statistic");
}

bool needs_edges(Statistic s) {
    return s == Statistic::X3Edges || s == Statistic::Strong1 || s == Statistic::Weak1 ||
           s == Statistic::PairsCovered;
}

// One trial: values for every requested statistic, in request order.
std::vector<double> run_trial(const ExperimentConfig& cfg, std::uint64_t trial) {
    const auto deg = sample_degrees(cfg.n, cfg.r, cfg.p, cfg.seed, trial);
    const CollisionStats stats = collision_stats(std::span<const std::size_t>(deg));

    const bool want_edges = std::any_of(cfg.statistics.begin(), cfg.statistics.end(), needs_edges);
    bool strong1 = true;
    bool weak1 = true;
    std::uint64_t x3_edges = 0;
    bool covered = true;
    if (want_edges) {
        const bool want_pairs = std::find(cfg.statistics.begin(), cfg.statistics.end(),
                                          Statistic::PairsCovered) != cfg.statistics.end();
        std::vector<char> pair_seen(want_pairs ? cfg.n * cfg.n : 0, 0);
        for_each_sampled_edge(cfg.n, cfg.r, cfg.p, cfg.seed, trial, [&](std::span<const Vertex> e) {
            bool all_equal = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (deg[e[i]] != deg[e[0]]) {
                    all_equal = false;
                }
                for (std::size_t j = i + 1; j < e.size(); ++j) {
                    if (deg[e[i]] == deg[e[j]]) {
                        strong1 = false;
                    }
                    if (want_pairs) {
                        pair_seen[e[i] * cfg.n + e[j]] = 1;
                    }
                }
            }
            if (all_equal) {
                weak1 = false;
                ++x3_edges;
            }
        });
        if (want_pairs) {
            for (std::size_t u = 0; u < cfg.n && covered; ++u) {
                for (std::size_t v = u + 1; v < cfg.n; ++v) {
                    if (!pair_seen[u * cfg.n + v]) {
                        covered = false;
                        break;
                    }
                }
            }
        }
    }

    std::uint64_t edge_count = 0;
    for (std::size_t d : deg) {
        edge_count += d;
    }
    edge_count /= cfg.r;

    std::vector<double> out;
    out.reserve(cfg.statistics.size());
    for (Statistic s : cfg.statistics) {
        switch (s) {
            case Statistic::EdgeCount: out.push_back(static_cast<double>(edge_count)); break;
            case Statistic::X2: out.push_back(static_cast<double>(stats.x2)); break;
            case Statistic::X3: out.push_back(static_cast<double>(stats.x3)); break;
            case Statistic::X4: out.push_back(static_cast<double>(stats.x4)); break;
            case Statistic::X3Edges: out.push_back(static_cast<double>(x3_edges)); break;
            case Statistic::X2Zero: out.push_back(stats.x2 == 0 ? 1 : 0); break;
            case Statistic::X3Zero: out.push_back(stats.x3 == 0 ? 1 : 0); break;
            case Statistic::OffsetQuadFree: out.push_back(stats.offset_quads == 0 ? 1 : 0); break;
            case Statistic::Strong1: out.push_back(strong1 ? 1 : 0); break;
            case Statistic::Weak1: out.push_back(weak1 ? 1 : 0); break;
            case Statistic::PairsCovered: out.push_back(covered ? 1 : 0); break;
        }
    }
    return out;
}

}  // namespace

std::string to_string(Statistic s) {
    return info(s).name;
}

std::optional<Statistic> parse_statistic(const std::string& name) {
    for (const auto& i : kStatistics) {
        if (name == i.name) {
            return i.statistic;
        }
    }
    return std::nullopt;
}

bool is_indicator(Statistic s) {
    return info(s).indicator;
}

const std::vector<Statistic>& all_statistics() {
    static const std::vector<Statistic> all = [] {
        std::vector<Statistic> v;
        for (const auto& i : kStatistics) {
            v.push_back(i.statistic);
        }
        return v;
    }();
    return all;
}

const StatisticSummary& ExperimentReport::get(Statistic s) const {
    for (const auto& summary : summaries) {
        if (summary.statistic == s) {
            return summary;
        }
    }
    throw std::out_of_range("statistic " + to_string(s) + " not in report");
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    if (config.trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    validate_sampling(config.n, config.r, config.p);
    const auto start = std::chrono::steady_clock::now();

    const std::size_t k = config.statistics.size();
    std::vector<double> values(config.trials * k);
    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs,
                                   static_cast<unsigned>(std::min<std::uint64_t>(config.trials, 1024))));
    auto worker = [&](unsigned id) {
        for (std::uint64_t t = id; t < config.trials; t += jobs) {
            const auto row = run_trial(config, t);
            std::copy(row.begin(), row.end(), values.begin() + static_cast<std::ptrdiff_t>(t * k));
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned id = 0; id < jobs; ++id) {
            threads.emplace_back(worker, id);
        }
        for (auto& th : threads) {
            th.join();
        }
    }

    ExperimentReport report;
    report.config = config;
    const double count = static_cast<double>(config.trials);
    for (std::size_t s = 0; s < k; ++s) {
        StatisticSummary sum;
        sum.statistic = config.statistics[s];
        sum.indicator = is_indicator(sum.statistic);
        sum.values.reserve(config.trials);
        double total = 0;
        for (std::uint64_t t = 0; t < config.trials; ++t) {
            sum.values.push_back(values[t * k + s]);
            total += values[t * k + s];
        }
        sum.mean = total / count;
        double sq = 0;
        for (double v : sum.values) {
            sq += (v - sum.mean) * (v - sum.mean);
        }
        sum.variance = config.trials > 1 ? sq / (count - 1) : 0;
        sum.std_error = std::sqrt(sum.variance / count);
        report.summaries.push_back(std::move(sum));
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace hyperweight
