#include "hyperweight/weighting/three_uniform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "hyperweight/random/sampler.hpp"
#include "hyperweight/weighting/matching.hpp"

namespace hyperweight {

namespace {

struct Attempt {
    const Hypergraph& h;
    const std::vector<std::vector<EdgeIndex>>& incidence;
    WeightAssignment w;
    std::vector<Color> color;
    std::map<Color, std::set<Vertex>> by_color;

    Attempt(const Hypergraph& graph, const std::vector<std::vector<EdgeIndex>>& inc,
            WeightAssignment weights)
        : h(graph), incidence(inc), w(std::move(weights)) {
        color = induced_coloring(h, w).colors;
        for (Vertex v = 0; v < color.size(); ++v) {
            by_color[color[v]].insert(v);
        }
    }

    Color delta(EdgeIndex e) const { return w.weights[e] == 2 ? -1 : 1; }

    // Flipping e leaves each of its vertices with a color nobody else has.
    bool safe(EdgeIndex e) const {
        const auto edge = h.edge(e);
        const Color d = delta(e);
        for (std::size_t i = 0; i < edge.size(); ++i) {
            const Color target = color[edge[i]] + d;
            for (std::size_t j = 0; j < i; ++j) {
                if (color[edge[j]] == color[edge[i]]) {
                    return false;
                }
            }
            const auto it = by_color.find(target);
            if (it == by_color.end()) {
                continue;
            }
            for (Vertex holder : it->second) {
                if (std::find(edge.begin(), edge.end(), holder) == edge.end()) {
                    return false;
                }
            }
        }
        return true;
    }

    void flip(EdgeIndex e) {
        const Color d = delta(e);
        w.weights[e] = 3 - w.weights[e];
        for (Vertex v : h.edge(e)) {
            auto it = by_color.find(color[v]);
            it->second.erase(v);
            if (it->second.empty()) {
                by_color.erase(it);
            }
            color[v] += d;
            by_color[color[v]].insert(v);
        }
    }
};

// Counts over colors sorted ascending: dangerous pairs, dangerous triples, bad pairs.
void count_danger(const std::vector<Color>& color, AttemptDiagnostics& diag,
                  std::vector<bool>& dangerous) {
    std::vector<Vertex> order(color.size());
    for (Vertex v = 0; v < order.size(); ++v) {
        order[v] = v;
    }
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return color[a] != color[b] ? color[a] < color[b] : a < b;
    });
    dangerous.assign(color.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t within = 0;
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (!is_dangerous_pair(color[order[i]], color[order[j]])) {
                break;
            }
            ++within;
            dangerous[order[i]] = dangerous[order[j]] = true;
            if (color[order[i]] == color[order[j]]) {
                ++diag.bad_pairs;
            }
        }
        diag.dangerous_pairs += within;
        if (within >= 2) {
            diag.dangerous_triples += within * (within - 1) / 2;
        }
    }
}

}  // namespace

std::pair<double, double> label_interval(std::size_t part) {
    if (part > 2) {
        throw std::out_of_range("part index must be 0, 1 or 2");
    }
    return {static_cast<double>(part) / 9.0, static_cast<double>(part + 1) / 9.0};
}

std::vector<std::size_t> equipartition_sizes(std::size_t n) {
    std::vector<std::size_t> sizes(3, n / 3);
    for (std::size_t i = 0; i < n % 3; ++i) {
        ++sizes[i];
    }
    return sizes;
}

ThreeUniformResult strong_weighting_3uniform(const Hypergraph& h, std::uint64_t seed,
                                             const ThreeUniformConfig& config) {
    if (h.uniformity() != 3) {
        throw std::invalid_argument("strong_weighting_3uniform needs r = 3");
    }
    if (!(config.gamma >= 0.0)) {
        throw std::invalid_argument("gamma must be non-negative");
    }
    const std::size_t n = h.num_vertices();
    const auto sizes = equipartition_sizes(n);
    std::vector<std::size_t> part_of(n);
    std::vector<std::vector<Vertex>> parts(3);
    {
        Vertex v = 0;
        for (std::size_t p = 0; p < 3; ++p) {
            for (std::size_t i = 0; i < sizes[p]; ++i, ++v) {
                part_of[v] = p;
                parts[p].push_back(v);
            }
        }
    }
    const std::size_t m = n / 3;
    const auto incidence = h.incidence();
    const std::size_t target =
        static_cast<std::size_t>(std::floor(config.gamma * static_cast<double>(n) * static_cast<double>(n)));

    ThreeUniformResult result;
    for (unsigned a = 0; a < config.max_retries; ++a) {
        AttemptDiagnostics diag;
        diag.attempt = a;
        diag.family_target = target;
        std::mt19937_64 rng(trial_seed(seed, a));
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        std::vector<Vertex> v1(parts[0].begin(), parts[0].begin() + m);
        std::vector<Vertex> v2(parts[1].begin(), parts[1].begin() + m);
        std::vector<Vertex> v3(parts[2].begin(), parts[2].begin() + m);
        std::shuffle(v3.begin(), v3.end(), rng);
        const MatchingFamily family = tripartite_matching_family(h, v1, v2, v3, target);
        diag.family_size = family.matchings.size();
        std::vector<bool> in_family(h.num_edges(), false);
        for (const auto& matching : family.matchings) {
            for (EdgeIndex e : matching) {
                in_family[e] = true;
            }
        }

        std::vector<double> label(n);
        for (Vertex v = 0; v < n; ++v) {
            const auto [lo, hi] = label_interval(part_of[v]);
            label[v] = lo + (hi - lo) * unit(rng);
        }
        WeightAssignment w = WeightAssignment::constant(h.num_edges(), 1, 2);
        for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
            const double u = unit(rng);
            double p = 0.5;
            if (!in_family[e]) {
                p = 0;
                for (Vertex v : h.edge(e)) {
                    p += label[v];
                }
            }
            w.weights[e] = u < p ? 2 : 1;
        }

        Attempt state(h, incidence, std::move(w));
        std::vector<bool> dangerous;
        count_danger(state.color, diag, dangerous);

        if (config.strict) {
            if (diag.dangerous_triples > 0) {
                diag.abort_cause = "dangerous triple present";
            } else {
                std::vector<bool> used(n, false);
                std::vector<EdgeIndex> repairs;
                for (const auto& [c, holders] : state.by_color) {
                    if (holders.size() < 2) {
                        continue;
                    }
                    const Vertex u = *holders.begin();
                    std::optional<EdgeIndex> chosen;
                    for (EdgeIndex e : incidence[u]) {
                        bool ok = true;
                        for (Vertex x : h.edge(e)) {
                            if (used[x] || (x != u && dangerous[x])) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok) {
                            chosen = e;
                            break;
                        }
                    }
                    if (!chosen) {
                        diag.abort_cause = "no eligible repair edge for vertex " + std::to_string(u);
                        break;
                    }
                    for (Vertex x : h.edge(*chosen)) {
                        used[x] = true;
                    }
                    repairs.push_back(*chosen);
                }
                if (diag.abort_cause.empty()) {
                    for (EdgeIndex e : repairs) {
                        state.flip(e);
                    }
                    diag.repairs = repairs.size();
                }
            }
        } else {
            std::vector<bool> used(n, false);
            while (diag.abort_cause.empty()) {
                auto it = std::find_if(state.by_color.begin(), state.by_color.end(),
                                       [](const auto& entry) { return entry.second.size() >= 2; });
                if (it == state.by_color.end()) {
                    break;
                }
                const Vertex u = *it->second.begin();
                const Vertex v = *std::next(it->second.begin());
                std::optional<EdgeIndex> chosen;
                bool fallback = false;
                for (EdgeIndex e : incidence[u]) {
                    bool eligible = true;
                    for (Vertex x : h.edge(e)) {
                        if (x != u && (dangerous[x] || used[x])) {
                            eligible = false;
                            break;
                        }
                    }
                    if (eligible && state.safe(e)) {
                        chosen = e;
                        break;
                    }
                }
                for (Vertex anchor : {u, v}) {
                    if (chosen) {
                        break;
                    }
                    for (EdgeIndex e : incidence[anchor]) {
                        if (state.safe(e)) {
                            chosen = e;
                            fallback = true;
                            break;
                        }
                    }
                }
                if (!chosen) {
                    diag.abort_cause = "no safe repair edge for pair (" + std::to_string(u) + ", " +
                                       std::to_string(v) + ")";
                    break;
                }
                for (Vertex x : h.edge(*chosen)) {
                    used[x] = true;
                }
                state.flip(*chosen);
                ++diag.repairs;
                if (fallback) {
                    ++diag.fallback_repairs;
                }
            }
        }

        if (diag.abort_cause.empty()) {
            const Verdict verdict = check_strong(h, state.w);
            if (verdict.ok()) {
                result.attempts.push_back(diag);
                result.assignment = std::move(state.w);
                return result;
            }
            diag.abort_cause = "verification failed";
        }
        result.attempts.push_back(diag);
    }
    result.failure = "no strong weighting after " + std::to_string(config.max_retries) + " attempts";
    return result;
}

}  // namespace hyperweight
