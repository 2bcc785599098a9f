#include "hyperweight/solver/solver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace hyperweight {

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Found:
            return "Found";
        case SolveStatus::ExhaustedUnsat:
            return "ExhaustedUnsat";
        case SolveStatus::BudgetExceeded:
            return "BudgetExceeded";
    }
    return "Unknown";
}

std::string to_string(SearchMode mode) {
    return mode == SearchMode::Strong ? "strong" : "weak";
}

std::vector<EdgeIndex> search_edge_order(const Hypergraph& h, EdgeOrder order) {
    std::vector<EdgeIndex> result;
    result.reserve(h.num_edges());
    if (order == EdgeOrder::GivenOrder) {
        for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
            result.push_back(e);
        }
        return result;
    }

    auto inc = h.incidence();
    std::vector<std::size_t> remaining(h.num_vertices());
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        remaining[v] = inc[v].size();
        if (remaining[v] > 0) {
            queue.emplace(remaining[v], v);
        }
    }
    std::vector<bool> placed(h.num_edges(), false);
    while (!queue.empty()) {
        Vertex v = queue.begin()->second;
        queue.erase(queue.begin());
        for (EdgeIndex e : inc[v]) {
            if (placed[e]) {
                continue;
            }
            placed[e] = true;
            result.push_back(e);
            for (Vertex u : h.edge(e)) {
                if (u == v) {
                    continue;
                }
                queue.erase({remaining[u], u});
                if (--remaining[u] > 0) {
                    queue.emplace(remaining[u], u);
                }
            }
        }
        remaining[v] = 0;
    }
    return result;
}

namespace {

// Static pruning schedule: at each search depth, the vertex pairs (Strong)
// or edges (Weak) whose last vertex becomes settled at that depth.
struct Schedule {
    std::vector<std::vector<std::pair<Vertex, Vertex>>> pairs;
    std::vector<std::vector<EdgeIndex>> edges;
};

Schedule build_schedule(const Hypergraph& h, const std::vector<EdgeIndex>& order,
                        SearchMode mode) {
    const std::size_t m = order.size();
    std::vector<std::size_t> settle(h.num_vertices(), 0);
    for (std::size_t k = 0; k < m; ++k) {
        for (Vertex v : h.edge(order[k])) {
            settle[v] = k;
        }
    }
    Schedule s;
    if (mode == SearchMode::Strong) {
        s.pairs.resize(m);
        std::set<std::pair<Vertex, Vertex>> seen;
        for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
            auto ed = h.edge(e);
            for (std::size_t i = 0; i < ed.size(); ++i) {
                for (std::size_t j = i + 1; j < ed.size(); ++j) {
                    if (seen.emplace(ed[i], ed[j]).second) {
                        s.pairs[std::max(settle[ed[i]], settle[ed[j]])].emplace_back(ed[i], ed[j]);
                    }
                }
            }
        }
    } else {
        s.edges.resize(m);
        for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
            std::size_t last = 0;
            for (Vertex v : h.edge(e)) {
                last = std::max(last, settle[v]);
            }
            s.edges[last].push_back(e);
        }
    }
    return s;
}

}  // namespace

SolveOutcome solve(const Hypergraph& h, Weight w, const SearchConfig& cfg) {
    if (w < 1) {
        throw std::invalid_argument("weight bound must be at least 1");
    }
    const auto order = search_edge_order(h, cfg.edge_order);
    const auto schedule = build_schedule(h, order, cfg.mode);
    const std::size_t m = order.size();

    std::vector<Color> color(h.num_vertices(), 0);
    std::vector<Weight> choice(m, 0);

    auto consistent = [&](std::size_t pos) {
        if (cfg.mode == SearchMode::Strong) {
            for (auto [u, v] : schedule.pairs[pos]) {
                if (color[u] == color[v]) {
                    return false;
                }
            }
            return true;
        }
        for (EdgeIndex e : schedule.edges[pos]) {
            auto ed = h.edge(e);
            bool mono = std::all_of(ed.begin(), ed.end(),
                                    [&](Vertex v) { return color[v] == color[ed[0]]; });
            if (mono) {
                return false;
            }
        }
        return true;
    };
    auto shift = [&](EdgeIndex e, Weight delta) {
        for (Vertex v : h.edge(e)) {
            color[v] += delta;
        }
    };

    SolveOutcome out;
    std::size_t pos = 0;
    while (true) {
        if (pos == m) {
            WeightAssignment wa{w, std::vector<Weight>(m, 1)};
            for (std::size_t k = 0; k < m; ++k) {
                wa.weights[order[k]] = choice[k];
            }
            auto verdict = cfg.mode == SearchMode::Strong ? check_strong(h, wa) : check_weak(h, wa);
            if (!verdict.ok()) {
                throw std::logic_error("solver produced an assignment the checker rejects");
            }
            out.status = SolveStatus::Found;
            out.assignment = std::move(wa);
            return out;
        }
        const EdgeIndex e = order[pos];
        if (choice[pos] > 0) {
            shift(e, -choice[pos]);
        }
        if (choice[pos] == w) {
            choice[pos] = 0;
            if (pos == 0) {
                out.status = SolveStatus::ExhaustedUnsat;
                return out;
            }
            --pos;
            continue;
        }
        if (cfg.node_budget != 0 && out.nodes_visited == cfg.node_budget) {
            out.status = SolveStatus::BudgetExceeded;
            return out;
        }
        ++choice[pos];
        shift(e, choice[pos]);
        ++out.nodes_visited;
        if (consistent(pos)) {
            ++pos;
        }
    }
}

}  // namespace hyperweight
