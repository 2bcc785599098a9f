#include "hyperweight/weighting/matching.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>

namespace hyperweight {

void BipartiteGraph::add_edge(std::size_t l, std::size_t r) {
    if (l >= left || r >= right) {
        throw std::out_of_range("bipartite edge endpoint out of range");
    }
    adj[l].push_back(r);
}

void BipartiteGraph::remove_edge(std::size_t l, std::size_t r) {
    if (l >= left) {
        throw std::out_of_range("bipartite edge endpoint out of range");
    }
    auto& list = adj[l];
    list.erase(std::remove(list.begin(), list.end(), r), list.end());
}

std::size_t BipartiteGraph::num_edges() const {
    std::size_t total = 0;
    for (const auto& list : adj) {
        total += list.size();
    }
    return total;
}

BipartiteMatching max_bipartite_matching(const BipartiteGraph& g) {
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    BipartiteMatching m;
    m.mate_left.assign(g.left, kUnmatched);
    m.mate_right.assign(g.right, kUnmatched);
    std::vector<std::size_t> dist(g.left);

    // Layers from the free left vertices; true when some free right vertex is reachable.
    auto bfs = [&]() {
        std::queue<std::size_t> queue;
        for (std::size_t l = 0; l < g.left; ++l) {
            if (m.mate_left[l] == kUnmatched) {
                dist[l] = 0;
                queue.push(l);
            } else {
                dist[l] = kInf;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            const std::size_t l = queue.front();
            queue.pop();
            for (std::size_t r : g.adj[l]) {
                const std::size_t next = m.mate_right[r];
                if (next == kUnmatched) {
                    found = true;
                } else if (dist[next] == kInf) {
                    dist[next] = dist[l] + 1;
                    queue.push(next);
                }
            }
        }
        return found;
    };

    // Layered DFS; a vertex that fails is removed from the layering.
    std::vector<std::size_t> cursor(g.left);
    auto augment = [&](auto&& self, std::size_t l) -> bool {
        for (; cursor[l] < g.adj[l].size(); ++cursor[l]) {
            const std::size_t r = g.adj[l][cursor[l]];
            const std::size_t next = m.mate_right[r];
            if (next == kUnmatched || (dist[next] == dist[l] + 1 && self(self, next))) {
                m.mate_left[l] = r;
                m.mate_right[r] = l;
                return true;
            }
        }
        dist[l] = kInf;
        return false;
    };

    while (bfs()) {
        std::fill(cursor.begin(), cursor.end(), 0);
        for (std::size_t l = 0; l < g.left; ++l) {
            if (m.mate_left[l] == kUnmatched && augment(augment, l)) {
                ++m.size;
            }
        }
    }
    return m;
}

std::vector<std::vector<std::size_t>> extract_disjoint_perfect_matchings(BipartiteGraph g,
                                                                         std::size_t cap) {
    if (g.left != g.right) {
        throw std::invalid_argument("perfect matchings need equal sides");
    }
    std::vector<std::vector<std::size_t>> out;
    while (out.size() < cap) {
        const BipartiteMatching m = max_bipartite_matching(g);
        if (!m.perfect()) {
            break;
        }
        for (std::size_t l = 0; l < g.left; ++l) {
            g.remove_edge(l, m.mate_left[l]);
        }
        out.push_back(m.mate_left);
    }
    return out;
}

MatchingFamily tripartite_matching_family(const Hypergraph& h, const std::vector<Vertex>& v1,
                                          const std::vector<Vertex>& v2,
                                          const std::vector<Vertex>& v3, std::size_t target) {
    if (h.uniformity() != 3) {
        throw std::invalid_argument("matching family needs a 3-uniform hypergraph");
    }
    if (v1.size() != v2.size() || v2.size() != v3.size()) {
        throw std::invalid_argument("matching family needs parts of equal size");
    }
    MatchingFamily family;
    family.coverage.assign(h.num_vertices(), 0);
    const std::size_t m = v1.size();
    if (m == 0 || target == 0) {
        return family;
    }
    const std::size_t per_slice = (target + m - 1) / m;
    for (std::size_t i = 0; i < m && family.matchings.size() < target; ++i) {
        BipartiteGraph g(m, m);
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                const std::array<Vertex, 3> e{v1[j], v2[(j + i) % m], v3[k]};
                if (h.find_edge(e)) {
                    g.add_edge(j, k);
                }
            }
        }
        const std::size_t cap = std::min(per_slice, target - family.matchings.size());
        for (const auto& mate : extract_disjoint_perfect_matchings(std::move(g), cap)) {
            std::vector<EdgeIndex> matching;
            for (std::size_t j = 0; j < m; ++j) {
                const std::array<Vertex, 3> e{v1[j], v2[(j + i) % m], v3[mate[j]]};
                matching.push_back(*h.find_edge(e));
                for (Vertex v : e) {
                    ++family.coverage[v];
                }
            }
            family.matchings.push_back(std::move(matching));
        }
    }
    return family;
}

}  // namespace hyperweight
