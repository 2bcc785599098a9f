#include "hyperweight/core/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyperweight {

namespace {

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Hypergraph Hypergraph::normalize(std::size_t n, std::size_t r,
                                 std::vector<std::vector<Vertex>> edges,
                                 std::vector<EdgeIndex>& positions) {
    if (r < 2) {
        throw std::invalid_argument("uniformity must be at least 2");
    }
    if (n > std::size_t{UINT32_MAX}) {
        throw std::invalid_argument("too many vertices");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto& e = edges[i];
        if (e.size() != r) {
            throw std::invalid_argument("edge " + std::to_string(i) + " has " +
                                        std::to_string(e.size()) + " vertices, expected " +
                                        std::to_string(r));
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw std::invalid_argument("edge " + std::to_string(i) + " repeats a vertex");
        }
        if (e.back() >= n) {
            throw std::invalid_argument("edge " + std::to_string(i) + " names vertex " +
                                        std::to_string(e.back()) + " but n = " +
                                        std::to_string(n));
        }
    }

    std::vector<EdgeIndex> order(edges.size());
    std::iota(order.begin(), order.end(), EdgeIndex{0});
    std::sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
        return edges[a] < edges[b];
    });

    Hypergraph h;
    h.n_ = n;
    h.r_ = r;
    h.flat_.reserve(edges.size() * r);
    positions.assign(edges.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k > 0 && edges[order[k]] == edges[order[k - 1]]) {
            throw std::invalid_argument("duplicate edge (input edges " +
                                        std::to_string(order[k - 1]) + " and " +
                                        std::to_string(order[k]) + ")");
        }
        positions[order[k]] = k;
        h.flat_.insert(h.flat_.end(), edges[order[k]].begin(), edges[order[k]].end());
    }
    return h;
}

Hypergraph::Hypergraph(std::size_t n, std::size_t r, std::vector<std::vector<Vertex>> edges) {
    std::vector<EdgeIndex> positions;
    *this = normalize(n, r, std::move(edges), positions);
}

bool Hypergraph::edge_contains(EdgeIndex e, Vertex v) const {
    auto ed = edge(e);
    return std::binary_search(ed.begin(), ed.end(), v);
}

std::optional<EdgeIndex> Hypergraph::find_edge(std::span<const Vertex> vertices) const {
    if (vertices.size() != r_) {
        return std::nullopt;
    }
    std::vector<Vertex> key(vertices.begin(), vertices.end());
    std::sort(key.begin(), key.end());
    std::size_t lo = 0;
    std::size_t hi = num_edges();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (lex_less(edge(mid), key)) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < num_edges() && std::ranges::equal(edge(lo), key)) {
        return lo;
    }
    return std::nullopt;
}

std::vector<std::vector<EdgeIndex>> Hypergraph::incidence() const {
    std::vector<std::vector<EdgeIndex>> inc(n_);
    for (EdgeIndex e = 0; e < num_edges(); ++e) {
        for (Vertex v : edge(e)) {
            inc[v].push_back(e);
        }
    }
    return inc;
}

void Hypergraph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_) {
        throw std::invalid_argument("label table size does not match vertex count");
    }
    labels_ = std::move(labels);
}

std::vector<std::size_t> degrees(const Hypergraph& h) {
    std::vector<std::size_t> deg(h.num_vertices(), 0);
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
        for (Vertex v : h.edge(e)) {
            ++deg[v];
        }
    }
    return deg;
}

}  // namespace hyperweight
