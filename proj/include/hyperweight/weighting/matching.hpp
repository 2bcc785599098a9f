#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "hyperweight/core/hypergraph.hpp"

namespace hyperweight {

/// Bipartite graph with left vertices 0..left-1 and right vertices 0..right-1.
struct BipartiteGraph {
    std::size_t left = 0;
    std::size_t right = 0;
    std::vector<std::vector<std::size_t>> adj;  // adj[l] lists right neighbours of l

    BipartiteGraph() = default;
    BipartiteGraph(std::size_t left_size, std::size_t right_size)
        : left(left_size), right(right_size), adj(left_size) {}

    /// Throws std::out_of_range for vertices outside their side.
    void add_edge(std::size_t l, std::size_t r);
    void remove_edge(std::size_t l, std::size_t r);
    std::size_t num_edges() const;
};

inline constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

struct BipartiteMatching {
    std::vector<std::size_t> mate_left;   // right partner or kUnmatched
    std::vector<std::size_t> mate_right;  // left partner or kUnmatched
    std::size_t size = 0;

    bool perfect() const { return size == mate_left.size() && size == mate_right.size(); }
};

/// Maximum matching by Hopcroft-Karp.
BipartiteMatching max_bipartite_matching(const BipartiteGraph& g);

/**
 * Repeatedly takes a perfect matching and deletes its edges, until `cap`
 * matchings are collected or none is left. Each returned entry maps left
 * vertex l to its right partner. Throws std::invalid_argument on unequal sides.
 */
std::vector<std::vector<std::size_t>> extract_disjoint_perfect_matchings(BipartiteGraph g,
                                                                         std::size_t cap);

/// Edge-disjoint matchings of a 3-uniform hypergraph, each edge meeting every part once.
struct MatchingFamily {
    std::vector<std::vector<EdgeIndex>> matchings;
    std::vector<std::size_t> coverage;  // per vertex, number of matchings covering it
};

/**
 * Splits V1 x V2 into the m round-robin matchings {(V1[j], V2[(j+i) mod m])}.
 * For slice i, pair j is joined to V3[k] when {V1[j], V2[(j+i) mod m], V3[k]}
 * is an edge of h; up to ceil(target / m) perfect matchings are extracted per
 * slice, never more than `target` overall. Throws std::invalid_argument if h
 * is not 3-uniform or the parts differ in size.
 */
MatchingFamily tripartite_matching_family(const Hypergraph& h, const std::vector<Vertex>& v1,
                                          const std::vector<Vertex>& v2,
                                          const std::vector<Vertex>& v3, std::size_t target);

}  // namespace hyperweight
