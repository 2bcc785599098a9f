#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperweight {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;

/**
 * An r-uniform hypergraph on the dense vertex set {0, ..., n-1}.
 *
 * Edges are stored flat, r vertices per edge. Construction normalizes the
 * input: every edge is sorted, the edge list is sorted lexicographically and
 * duplicates are rejected. Two hypergraphs built from the same edge sets in
 * any order therefore compare equal.
 */
class Hypergraph {
public:
    Hypergraph() = default;

    /// Throws std::invalid_argument when an edge has the wrong size, repeats a
    /// vertex, names a vertex >= n, or duplicates another edge.
    Hypergraph(std::size_t n, std::size_t r, std::vector<std::vector<Vertex>> edges);

    /// Same as the constructor, and reports where each input edge ended up in
    /// the canonical order: `positions[i]` is the canonical index of `edges[i]`.
    static Hypergraph normalize(std::size_t n, std::size_t r,
                                std::vector<std::vector<Vertex>> edges,
                                std::vector<EdgeIndex>& positions);

    std::size_t num_vertices() const { return n_; }
    std::size_t uniformity() const { return r_; }
    std::size_t num_edges() const { return r_ == 0 ? 0 : flat_.size() / r_; }

    std::span<const Vertex> edge(EdgeIndex e) const {
        return {flat_.data() + e * r_, r_};
    }

    bool edge_contains(EdgeIndex e, Vertex v) const;

    /// Canonical index of the edge with this vertex set (any order), if present.
    std::optional<EdgeIndex> find_edge(std::span<const Vertex> vertices) const;

    /// incidence()[v] lists the edges containing v in increasing index order.
    std::vector<std::vector<EdgeIndex>> incidence() const;

    // Optional diagnostic names, one per vertex. Empty when unused.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.flat_ == b.flat_;
    }

private:
    std::size_t n_ = 0;
    std::size_t r_ = 2;
    std::vector<Vertex> flat_;
    std::vector<std::string> labels_;
};

/// Entry v counts the edges containing v.
std::vector<std::size_t> degrees(const Hypergraph& h);

}  // namespace hyperweight
