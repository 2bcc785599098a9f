#pragma once

#include <cstddef>
#include <vector>

#include "hyperweight/core/coloring.hpp"
#include "hyperweight/core/hypergraph.hpp"

namespace hyperweight {

/// A graph is a 2-uniform hypergraph.
using Graph = Hypergraph;

/// What one source edge {x, y} became in h(G).
struct DerivedEdge {
    EdgeIndex target_edge = 0;                       // {x, y, v_1, ..., v_{r-2}} in h(G)
    std::vector<Vertex> padding;                     // v_1 .. v_{r-2}
    std::vector<std::vector<EdgeIndex>> gadget_edges;  // per v_i, the edges of its T(2 i n)
};

/**
 * h(G) together with the bookkeeping needed to move weightings across it.
 *
 * Vertex numbering of h(G): the n source vertices keep their indices; then,
 * per source edge in canonical order and per i = 1..r-2, the padding vertex
 * v_i followed by the non-root vertices of its T(2 i n).
 */
struct ReductionMap {
    Graph source;
    Hypergraph target;
    std::size_t r = 3;
    std::vector<DerivedEdge> derived;  // indexed by source edge
};

/// Throws std::invalid_argument if r < 3 or the source is not a graph.
ReductionMap np_reduce(const Graph& g, std::size_t r);

/// Copies each source weight onto its derived edge and weights every gadget
/// edge 1. Throws std::invalid_argument unless omega_g is a {1,2}-weighting
/// whose induced coloring is proper on the source graph.
WeightAssignment lift_weighting(const ReductionMap& map, const WeightAssignment& omega_g);

/// Pulls back the derived-edge weights. Throws AlignmentError on size mismatch.
WeightAssignment restrict_weighting(const ReductionMap& map, const WeightAssignment& omega_h);

}  // namespace hyperweight
