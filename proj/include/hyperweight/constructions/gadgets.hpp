#pragma once

#include <cstddef>
#include <vector>

#include "hyperweight/core/hypergraph.hpp"

namespace hyperweight {

/// Largest uniformity accepted by the gadget builders (T has r! edges).
inline constexpr std::size_t kMaxGadgetUniformity = 8;

/// T: r parts with |V_i| = i, all r! transversal edges. The root (the single
/// vertex of V_1) is vertex 0, then V_2, V_3, ... in order.
Hypergraph gadget_T(std::size_t r);

struct RootedGadget {
    Hypergraph graph;
    Vertex root = 0;
};

/// T(k): k copies of T glued at their roots. Root first, then the non-root
/// vertices of each copy in copy order.
RootedGadget gadget_Tk(std::size_t r, std::size_t k);

/// Edges of T(k) with the given root and fresh non-root vertices numbered
/// consecutively from first_fresh. Used to graft gadgets into larger hypergraphs.
std::vector<std::vector<Vertex>> gadget_Tk_edges(std::size_t r, std::size_t k, Vertex root,
                                                 Vertex first_fresh);

/// Number of vertices of T(k), root included.
std::size_t gadget_Tk_vertex_count(std::size_t r, std::size_t k);

/**
 * Six-edge r-uniform hypergraph on x_1..x_r, y_1..y_r, z_1..z_r (vertices
 * 0..r-1, r..2r-1, 2r..3r-1): e_1 = X, e_2 = Y, e_3 = Z,
 * f_1 = {x_2..x_r, y_1}, f_2 = {y_2..y_r, z_1}, f_3 = {z_2..z_r, x_1}.
 * Any {1,2}-weighting gives two of e_1, e_2, e_3 the same weight, and the f
 * edge spanning those two parts is then monochromatic.
 */
Hypergraph weak_counterexample(std::size_t r);

}  // namespace hyperweight
