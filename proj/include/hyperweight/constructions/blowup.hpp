#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperweight/constructions/projective_plane.hpp"
#include "hyperweight/core/hypergraph.hpp"

namespace hyperweight {

/**
 * The flag hypergraph of a projective plane.
 *
 * Vertices 0..(q+1)(q^2+q+1)-1 are the incident pairs (point, line), numbered
 * by point and then by line. The point edge e(p) collects the q+1 flags of
 * point p, the line edge f(l) the q+1 flags of line l. After extend_blowup the
 * edges are padded with vertices from an extra set U and the r+1 edges inside
 * U are appended; the point/line edge indices follow the padded edges.
 */
struct BlowupHypergraph {
    std::size_t q = 0;
    Hypergraph graph;
    std::vector<std::pair<std::size_t, std::size_t>> flags;  // vertex -> (point, line)
    std::vector<EdgeIndex> point_edges;                      // E1, indexed by point
    std::vector<EdgeIndex> line_edges;                       // E2, indexed by line
    std::vector<Vertex> extension_vertices;                  // U, empty if not extended
    std::vector<EdgeIndex> extension_edges;                  // edges inside U

    /// Vertex of the flag (point, line); throws std::out_of_range if not incident.
    Vertex flag_vertex(std::size_t point, std::size_t line) const;
};

BlowupHypergraph blowup_hypergraph(const IncidenceStructure& plane);

/// Pads every edge with r-(q+1) vertices of U (|U| = r+1), round-robin by
/// edge index, and adds all r-subsets of U. Returns the input when r = q+1.
/// Throws std::invalid_argument when r < q+1.
BlowupHypergraph extend_blowup(const BlowupHypergraph& blowup, std::size_t r);

}  // namespace hyperweight
