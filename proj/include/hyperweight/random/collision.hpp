#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperweight/core/hypergraph.hpp"

namespace hyperweight {

/**
 * Degree-collision counts of a hypergraph.
 *
 * x2, x3, x4 count vertex pairs, triples and quadruples of one common degree.
 * x3_edges counts edges whose vertices all share a degree (only filled by the
 * Hypergraph overload). offset_quads counts quadruples with degrees
 * (d, d, d, d+1). Classes are the maximal equal-degree groups of size >= 2,
 * ordered by degree, each sorted by vertex index.
 */
struct CollisionStats {
    std::uint64_t x2 = 0;
    std::uint64_t x3 = 0;
    std::uint64_t x4 = 0;
    std::uint64_t x3_edges = 0;
    std::uint64_t offset_quads = 0;
    std::vector<std::vector<Vertex>> classes;
    std::vector<std::size_t> class_degrees;
    bool classes_disjoint = true;
};

CollisionStats collision_stats(std::span<const std::size_t> degrees);
CollisionStats collision_stats(const Hypergraph& h);

}  // namespace hyperweight
