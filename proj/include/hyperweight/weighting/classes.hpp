#pragma once

#include <array>
#include <string>
#include <vector>

#include "hyperweight/core/hypergraph.hpp"

namespace hyperweight {

/**
 * Equal-degree classes of a hypergraph, split by size, plus the preconditions
 * of the two repair algorithms.
 *
 * Classes are maximal, so they are always pairwise vertex-disjoint; the flag is
 * kept for reporting. offset_quad_free means no class of size >= 3 with degree
 * d coexists with a vertex of degree d + 1. lower_offset_free means no class of
 * size >= 3 with degree d coexists with another class of degree d - 1; that
 * pattern is the one the r = 4 repair cannot route around. Each pair and
 * triple is sorted by vertex index and the lists are ordered by degree.
 */
struct CollisionClasses {
    std::vector<std::array<Vertex, 2>> pairs;
    std::vector<std::array<Vertex, 3>> triples;
    std::vector<std::vector<Vertex>> larger;  // classes of size >= 4
    std::vector<std::size_t> degrees;

    bool disjoint = true;
    bool no_quad = true;
    bool offset_quad_free = true;
    bool lower_offset_free = true;

    std::vector<std::string> r5_failures;  // empty iff repair_r_ge_5 may run
    std::vector<std::string> r4_failures;  // empty iff repair_r4 may run
    std::vector<std::string> notes;        // counts above the w.h.p. bounds, informational
};

CollisionClasses classify_collisions(const Hypergraph& h);

}  // namespace hyperweight
