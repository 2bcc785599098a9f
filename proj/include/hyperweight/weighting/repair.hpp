#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperweight/core/coloring.hpp"
#include "hyperweight/core/hypergraph.hpp"
#include "hyperweight/weighting/classes.hpp"

namespace hyperweight {

/// Either a checker-verified {1,2}-weighting or the reason none was produced.
struct RepairResult {
    std::optional<WeightAssignment> assignment;
    std::string failure;             // empty on success
    std::vector<EdgeIndex> flipped;  // repair edges set to weight 1, in choice order
    CollisionClasses classes;

    bool ok() const { return assignment.has_value(); }
};

/**
 * Strong 2-weighting for r >= 5 when equal degrees come only in pairs.
 *
 * Every edge starts at weight 2, so colors are twice the degrees. For each
 * pair {u, v} (u the lower index) the first edge through u whose other
 * vertices lie outside every class and outside earlier repair edges is set to
 * 1; u then drops by one and every other class vertex keeps its color.
 * Throws std::invalid_argument if r < 5.
 */
RepairResult repair_r_ge_5(const Hypergraph& h);

struct R4Options {
    // Also reject the degree pattern (d,d,d,d+1), the literal precondition of
    // the textbook argument, even though the downward repair never collides with it.
    bool literal_offset_rule = false;
};

/**
 * Strong 2-weighting for r = 4 with equal-degree pairs and triples.
 *
 * For a triple {x, y, z} two edges f, f' through x and one edge g through y
 * are lowered, so x drops by two and y by one; for a pair one edge through u
 * is lowered. Repair edges meet the classes only in their anchor and are
 * otherwise pairwise disjoint. x ends at color 2 deg(x) - 2, which a
 * class-free vertex of degree deg(x) - 1 would share, so g is routed through
 * that vertex; a whole class at that degree is rejected as "offset-quad
 * present". Triples are handled before pairs. Throws std::invalid_argument if
 * r != 4.
 */
RepairResult repair_r4(const Hypergraph& h, const R4Options& options = {});

}  // namespace hyperweight
