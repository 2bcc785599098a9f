#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperweight/core/coloring.hpp"
#include "hyperweight/core/hypergraph.hpp"

namespace hyperweight {

enum class SearchMode { Strong, Weak };
enum class EdgeOrder { GreedyVertexCompletion, GivenOrder };

struct SearchConfig {
    std::uint64_t node_budget = 0;  // 0 = unlimited
    EdgeOrder edge_order = EdgeOrder::GreedyVertexCompletion;
    SearchMode mode = SearchMode::Strong;
};

enum class SolveStatus { Found, ExhaustedUnsat, BudgetExceeded };

std::string to_string(SolveStatus status);
std::string to_string(SearchMode mode);

struct SolveOutcome {
    SolveStatus status = SolveStatus::BudgetExceeded;
    std::optional<WeightAssignment> assignment;  // set iff status == Found
    std::uint64_t nodes_visited = 0;
};

/**
 * Order in which the search assigns edges.
 *
 * GreedyVertexCompletion repeatedly picks the vertex with the fewest
 * still-unordered incident edges (ties: lowest vertex index) and appends all
 * of its remaining edges in index order, so low-degree vertices become fully
 * assigned as early as possible. GivenOrder is the canonical edge order.
 */
std::vector<EdgeIndex> search_edge_order(const Hypergraph& h, EdgeOrder order);

/**
 * Decides whether h is strongly (or weakly) w-weighted by depth-first search
 * over weights 1..w per edge, tried in increasing order.
 *
 * A vertex is settled once all its edges are assigned. A branch is cut when
 * two settled vertices sharing an edge have equal colors (Strong) or when all
 * vertices of an edge are settled with one color (Weak). Every node counts one
 * weight placed on one edge. ExhaustedUnsat means the whole tree was refuted.
 * A Found assignment is re-verified with the core checker before returning.
 */
SolveOutcome solve(const Hypergraph& h, Weight w, const SearchConfig& cfg = {});

}  // namespace hyperweight
