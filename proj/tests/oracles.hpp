#pragma once

// Independent reference implementations used only by the tests.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hyperweight/core/coloring.hpp"
#include "hyperweight/core/hypergraph.hpp"
#include "hyperweight/solver/solver.hpp"

namespace oracle {

using hyperweight::Hypergraph;
using hyperweight::SearchMode;
using hyperweight::Vertex;
using hyperweight::Weight;

/// Tries all w^m assignments. Returns the first satisfying one in odometer order.
std::optional<std::vector<Weight>> brute_force(const Hypergraph& h, Weight w, SearchMode mode);

/// Colors computed edge by edge, without the library's coloring routine.
std::vector<long long> colors(const Hypergraph& h, const std::vector<Weight>& weights);
bool rainbow_everywhere(const Hypergraph& h, const std::vector<Weight>& weights);
bool no_monochromatic_edge(const Hypergraph& h, const std::vector<Weight>& weights);

/// Maximum bipartite matching size by Kuhn's augmenting paths.
std::size_t kuhn_matching_size(std::size_t left, std::size_t right,
                               const std::vector<std::vector<std::size_t>>& adj);

/// E(X2) at p = 1/2 as C(n,2) C(2m,m) / 4^m evaluated with exact big integers.
long double exact_x2_bigint(std::size_t n, std::size_t r);

/// All graphs with 1..max_edges edges and no isolated vertices, one per isomorphism class.
std::vector<Hypergraph> small_graphs(std::size_t max_edges);

/// A random r-uniform hypergraph on n vertices with each r-set kept with probability p.
Hypergraph random_hypergraph(std::size_t n, std::size_t r, double p, std::mt19937_64& rng);

}  // namespace oracle
