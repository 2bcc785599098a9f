#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperweight/core/coloring.hpp"
#include "hyperweight/core/hypergraph.hpp"

namespace hyperweight {

struct ThreeUniformConfig {
    double gamma = 0.1;
    unsigned max_retries = 50;  // total number of attempts
    // Strict: abort an attempt on any dangerous triple and repair each bad
    // pair once with disjoint edges avoiding all other dangerous vertices.
    // Default: repeat single safe flips until every color is unique.
    bool strict = false;
};

struct AttemptDiagnostics {
    unsigned attempt = 0;
    std::size_t family_size = 0;
    std::size_t family_target = 0;
    std::size_t dangerous_pairs = 0;
    std::size_t dangerous_triples = 0;  // windows of three colors spanning at most 4
    std::size_t bad_pairs = 0;
    std::size_t repairs = 0;
    std::size_t fallback_repairs = 0;   // repairs through edges outside the strict eligibility rule
    std::string abort_cause;            // empty on success
};

struct ThreeUniformResult {
    std::optional<WeightAssignment> assignment;
    std::vector<AttemptDiagnostics> attempts;
    std::string failure;  // empty on success

    bool ok() const { return assignment.has_value(); }
};

/// Colors a and b are dangerous when both lie within 2 of one integer, i.e. |a - b| <= 4.
inline bool is_dangerous_pair(Color a, Color b) {
    return (a > b ? a - b : b - a) <= 4;
}

/// Label interval of part i (0, 1, 2): [i/9, (i+1)/9].
std::pair<double, double> label_interval(std::size_t part);

/// Part sizes of the index-block equipartition of n vertices (differ by at most one).
std::vector<std::size_t> equipartition_sizes(std::size_t n);

/**
 * Strong {1,2}-weighting of a 3-uniform hypergraph by random labels.
 *
 * Each attempt splits the vertices into three index blocks, builds a family of
 * edge-disjoint transversal matchings of size up to floor(gamma n^2), draws a
 * label per vertex from its part's interval and weights every edge: matching
 * edges are 2 with probability 1/2, other edges with probability equal to the
 * label sum. Equal colors are then repaired by flipping edges one at a time.
 * Attempt a draws from trial_seed(seed, a). The returned weighting always
 * passes check_strong. Throws std::invalid_argument unless r = 3.
 */
ThreeUniformResult strong_weighting_3uniform(const Hypergraph& h, std::uint64_t seed,
                                             const ThreeUniformConfig& config = {});

}  // namespace hyperweight
