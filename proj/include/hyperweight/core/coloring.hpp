#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperweight/core/hypergraph.hpp"

namespace hyperweight {

using Weight = int;
using Color = std::int64_t;

/// Edge weights aligned with a hypergraph's canonical edge order, each in [1, w_max].
struct WeightAssignment {
    Weight w_max = 1;
    std::vector<Weight> weights;

    /// Throws std::invalid_argument if an entry leaves [1, w_max] or w_max < 1.
    void validate() const;

    static WeightAssignment constant(std::size_t edges, Weight value, Weight w_max);

    friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

struct VertexColoring {
    std::vector<Color> colors;
};

/// Raised when a weight assignment does not have one entry per edge.
class AlignmentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ViolationKind { NotRainbow, Monochromatic, TwinVertices };

std::string to_string(ViolationKind kind);

/**
 * Witness that a coloring or hypergraph fails a predicate. For NotRainbow and
 * Monochromatic, `edge` is the offending edge and (first, second) two of its
 * vertices with equal colors. For TwinVertices, (first, second) have the same
 * incident edge set.
 */
struct Violation {
    ViolationKind kind;
    std::optional<EdgeIndex> edge;
    Vertex first = 0;
    Vertex second = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a predicate: ok() when no violation was found.
struct Verdict {
    std::optional<Violation> violation;

    bool ok() const { return !violation.has_value(); }
};

VertexColoring induced_coloring(const Hypergraph& h, const WeightAssignment& w);

// Violations always cite the first offending edge in canonical order and the
// lexicographically first equal-colored pair inside it.
Verdict check_strong(const Hypergraph& h, const WeightAssignment& w);
Verdict check_weak(const Hypergraph& h, const WeightAssignment& w);

Verdict check_strong_coloring(const Hypergraph& h, const VertexColoring& c);
Verdict check_weak_coloring(const Hypergraph& h, const VertexColoring& c);

/// Two vertices are twins when they lie in exactly the same edges. Isolated
/// vertices share the empty edge set, so two of them are twins.
Verdict is_nice(const Hypergraph& h);

/// Strongly 1-weighted: no edge holds two vertices of equal degree.
Verdict is_strongly_1_weighted(const Hypergraph& h);

/// Weakly 1-weighted: no edge has all its vertices of equal degree.
Verdict is_weakly_1_weighted(const Hypergraph& h);

}  // namespace hyperweight
