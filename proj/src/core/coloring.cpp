#include "hyperweight/core/coloring.hpp"

#include <algorithm>
#include <map>

namespace hyperweight {

void WeightAssignment::validate() const {
    if (w_max < 1) {
        throw std::invalid_argument("weight bound must be at least 1");
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 1 || weights[i] > w_max) {
            throw std::invalid_argument("weight of edge " + std::to_string(i) + " is " +
                                        std::to_string(weights[i]) + ", outside [1, " +
                                        std::to_string(w_max) + "]");
        }
    }
}

WeightAssignment WeightAssignment::constant(std::size_t edges, Weight value, Weight w_max) {
    return WeightAssignment{w_max, std::vector<Weight>(edges, value)};
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::NotRainbow:
            return "NotRainbow";
        case ViolationKind::Monochromatic:
            return "Monochromatic";
        case ViolationKind::TwinVertices:
            return "TwinVertices";
    }
    return "Unknown";
}

VertexColoring induced_coloring(const Hypergraph& h, const WeightAssignment& w) {
    if (w.weights.size() != h.num_edges()) {
        throw AlignmentError("weight assignment has " + std::to_string(w.weights.size()) +
                             " entries but the hypergraph has " +
                             std::to_string(h.num_edges()) + " edges");
    }
    VertexColoring c{std::vector<Color>(h.num_vertices(), 0)};
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
        for (Vertex v : h.edge(e)) {
            c.colors[v] += w.weights[e];
        }
    }
    return c;
}

Verdict check_strong_coloring(const Hypergraph& h, const VertexColoring& c) {
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
        auto ed = h.edge(e);
        for (std::size_t i = 0; i < ed.size(); ++i) {
            for (std::size_t j = i + 1; j < ed.size(); ++j) {
                if (c.colors[ed[i]] == c.colors[ed[j]]) {
                    return {Violation{ViolationKind::NotRainbow, e, ed[i], ed[j]}};
                }
            }
        }
    }
    return {};
}

Verdict check_weak_coloring(const Hypergraph& h, const VertexColoring& c) {
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
        auto ed = h.edge(e);
        bool mono = std::all_of(ed.begin(), ed.end(),
                                [&](Vertex v) { return c.colors[v] == c.colors[ed[0]]; });
        if (mono) {
            return {Violation{ViolationKind::Monochromatic, e, ed[0], ed[1]}};
        }
    }
    return {};
}

Verdict check_strong(const Hypergraph& h, const WeightAssignment& w) {
    return check_strong_coloring(h, induced_coloring(h, w));
}

Verdict check_weak(const Hypergraph& h, const WeightAssignment& w) {
    return check_weak_coloring(h, induced_coloring(h, w));
}

Verdict is_nice(const Hypergraph& h) {
    // Group vertices by incident edge list; the first two members of a group
    // are that group's smallest twin pair.
    auto inc = h.incidence();
    std::map<std::vector<EdgeIndex>, Vertex> first_seen;
    std::optional<Violation> best;
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        auto [it, inserted] = first_seen.try_emplace(inc[v], v);
        if (inserted) {
            continue;
        }
        Violation cand{ViolationKind::TwinVertices, std::nullopt, it->second, v};
        if (!best || std::pair(cand.first, cand.second) < std::pair(best->first, best->second)) {
            best = cand;
        }
    }
    return {best};
}

namespace {

VertexColoring degree_coloring(const Hypergraph& h) {
    auto deg = degrees(h);
    return VertexColoring{std::vector<Color>(deg.begin(), deg.end())};
}

}  // namespace

Verdict is_strongly_1_weighted(const Hypergraph& h) {
    return check_strong_coloring(h, degree_coloring(h));
}

Verdict is_weakly_1_weighted(const Hypergraph& h) {
    return check_weak_coloring(h, degree_coloring(h));
}

}  // namespace hyperweight
