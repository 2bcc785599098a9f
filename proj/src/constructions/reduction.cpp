#include "hyperweight/constructions/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hyperweight/constructions/gadgets.hpp"

namespace hyperweight {

ReductionMap np_reduce(const Graph& g, std::size_t r) {
    if (r < 3) {
        throw std::invalid_argument("reduction target uniformity must be at least 3");
    }
    if (g.uniformity() != 2) {
        throw std::invalid_argument("reduction source must be a graph (r = 2)");
    }
    const std::size_t n = g.num_vertices();

    ReductionMap map;
    map.source = g;
    map.r = r;
    map.derived.resize(g.num_edges());

    std::vector<std::vector<Vertex>> edges;
    // For each input edge: which source edge it belongs to, and -1 for the
    // derived edge or the padding slot i for gadget edges.
    std::vector<std::pair<EdgeIndex, std::ptrdiff_t>> owner;
    Vertex next = static_cast<Vertex>(n);

    for (EdgeIndex se = 0; se < g.num_edges(); ++se) {
        auto& d = map.derived[se];
        auto xy = g.edge(se);
        std::vector<Vertex> derived_edge(xy.begin(), xy.end());
        for (std::size_t i = 1; i + 2 <= r; ++i) {
            const Vertex root = next++;
            d.padding.push_back(root);
            derived_edge.push_back(root);
            const std::size_t copies = 2 * i * n;
            auto gadget = gadget_Tk_edges(r, copies, root, next);
            next += static_cast<Vertex>(gadget_Tk_vertex_count(r, copies) - 1);
            for (auto& e : gadget) {
                edges.push_back(std::move(e));
                owner.emplace_back(se, static_cast<std::ptrdiff_t>(i - 1));
            }
        }
        edges.push_back(std::move(derived_edge));
        owner.emplace_back(se, -1);
        d.gadget_edges.resize(d.padding.size());
    }

    std::vector<EdgeIndex> pos;
    map.target = Hypergraph::normalize(next, r, std::move(edges), pos);
    for (std::size_t k = 0; k < pos.size(); ++k) {
        auto [se, slot] = owner[k];
        if (slot < 0) {
            map.derived[se].target_edge = pos[k];
        } else {
            map.derived[se].gadget_edges[static_cast<std::size_t>(slot)].push_back(pos[k]);
        }
    }
    for (auto& d : map.derived) {
        for (auto& list : d.gadget_edges) {
            std::sort(list.begin(), list.end());
        }
    }
    return map;
}

WeightAssignment lift_weighting(const ReductionMap& map, const WeightAssignment& omega_g) {
    if (omega_g.weights.size() != map.source.num_edges()) {
        throw AlignmentError("source weighting has " + std::to_string(omega_g.weights.size()) +
                             " entries, graph has " + std::to_string(map.source.num_edges()) +
                             " edges");
    }
    for (Weight x : omega_g.weights) {
        if (x != 1 && x != 2) {
            throw std::invalid_argument("source weighting must use weights in {1, 2}");
        }
    }
    if (!check_strong(map.source, omega_g).ok()) {
        throw std::invalid_argument("source weighting does not induce a proper coloring");
    }
    WeightAssignment omega_h = WeightAssignment::constant(map.target.num_edges(), 1, 2);
    for (EdgeIndex se = 0; se < map.derived.size(); ++se) {
        omega_h.weights[map.derived[se].target_edge] = omega_g.weights[se];
    }
    return omega_h;
}

WeightAssignment restrict_weighting(const ReductionMap& map, const WeightAssignment& omega_h) {
    if (omega_h.weights.size() != map.target.num_edges()) {
        throw AlignmentError("target weighting has " + std::to_string(omega_h.weights.size()) +
                             " entries, h(G) has " + std::to_string(map.target.num_edges()) +
                             " edges");
    }
    WeightAssignment omega_g{omega_h.w_max, {}};
    omega_g.weights.reserve(map.derived.size());
    for (const auto& d : map.derived) {
        omega_g.weights.push_back(omega_h.weights[d.target_edge]);
    }
    return omega_g;
}

}  // namespace hyperweight
