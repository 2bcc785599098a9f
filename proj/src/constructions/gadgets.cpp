#include "hyperweight/constructions/gadgets.hpp"

#include <stdexcept>
#include <string>

namespace hyperweight {

namespace {

void check_uniformity(std::size_t r) {
    if (r < 2 || r > kMaxGadgetUniformity) {
        throw std::invalid_argument("gadget uniformity must be in [2, " +
                                    std::to_string(kMaxGadgetUniformity) + "], got " +
                                    std::to_string(r));
    }
}

// Transversals of T where part i (0-based) holds local vertices
// i(i+1)/2 .. i(i+1)/2 + i, local vertex 0 being the root.
void for_each_transversal(std::size_t r, std::vector<Vertex>& current, std::size_t part,
                          std::vector<std::vector<Vertex>>& out) {
    if (part == r) {
        out.push_back(current);
        return;
    }
    const std::size_t offset = part * (part + 1) / 2;
    for (std::size_t j = 0; j <= part; ++j) {
        current.push_back(static_cast<Vertex>(offset + j));
        for_each_transversal(r, current, part + 1, out);
        current.pop_back();
    }
}

}  // namespace

std::size_t gadget_Tk_vertex_count(std::size_t r, std::size_t k) {
    return k * (r * (r + 1) / 2 - 1) + 1;
}

std::vector<std::vector<Vertex>> gadget_Tk_edges(std::size_t r, std::size_t k, Vertex root,
                                                 Vertex first_fresh) {
    check_uniformity(r);
    std::vector<std::vector<Vertex>> local;
    std::vector<Vertex> current;
    for_each_transversal(r, current, 0, local);

    const std::size_t per_copy = r * (r + 1) / 2 - 1;
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(local.size() * k);
    for (std::size_t c = 0; c < k; ++c) {
        const Vertex base = static_cast<Vertex>(first_fresh + c * per_copy);
        for (const auto& e : local) {
            std::vector<Vertex> mapped;
            mapped.reserve(e.size());
            for (Vertex v : e) {
                mapped.push_back(v == 0 ? root : base + v - 1);
            }
            edges.push_back(std::move(mapped));
        }
    }
    return edges;
}

Hypergraph gadget_T(std::size_t r) {
    return gadget_Tk(r, 1).graph;
}

RootedGadget gadget_Tk(std::size_t r, std::size_t k) {
    if (k < 1) {
        throw std::invalid_argument("T(k) needs k >= 1");
    }
    auto edges = gadget_Tk_edges(r, k, 0, 1);
    return RootedGadget{Hypergraph(gadget_Tk_vertex_count(r, k), r, std::move(edges)), 0};
}

Hypergraph weak_counterexample(std::size_t r) {
    if (r < 2) {
        throw std::invalid_argument("weak counterexample needs r >= 2");
    }
    auto x = [&](std::size_t i) { return static_cast<Vertex>(i - 1); };
    auto y = [&](std::size_t i) { return static_cast<Vertex>(r + i - 1); };
    auto z = [&](std::size_t i) { return static_cast<Vertex>(2 * r + i - 1); };

    std::vector<std::vector<Vertex>> edges(6);
    for (std::size_t i = 1; i <= r; ++i) {
        edges[0].push_back(x(i));
        edges[1].push_back(y(i));
        edges[2].push_back(z(i));
    }
    for (std::size_t i = 2; i <= r; ++i) {
        edges[3].push_back(x(i));
        edges[4].push_back(y(i));
        edges[5].push_back(z(i));
    }
    edges[3].push_back(y(1));
    edges[4].push_back(z(1));
    edges[5].push_back(x(1));

    Hypergraph h(3 * r, r, std::move(edges));
    std::vector<std::string> labels;
    for (const char* part : {"x", "y", "z"}) {
        for (std::size_t i = 1; i <= r; ++i) {
            labels.push_back(part + std::to_string(i));
        }
    }
    h.set_labels(std::move(labels));
    return h;
}

}  // namespace hyperweight
