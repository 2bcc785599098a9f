#include "hyperweight/constructions/blowup.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hyperweight {

Vertex BlowupHypergraph::flag_vertex(std::size_t point, std::size_t line) const {
    const std::pair<std::size_t, std::size_t> key{point, line};
    auto it = std::lower_bound(flags.begin(), flags.end(), key);
    if (it == flags.end() || *it != key) {
        throw std::out_of_range("point " + std::to_string(point) + " is not on line " +
                                std::to_string(line));
    }
    return static_cast<Vertex>(it - flags.begin());
}

BlowupHypergraph blowup_hypergraph(const IncidenceStructure& plane) {
    BlowupHypergraph b;
    b.q = plane.q;
    for (std::size_t p = 0; p < plane.points.size(); ++p) {
        for (std::size_t l : plane.lines_through[p]) {
            b.flags.emplace_back(p, l);
        }
    }

    std::vector<std::vector<Vertex>> edges;
    for (std::size_t p = 0; p < plane.points.size(); ++p) {
        std::vector<Vertex> e;
        for (std::size_t l : plane.lines_through[p]) {
            e.push_back(b.flag_vertex(p, l));
        }
        edges.push_back(std::move(e));
    }
    for (std::size_t l = 0; l < plane.lines.size(); ++l) {
        std::vector<Vertex> f;
        for (std::size_t p : plane.lines[l]) {
            f.push_back(b.flag_vertex(p, l));
        }
        edges.push_back(std::move(f));
    }

    std::vector<EdgeIndex> pos;
    b.graph = Hypergraph::normalize(b.flags.size(), plane.q + 1, std::move(edges), pos);
    const std::size_t np = plane.points.size();
    b.point_edges.assign(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(np));
    b.line_edges.assign(pos.begin() + static_cast<std::ptrdiff_t>(np), pos.end());

    std::vector<std::string> labels;
    labels.reserve(b.flags.size());
    for (auto [p, l] : b.flags) {
        labels.push_back("(p" + std::to_string(p) + ",l" + std::to_string(l) + ")");
    }
    b.graph.set_labels(std::move(labels));
    return b;
}

BlowupHypergraph extend_blowup(const BlowupHypergraph& blowup, std::size_t r) {
    const std::size_t base_r = blowup.graph.uniformity();
    if (r < base_r) {
        throw std::invalid_argument("cannot extend a " + std::to_string(base_r) +
                                    "-uniform blow-up to uniformity " + std::to_string(r));
    }
    if (r == base_r) {
        return blowup;
    }
    if (!blowup.extension_vertices.empty()) {
        throw std::invalid_argument("blow-up is already extended");
    }

    const std::size_t base_n = blowup.graph.num_vertices();
    const std::size_t pad = r - base_r;
    const std::size_t u_size = r + 1;

    BlowupHypergraph out;
    out.q = blowup.q;
    out.flags = blowup.flags;
    for (std::size_t i = 0; i < u_size; ++i) {
        out.extension_vertices.push_back(static_cast<Vertex>(base_n + i));
    }

    std::vector<std::vector<Vertex>> edges;
    const std::size_t m = blowup.graph.num_edges();
    for (EdgeIndex e = 0; e < m; ++e) {
        auto ed = blowup.graph.edge(e);
        std::vector<Vertex> padded(ed.begin(), ed.end());
        for (std::size_t j = 0; j < pad; ++j) {
            padded.push_back(out.extension_vertices[(e * pad + j) % u_size]);
        }
        edges.push_back(std::move(padded));
    }
    for (std::size_t skip = 0; skip < u_size; ++skip) {
        std::vector<Vertex> inside;
        for (std::size_t i = 0; i < u_size; ++i) {
            if (i != skip) {
                inside.push_back(out.extension_vertices[i]);
            }
        }
        edges.push_back(std::move(inside));
    }

    std::vector<EdgeIndex> pos;
    out.graph = Hypergraph::normalize(base_n + u_size, r, std::move(edges), pos);
    for (EdgeIndex e : blowup.point_edges) {
        out.point_edges.push_back(pos[e]);
    }
    for (EdgeIndex e : blowup.line_edges) {
        out.line_edges.push_back(pos[e]);
    }
    for (std::size_t k = m; k < pos.size(); ++k) {
        out.extension_edges.push_back(pos[k]);
    }

    auto labels = blowup.graph.labels();
    if (!labels.empty()) {
        for (std::size_t i = 0; i < u_size; ++i) {
            labels.push_back("u" + std::to_string(i));
        }
        out.graph.set_labels(std::move(labels));
    }
    return out;
}

}  // namespace hyperweight
