#include "hyperweight/random/collision.hpp"

#include <algorithm>
#include <map>

namespace hyperweight {

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

}  // namespace

CollisionStats collision_stats(std::span<const std::size_t> degrees) {
    std::vector<std::pair<std::size_t, Vertex>> order;
    order.reserve(degrees.size());
    for (Vertex v = 0; v < degrees.size(); ++v) {
        order.emplace_back(degrees[v], v);
    }
    std::sort(order.begin(), order.end());

    CollisionStats s;
    std::map<std::size_t, std::uint64_t> count;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j < order.size() && order[j].first == order[i].first) {
            ++j;
        }
        const std::uint64_t size = j - i;
        count[order[i].first] = size;
        s.x2 += choose(size, 2);
        s.x3 += choose(size, 3);
        s.x4 += choose(size, 4);
        if (size >= 2) {
            std::vector<Vertex> cls;
            for (std::size_t k = i; k < j; ++k) {
                cls.push_back(order[k].second);
            }
            s.classes.push_back(std::move(cls));
            s.class_degrees.push_back(order[i].first);
        }
        i = j;
    }
    for (auto [d, c] : count) {
        auto up = count.find(d + 1);
        if (up != count.end()) {
            s.offset_quads += choose(c, 3) * up->second;
        }
    }

    std::vector<bool> seen(degrees.size(), false);
    for (const auto& cls : s.classes) {
        for (Vertex v : cls) {
            if (seen[v]) {
                s.classes_disjoint = false;
            }
            seen[v] = true;
        }
    }
    return s;
}

CollisionStats collision_stats(const Hypergraph& h) {
    const auto deg = degrees(h);
    CollisionStats s = collision_stats(std::span<const std::size_t>(deg));
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
        auto ed = h.edge(e);
        if (std::all_of(ed.begin(), ed.end(), [&](Vertex v) { return deg[v] == deg[ed[0]]; })) {
            ++s.x3_edges;
        }
    }
    return s;
}

}  // namespace hyperweight
