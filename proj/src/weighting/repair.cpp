#include "hyperweight/weighting/repair.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hyperweight {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Shared state of one greedy repair run.
struct Greedy {
    const Hypergraph& h;
    std::vector<std::vector<EdgeIndex>> incidence;
    std::vector<bool> in_class;
    std::vector<bool> used;

    Greedy(const Hypergraph& graph, const CollisionClasses& classes)
        : h(graph),
          incidence(graph.incidence()),
          in_class(graph.num_vertices(), false),
          used(graph.num_vertices(), false) {
        for (const auto& p : classes.pairs) {
            for (Vertex v : p) in_class[v] = true;
        }
        for (const auto& t : classes.triples) {
            for (Vertex v : t) in_class[v] = true;
        }
        for (const auto& c : classes.larger) {
            for (Vertex v : c) in_class[v] = true;
        }
    }

    // First edge through `anchor` whose other vertices are class-free and
    // unused; with `through` set, the edge must also contain that vertex.
    std::optional<EdgeIndex> take(Vertex anchor, std::size_t through = kNone) {
        for (EdgeIndex e : incidence[anchor]) {
            bool ok = true;
            bool hits = through == kNone;
            for (Vertex v : h.edge(e)) {
                if (v == anchor) {
                    continue;
                }
                if (in_class[v] || used[v]) {
                    ok = false;
                    break;
                }
                if (v == through) {
                    hits = true;
                }
            }
            if (ok && hits) {
                for (Vertex v : h.edge(e)) {
                    if (v != anchor) used[v] = true;
                }
                return e;
            }
        }
        return std::nullopt;
    }
};

RepairResult finish(const Hypergraph& h, RepairResult result) {
    WeightAssignment w = WeightAssignment::constant(h.num_edges(), 2, 2);
    for (EdgeIndex e : result.flipped) {
        w.weights[e] = 1;
    }
    const Verdict verdict = check_strong(h, w);
    if (!verdict.ok()) {
        result.failure = "verification failed: edge " + std::to_string(*verdict.violation->edge) +
                         " is not rainbow";
        return result;
    }
    result.assignment = std::move(w);
    return result;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        out += out.empty() ? p : "; " + p;
    }
    return out;
}

}  // namespace

RepairResult repair_r_ge_5(const Hypergraph& h) {
    if (h.uniformity() < 5) {
        throw std::invalid_argument("repair_r_ge_5 needs r >= 5");
    }
    RepairResult result;
    result.classes = classify_collisions(h);
    if (!result.classes.r5_failures.empty()) {
        result.failure = join(result.classes.r5_failures);
        return result;
    }
    Greedy greedy(h, result.classes);
    for (const auto& [u, v] : result.classes.pairs) {
        const auto e = greedy.take(u);
        if (!e) {
            result.failure = "no eligible repair edge for vertex " + std::to_string(u);
            return result;
        }
        result.flipped.push_back(*e);
    }
    return finish(h, std::move(result));
}

RepairResult repair_r4(const Hypergraph& h, const R4Options& options) {
    if (h.uniformity() != 4) {
        throw std::invalid_argument("repair_r4 needs r = 4");
    }
    RepairResult result;
    result.classes = classify_collisions(h);
    const CollisionClasses& classes = result.classes;
    std::vector<std::string> failures = classes.r4_failures;
    if (options.literal_offset_rule && !classes.offset_quad_free) {
        failures.push_back("offset-quad present");
    }
    if (!failures.empty()) {
        result.failure = join(failures);
        return result;
    }

    const auto& deg = classes.degrees;
    std::map<std::size_t, Vertex> free_by_degree;
    Greedy greedy(h, classes);
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        if (!greedy.in_class[v]) {
            free_by_degree[deg[v]] = v;
        }
    }

    for (const auto& [x, y, z] : classes.triples) {
        const std::size_t d = deg[x];
        const auto f = greedy.take(x);
        const auto f2 = f ? greedy.take(x) : std::nullopt;
        if (!f || !f2) {
            result.failure = "no eligible repair edges for vertex " + std::to_string(x);
            return result;
        }
        std::size_t through = kNone;
        if (d > 0) {
            const auto it = free_by_degree.find(d - 1);
            if (it != free_by_degree.end() && !greedy.used[it->second]) {
                through = it->second;
            }
        }
        const auto g = greedy.take(y, through);
        if (!g) {
            result.failure = "no eligible repair edge for vertex " + std::to_string(y);
            return result;
        }
        result.flipped.insert(result.flipped.end(), {*f, *f2, *g});
    }
    for (const auto& [u, v] : classes.pairs) {
        const auto e = greedy.take(u);
        if (!e) {
            result.failure = "no eligible repair edge for vertex " + std::to_string(u);
            return result;
        }
        result.flipped.push_back(*e);
    }
    return finish(h, std::move(result));
}

}  // namespace hyperweight
