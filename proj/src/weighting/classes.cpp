#include "hyperweight/weighting/classes.hpp"

#include <cmath>
#include <set>

#include "hyperweight/random/collision.hpp"

namespace hyperweight {

CollisionClasses classify_collisions(const Hypergraph& h) {
    CollisionClasses out;
    out.degrees = degrees(h);
    const CollisionStats stats = collision_stats(std::span<const std::size_t>(out.degrees));
    out.disjoint = stats.classes_disjoint;

    const std::set<std::size_t> present(out.degrees.begin(), out.degrees.end());
    const std::set<std::size_t> class_degrees(stats.class_degrees.begin(), stats.class_degrees.end());
    for (std::size_t i = 0; i < stats.classes.size(); ++i) {
        const auto& cls = stats.classes[i];
        if (cls.size() == 2) {
            out.pairs.push_back({cls[0], cls[1]});
        } else if (cls.size() == 3) {
            out.triples.push_back({cls[0], cls[1], cls[2]});
        } else {
            out.larger.push_back(cls);
        }
        const std::size_t d = stats.class_degrees[i];
        if (cls.size() >= 3 && present.count(d + 1) != 0) {
            out.offset_quad_free = false;
        }
        if (cls.size() >= 3 && d > 0 && class_degrees.count(d - 1) != 0) {
            out.lower_offset_free = false;
        }
    }
    out.no_quad = out.larger.empty();

    if (!out.disjoint) {
        out.r5_failures.push_back("classes not disjoint");
        out.r4_failures.push_back("classes not disjoint");
    }
    if (!out.triples.empty()) {
        out.r5_failures.push_back("triple present");
    }
    if (!out.no_quad) {
        out.r5_failures.push_back("quad present");
        out.r4_failures.push_back("quad present");
    }
    if (!out.lower_offset_free) {
        out.r4_failures.push_back("offset-quad present (class of degree d-1 below a triple of degree d)");
    }
    if (!out.offset_quad_free) {
        out.notes.push_back("degree pattern (d,d,d,d+1) present");
    }

    const double n = static_cast<double>(h.num_vertices());
    if (n >= 2) {
        const double log_n = std::log(n);
        const double pairs = static_cast<double>(out.pairs.size());
        const double triples = static_cast<double>(out.triples.size());
        if (pairs > log_n) {
            out.notes.push_back("pair count " + std::to_string(out.pairs.size()) +
                                " exceeds log n (r >= 5 bound)");
        }
        if (pairs > std::sqrt(n) * log_n) {
            out.notes.push_back("pair count " + std::to_string(out.pairs.size()) +
                                " exceeds sqrt(n) log n (r = 4 bound)");
        }
        if (triples > log_n) {
            out.notes.push_back("triple count " + std::to_string(out.triples.size()) +
                                " exceeds log n (r = 4 bound)");
        }
    }
    return out;
}

}  // namespace hyperweight
