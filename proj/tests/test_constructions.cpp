#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "hyperweight/constructions/blowup.hpp"
#include "hyperweight/constructions/finite_field.hpp"
#include "hyperweight/constructions/gadgets.hpp"
#include "hyperweight/constructions/projective_plane.hpp"
#include "hyperweight/constructions/reduction.hpp"

using namespace hyperweight;

namespace {

void check_field_laws(const FiniteField& f) {
    const std::size_t q = f.order();
    for (std::size_t a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.mul(a, 0) == 0);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        for (std::size_t b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            if (a != 0 && b != 0) CHECK(f.mul(a, b) != 0);
            for (std::size_t c = 0; c < q; ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

std::vector<std::size_t> sorted_degrees(const Hypergraph& h) {
    auto d = degrees(h);
    std::sort(d.begin(), d.end());
    return d;
}

std::size_t factorial(std::size_t r) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= r; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("finite fields") {
    const FiniteField f2(2);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            CHECK(f2.add(a, b) == (a ^ b));
            CHECK(f2.mul(a, b) == (a & b));
        }
    }

    const FiniteField f4(4);
    CHECK(f4.characteristic() == 2);
    CHECK(f4.degree() == 2);
    for (std::size_t a = 0; a < 4; ++a) CHECK(f4.add(a, a) == 0);
    // The multiplicative group is cyclic of order 3: some element has order 3.
    bool generator = false;
    for (std::size_t g = 2; g < 4; ++g) {
        if (f4.mul(g, g) != 1 && f4.mul(f4.mul(g, g), g) == 1) generator = true;
    }
    CHECK(generator);

    for (std::size_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        CAPTURE(q);
        check_field_laws(FiniteField(q));
    }

    CHECK_THROWS_AS(FiniteField(6), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(12), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(128), std::invalid_argument);
    CHECK(prime_power_decomposition(27) == std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(prime_power_decomposition(49) == std::pair<std::size_t, std::size_t>{7, 2});
}

TEST_CASE("projective planes") {
    for (std::size_t q : {2, 3, 4, 5, 7, 8}) {
        CAPTURE(q);
        const auto plane = projective_plane(q);
        const std::size_t count = q * q + q + 1;
        CHECK(plane.points.size() == count);
        CHECK(plane.lines.size() == count);
        CHECK(verify_plane(plane).all());
        // Independent recount of every invariant.
        std::vector<std::size_t> through(count, 0);
        for (const auto& line : plane.lines) {
            CHECK(line.size() == q + 1);
            for (std::size_t p : line) ++through[p];
        }
        for (std::size_t p = 0; p < count; ++p) CHECK(through[p] == q + 1);
        for (std::size_t a = 0; a < count; ++a) {
            for (std::size_t b = a + 1; b < count; ++b) {
                std::size_t joint = 0;
                for (const auto& line : plane.lines) {
                    joint += std::binary_search(line.begin(), line.end(), a) &&
                             std::binary_search(line.begin(), line.end(), b);
                }
                CHECK(joint == 1);
                CHECK(plane.incident(a, plane.common_line(a, b)));
                CHECK(plane.incident(b, plane.common_line(a, b)));
            }
        }
        // Canonical representatives: last nonzero coordinate is 1.
        for (const auto& pt : plane.points) {
            std::size_t last = 2;
            while (pt[last] == 0) --last;
            CHECK(pt[last] == 1);
        }
    }
    CHECK_THROWS(projective_plane(6));
}

TEST_CASE("blow-up") {
    for (std::size_t q : {2, 3, 4, 5}) {
        CAPTURE(q);
        const auto plane = projective_plane(q);
        const auto b = blowup_hypergraph(plane);
        const std::size_t count = q * q + q + 1;
        CHECK(b.graph.uniformity() == q + 1);
        CHECK(b.graph.num_vertices() == (q + 1) * count);
        CHECK(b.graph.num_edges() == 2 * count);
        CHECK(b.point_edges.size() == count);
        CHECK(b.line_edges.size() == count);
        const auto d = degrees(b.graph);
        CHECK(std::all_of(d.begin(), d.end(), [](std::size_t x) { return x == 2; }));
        CHECK(is_nice(b.graph).ok());
        for (std::size_t p = 0; p < count; ++p) {
            for (std::size_t l : plane.lines_through[p]) {
                const Vertex v = b.flag_vertex(p, l);
                CHECK(b.flags[v] == std::pair<std::size_t, std::size_t>{p, l});
                CHECK(b.graph.edge_contains(b.point_edges[p], v));
                CHECK(b.graph.edge_contains(b.line_edges[l], v));
            }
        }
    }
    const auto b2 = blowup_hypergraph(projective_plane(2));
    CHECK(b2.graph.num_vertices() == 21);
    CHECK(b2.graph.num_edges() == 14);
    CHECK(blowup_hypergraph(projective_plane(3)).graph.num_vertices() == 52);
    CHECK(blowup_hypergraph(projective_plane(3)).graph.num_edges() == 26);
    const auto fano = projective_plane(2);
    std::size_t away = 0;
    while (fano.incident(0, away)) ++away;
    CHECK_THROWS_AS(b2.flag_vertex(0, away), std::out_of_range);
}

TEST_CASE("extended blow-up") {
    const auto plane = projective_plane(2);
    const auto b = blowup_hypergraph(plane);
    const auto same = extend_blowup(b, 3);
    CHECK(same.graph == b.graph);
    CHECK(same.extension_vertices.empty());

    const auto e = extend_blowup(b, 4);
    CHECK(e.graph.num_vertices() == 26);
    CHECK(e.graph.num_edges() == 19);
    CHECK(e.graph.uniformity() == 4);
    CHECK(e.extension_vertices.size() == 5);
    CHECK(e.extension_edges.size() == 5);
    CHECK(is_nice(e.graph).ok());
    for (EdgeIndex x : e.extension_edges) {
        for (Vertex v : e.graph.edge(x)) {
            CHECK(std::find(e.extension_vertices.begin(), e.extension_vertices.end(), v) !=
                  e.extension_vertices.end());
        }
    }
    // Each padded point edge still contains its original flags.
    for (std::size_t p = 0; p < 7; ++p) {
        for (std::size_t l : plane.lines_through[p]) {
            CHECK(e.graph.edge_contains(e.point_edges[p], b.flag_vertex(p, l)));
        }
    }
    const auto e6 = extend_blowup(b, 6);
    CHECK(e6.graph.num_vertices() == 28);
    CHECK(e6.graph.num_edges() == 21);
    CHECK(is_nice(e6.graph).ok());
    CHECK_THROWS_AS(extend_blowup(blowup_hypergraph(projective_plane(3)), 3), std::invalid_argument);
}

TEST_CASE("weak counterexample") {
    for (std::size_t r : {2, 3, 4, 5}) {
        const auto h = weak_counterexample(r);
        CHECK(h.num_vertices() == 3 * r);
        CHECK(h.num_edges() == 6);
        CHECK(h.uniformity() == r);
        CHECK(h.labels().size() == 3 * r);
    }
    const auto h4 = weak_counterexample(4);
    CHECK(h4.labels()[0] == "x1");
    CHECK(h4.labels()[4] == "y1");
    // f1 = {x2, ..., x4, y1}
    const std::vector<Vertex> f1{1, 2, 3, 4};
    CHECK(h4.find_edge(f1).has_value());
    const std::vector<Vertex> f3{0, 9, 10, 11};
    CHECK(h4.find_edge(f3).has_value());
}

TEST_CASE("gadgets") {
    const auto t = gadget_T(3);
    CHECK(t.num_vertices() == 6);
    CHECK(t.num_edges() == 6);
    CHECK(sorted_degrees(t) == std::vector<std::size_t>{2, 2, 2, 3, 3, 6});

    for (std::size_t r : {2, 3, 4, 5}) {
        const auto g = gadget_T(r);
        CHECK(g.num_vertices() == r * (r + 1) / 2);
        CHECK(g.num_edges() == factorial(r));
        // Part V_i holds i vertices of degree r!/i.
        auto d = degrees(g);
        for (std::size_t i = 1; i <= r; ++i) {
            CHECK(std::count(d.begin(), d.end(), factorial(r) / i) >= static_cast<long>(i));
        }
        CHECK(is_strongly_1_weighted(g).ok());
    }

    const auto t4 = gadget_Tk(3, 4);
    CHECK(t4.graph.num_vertices() == 21);
    CHECK(t4.graph.num_edges() == 24);
    CHECK(degrees(t4.graph)[t4.root] == 24);
    CHECK(gadget_Tk(3, 2).graph.num_vertices() == 11);
    CHECK(gadget_Tk(3, 2).graph.num_edges() == 12);

    for (std::size_t r : {3, 4}) {
        for (std::size_t k = 1; k <= 4; ++k) {
            const auto g = gadget_Tk(r, k);
            CHECK(g.graph.num_vertices() == gadget_Tk_vertex_count(r, k));
            CHECK(g.graph.num_vertices() == k * (r * (r + 1) / 2 - 1) + 1);
            CHECK(degrees(g.graph)[g.root] == k * factorial(r));
            CHECK(is_strongly_1_weighted(g.graph).ok());
        }
    }
    CHECK_THROWS_AS(gadget_Tk(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(gadget_T(1), std::invalid_argument);
}

TEST_CASE("reduction sizes and structure") {
    const Graph k2(2, 2, {{0, 1}});
    const auto m2 = np_reduce(k2, 3);
    CHECK(m2.target.num_vertices() == 23);
    CHECK(m2.target.num_edges() == 25);

    const Graph k3(3, 2, {{0, 1}, {1, 2}, {0, 2}});
    const auto m3 = np_reduce(k3, 3);
    CHECK(m3.target.num_vertices() == 96);
    CHECK(m3.target.num_edges() == 111);

    for (std::size_t r : {3, 4}) {
        const Graph path(3, 2, {{0, 1}, {1, 2}});
        const auto map = np_reduce(path, r);
        std::vector<int> owned(map.target.num_edges(), 0);
        std::set<Vertex> padding;
        for (std::size_t se = 0; se < path.num_edges(); ++se) {
            const auto& d = map.derived[se];
            ++owned[d.target_edge];
            CHECK(d.padding.size() == r - 2);
            for (Vertex v : path.edge(se)) CHECK(map.target.edge_contains(d.target_edge, v));
            for (std::size_t i = 0; i < d.padding.size(); ++i) {
                CHECK(padding.insert(d.padding[i]).second);
                CHECK(map.target.edge_contains(d.target_edge, d.padding[i]));
                const std::size_t copies = 2 * (i + 1) * path.num_vertices();
                CHECK(d.gadget_edges[i].size() == copies * factorial(r));
                for (EdgeIndex e : d.gadget_edges[i]) ++owned[e];
                CHECK(degrees(map.target)[d.padding[i]] == copies * factorial(r) + 1);
            }
        }
        // Derived and gadget edges partition the target.
        CHECK(std::all_of(owned.begin(), owned.end(), [](int c) { return c == 1; }));
        CHECK(is_nice(map.target).ok());
    }
    CHECK_THROWS_AS(np_reduce(k2, 2), std::invalid_argument);
    CHECK_THROWS_AS(np_reduce(weak_counterexample(3), 3), std::invalid_argument);
}

TEST_CASE("lift and restrict") {
    const Graph path(3, 2, {{0, 1}, {1, 2}});
    const WeightAssignment omega{2, {1, 2}};
    for (std::size_t r : {3, 4}) {
        const auto map = np_reduce(path, r);
        const auto lifted = lift_weighting(map, omega);
        CHECK(check_strong(map.target, lifted).ok());
        std::size_t ones = 0;
        for (const auto& d : map.derived) {
            for (const auto& list : d.gadget_edges) {
                for (EdgeIndex e : list) ones += lifted.weights[e] == 1;
            }
        }
        CHECK(ones == map.target.num_edges() - path.num_edges());
        CHECK(restrict_weighting(map, lifted) == omega);

        const auto colors = induced_coloring(map.target, lifted).colors;
        for (std::size_t se = 0; se < path.num_edges(); ++se) {
            const auto& d = map.derived[se];
            for (std::size_t i = 0; i < d.padding.size(); ++i) {
                const Color expected = omega.weights[se] +
                                       static_cast<Color>(2 * (i + 1) * 3 * factorial(r));
                CHECK(colors[d.padding[i]] == expected);
            }
        }
    }

    // K2: the single gadget root carries 4 * 3! gadget edges of weight 1.
    const Graph k2(2, 2, {{0, 1}});
    const auto m2 = np_reduce(k2, 3);
    const auto all_ones = WeightAssignment::constant(m2.target.num_edges(), 1, 2);
    CHECK(induced_coloring(m2.target, all_ones).colors[m2.derived[0].padding[0]] == 1 + 24);
    CHECK_THROWS_AS(lift_weighting(m2, WeightAssignment{2, {1}}), std::invalid_argument);

    const Graph k3(3, 2, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(lift_weighting(np_reduce(k3, 3), WeightAssignment{2, {1, 1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(lift_weighting(np_reduce(path, 3), WeightAssignment{2, {1}}), AlignmentError);
}
