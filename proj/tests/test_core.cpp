#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "hyperweight/constructions/blowup.hpp"
#include "hyperweight/constructions/gadgets.hpp"
#include "hyperweight/constructions/projective_plane.hpp"
#include "hyperweight/core/coloring.hpp"
#include "hyperweight/core/io.hpp"

using namespace hyperweight;

namespace {

Hypergraph single_edge(std::size_t n = 5) {
    return Hypergraph(n, 3, {{0, 1, 2}});
}

Hypergraph fano_blowup() {
    return blowup_hypergraph(projective_plane(2)).graph;
}

std::vector<Weight> random_weights(std::size_t m, Weight w, std::mt19937_64& rng) {
    std::uniform_int_distribution<Weight> pick(1, w);
    std::vector<Weight> out(m);
    for (auto& x : out) x = pick(rng);
    return out;
}

// Recomputes a violation's claim from scratch.
void require_witness(const Hypergraph& h, const std::vector<Weight>& weights, const Violation& v) {
    const auto c = oracle::colors(h, weights);
    REQUIRE(v.edge.has_value());
    CHECK(h.edge_contains(*v.edge, v.first));
    CHECK(h.edge_contains(*v.edge, v.second));
    CHECK(v.first != v.second);
    CHECK(c[v.first] == c[v.second]);
}

}  // namespace

TEST_CASE("hypergraph normalization") {
    const Hypergraph a(4, 3, {{2, 1, 0}, {3, 0, 1}});
    const Hypergraph b(4, 3, {{0, 1, 3}, {0, 1, 2}});
    CHECK(a == b);
    CHECK(a.edge(0)[0] == 0);
    CHECK(a.edge(0)[2] == 2);
    CHECK(a.edge(1)[2] == 3);

    std::vector<EdgeIndex> pos;
    Hypergraph::normalize(4, 3, {{3, 0, 1}, {2, 1, 0}}, pos);
    CHECK(pos == std::vector<EdgeIndex>{1, 0});

    const std::vector<Vertex> probe{3, 1, 0};
    CHECK(a.find_edge(probe) == EdgeIndex{1});

    CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, 2}, {2, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, 1, {}), std::invalid_argument);
}

TEST_CASE("degrees") {
    CHECK(degrees(Hypergraph(5, 3, {})) == std::vector<std::size_t>(5, 0));

    auto t = degrees(gadget_T(3));
    std::sort(t.begin(), t.end());
    CHECK(t == std::vector<std::size_t>{2, 2, 2, 3, 3, 6});

    const auto d = degrees(fano_blowup());
    CHECK(d.size() == 21);
    CHECK(std::all_of(d.begin(), d.end(), [](std::size_t x) { return x == 2; }));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const auto h = oracle::random_hypergraph(8, 3, 0.4, rng);
        const auto deg = degrees(h);
        CHECK(std::accumulate(deg.begin(), deg.end(), std::size_t{0}) == 3 * h.num_edges());
    }
}

TEST_CASE("induced coloring") {
    const Hypergraph t = gadget_T(3);
    const auto deg = degrees(t);

    const auto ones = induced_coloring(t, WeightAssignment::constant(t.num_edges(), 1, 1));
    for (Vertex v = 0; v < t.num_vertices(); ++v) CHECK(ones.colors[v] == static_cast<Color>(deg[v]));

    const auto twos = induced_coloring(t, WeightAssignment::constant(t.num_edges(), 2, 2));
    for (Vertex v = 0; v < t.num_vertices(); ++v) {
        CHECK(twos.colors[v] == 2 * static_cast<Color>(deg[v]));
        CHECK(twos.colors[v] % 2 == 0);
    }

    const auto single = induced_coloring(single_edge(), WeightAssignment::constant(1, 2, 2));
    CHECK(single.colors == std::vector<Color>{2, 2, 2, 0, 0});

    CHECK_THROWS_AS(induced_coloring(t, WeightAssignment::constant(2, 1, 1)), AlignmentError);
}

TEST_CASE("induced coloring is linear in the weights") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto h = oracle::random_hypergraph(7, 3, 0.5, rng);
        auto base = random_weights(h.num_edges(), 3, rng);
        auto plus = base;
        for (auto& x : plus) ++x;
        const auto c0 = induced_coloring(h, {3, base}).colors;
        const auto c1 = induced_coloring(h, {4, plus}).colors;
        const auto deg = degrees(h);
        for (Vertex v = 0; v < h.num_vertices(); ++v) {
            CHECK(c1[v] == c0[v] + static_cast<Color>(deg[v]));
            CHECK(c0[v] == oracle::colors(h, base)[v]);
        }
    }
}

TEST_CASE("check_strong") {
    for (Weight w = 1; w <= 3; ++w) {
        const auto v = check_strong(single_edge(), WeightAssignment::constant(1, w, 3));
        REQUIRE_FALSE(v.ok());
        CHECK(v.violation->kind == ViolationKind::NotRainbow);
        CHECK(v.violation->edge == EdgeIndex{0});
    }

    const Hypergraph t = gadget_T(3);
    CHECK(check_strong(t, WeightAssignment::constant(t.num_edges(), 1, 1)).ok());

    // Two co-linear points of the Fano plane share a weight on their point edges.
    const auto plane = projective_plane(2);
    const auto b = blowup_hypergraph(plane);
    const std::size_t line = plane.common_line(0, 1);
    std::vector<Weight> w(b.graph.num_edges(), 1);
    for (std::size_t p = 0; p < b.point_edges.size(); ++p) w[b.point_edges[p]] = static_cast<Weight>(p + 1);
    w[b.point_edges[1]] = w[b.point_edges[0]];
    for (std::size_t l = 0; l < b.line_edges.size(); ++l) w[b.line_edges[l]] = 1;
    const auto verdict = check_strong(b.graph, {7, w});
    REQUIRE_FALSE(verdict.ok());
    CHECK(verdict.violation->kind == ViolationKind::NotRainbow);
    require_witness(b.graph, w, *verdict.violation);
    // The flags of points 0 and 1 on their common line collide inside that line edge.
    const Vertex a = b.flag_vertex(0, line);
    const Vertex c = b.flag_vertex(1, line);
    const auto colors = oracle::colors(b.graph, w);
    CHECK(colors[a] == colors[c]);
    CHECK(b.graph.edge_contains(b.line_edges[line], a));
    CHECK(b.graph.edge_contains(b.line_edges[line], c));
}

TEST_CASE("check_weak") {
    const auto single = check_weak(single_edge(), WeightAssignment::constant(1, 2, 2));
    REQUIRE_FALSE(single.ok());
    CHECK(single.violation->kind == ViolationKind::Monochromatic);

    const Hypergraph weak = weak_counterexample(3);
    REQUIRE(weak.num_edges() == 6);
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<Weight> w(6);
        for (unsigned i = 0; i < 6; ++i) w[i] = (mask >> i & 1u) ? 2 : 1;
        const auto v = check_weak(weak, {2, w});
        REQUIRE_FALSE(v.ok());
        CHECK(v.violation->kind == ViolationKind::Monochromatic);
        require_witness(weak, w, *v.violation);
    }
}

TEST_CASE("checkers agree with the oracle and strong implies weak") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const std::size_t r = 2 + i % 3;
        const auto h = oracle::random_hypergraph(7, r, 0.3, rng);
        const auto w = random_weights(h.num_edges(), 3, rng);
        const auto s = check_strong(h, {3, w});
        const auto k = check_weak(h, {3, w});
        CHECK(s.ok() == oracle::rainbow_everywhere(h, w));
        CHECK(k.ok() == oracle::no_monochromatic_edge(h, w));
        if (s.ok()) CHECK(k.ok());
        if (!s.ok()) require_witness(h, w, *s.violation);
        if (!k.ok()) require_witness(h, w, *k.violation);
        if (r == 2) CHECK(s.ok() == k.ok());
    }
}

TEST_CASE("is_nice") {
    const auto single = is_nice(single_edge(3));
    REQUIRE_FALSE(single.ok());
    CHECK(single.violation->kind == ViolationKind::TwinVertices);
    CHECK(fano_blowup().num_vertices() == 21);
    CHECK(is_nice(fano_blowup()).ok());
    CHECK_FALSE(is_nice(Hypergraph(2, 2, {})).ok());
    CHECK(is_nice(Hypergraph(3, 2, {{0, 1}, {1, 2}})).ok());
}

TEST_CASE("1-weighted predicates") {
    const Hypergraph t = gadget_T(3);
    CHECK(is_strongly_1_weighted(t).ok());
    CHECK(is_weakly_1_weighted(t).ok());
    CHECK_FALSE(is_strongly_1_weighted(single_edge()).ok());
    CHECK_FALSE(is_weakly_1_weighted(single_edge()).ok());

    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        const auto h = oracle::random_hypergraph(6 + i % 3, 3, 0.25, rng);
        const auto ones = WeightAssignment::constant(h.num_edges(), 1, 1);
        const bool s = is_strongly_1_weighted(h).ok();
        const bool k = is_weakly_1_weighted(h).ok();
        CHECK(s == check_strong(h, ones).ok());
        CHECK(k == check_weak(h, ones).ok());
        if (s) CHECK(k);
    }
}

TEST_CASE("weight assignment validation") {
    auto validate = [](Weight w_max, std::vector<Weight> weights) {
        WeightAssignment{w_max, std::move(weights)}.validate();
    };
    CHECK_NOTHROW(validate(2, {1, 2, 2}));
    CHECK_THROWS_AS(validate(2, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(validate(2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(0, {}), std::invalid_argument);
}

TEST_CASE("text formats") {
    const Hypergraph t = gadget_T(3);
    const std::string text = to_hg_string(t);
    std::istringstream in(text);
    const Hypergraph back = read_hypergraph(in);
    CHECK(back == t);
    CHECK(to_hg_string(back) == text);

    std::istringstream messy("# comment\n 4  3 2\n3 1 0\n\n# another\n 0 1 2 \n");
    const Hypergraph m = read_hypergraph(messy);
    CHECK(m == Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}}));
    CHECK(to_hg_string(m) == "4 3 2\n0 1 2\n0 1 3\n");

    const WeightAssignment w{2, {1, 2, 2}};
    CHECK(to_wt_string(w) == "3 2\n1\n2\n2\n");
    std::istringstream win(to_wt_string(w));
    CHECK(read_weights(win) == w);

    auto bad = [](const std::string& s) {
        std::istringstream is(s);
        return read_hypergraph(is);
    };
    CHECK_THROWS_AS(bad("3 3 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(bad("3 3 1\n0 1 x\n"), ParseError);
    CHECK_THROWS_AS(bad("3 3 1\n0 1 2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(bad("3 3 1\n0 1 5\n"), ParseError);
    CHECK_THROWS_AS(bad("3 3 -1\n"), ParseError);

    std::istringstream wbad("2 2\n1\n3\n");
    CHECK_THROWS(read_weights(wbad));
    CHECK_THROWS_AS(load_hypergraph("/nonexistent/file.hg"), std::runtime_error);
}
