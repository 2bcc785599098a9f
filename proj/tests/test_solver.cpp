#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "hyperweight/constructions/blowup.hpp"
#include "hyperweight/constructions/gadgets.hpp"
#include "hyperweight/constructions/projective_plane.hpp"
#include "hyperweight/solver/certificate.hpp"
#include "hyperweight/solver/solver.hpp"

using namespace hyperweight;

namespace {

SearchConfig config(SearchMode mode, EdgeOrder order = EdgeOrder::GreedyVertexCompletion,
                    std::uint64_t budget = 0) {
    SearchConfig cfg;
    cfg.mode = mode;
    cfg.edge_order = order;
    cfg.node_budget = budget;
    return cfg;
}

void require_sound(const Hypergraph& h, const SolveOutcome& out, SearchMode mode) {
    if (out.status != SolveStatus::Found) return;
    REQUIRE(out.assignment.has_value());
    if (mode == SearchMode::Strong) {
        CHECK(check_strong(h, *out.assignment).ok());
    } else {
        CHECK(check_weak(h, *out.assignment).ok());
    }
}

}  // namespace

TEST_CASE("solver examples") {
    const auto weak = solve(weak_counterexample(3), 2, config(SearchMode::Weak));
    CHECK(weak.status == SolveStatus::ExhaustedUnsat);
    CHECK_FALSE(oracle::brute_force(weak_counterexample(3), 2, SearchMode::Weak).has_value());

    const Hypergraph k3(3, 2, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(solve(k3, 2, config(SearchMode::Strong)).status == SolveStatus::ExhaustedUnsat);
    CHECK_FALSE(oracle::brute_force(k3, 2, SearchMode::Strong).has_value());

    const Hypergraph t = gadget_T(3);
    const auto found = solve(t, 1, config(SearchMode::Strong));
    REQUIRE(found.status == SolveStatus::Found);
    CHECK(found.assignment->weights == std::vector<Weight>(t.num_edges(), 1));

    const Hypergraph fano = blowup_hypergraph(projective_plane(2)).graph;
    CHECK(solve(fano, 2, config(SearchMode::Strong)).status == SolveStatus::ExhaustedUnsat);
    CHECK_FALSE(oracle::brute_force(fano, 2, SearchMode::Strong).has_value());
}

TEST_CASE("weak counterexample becomes weakly 3-weighted") {
    const Hypergraph h = weak_counterexample(3);
    const auto out = solve(h, 3, config(SearchMode::Weak));
    CHECK(out.status == SolveStatus::Found);
    require_sound(h, out, SearchMode::Weak);
}

TEST_CASE("solver matches brute force on small hypergraphs") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        const std::size_t r = 2 + i % 3;
        const std::size_t n = r + 2 + i % 3;
        const auto h = oracle::random_hypergraph(n, r, 0.45, rng);
        if (h.num_edges() == 0 || h.num_edges() > 12) continue;
        const Weight w = 1 + i % 3;
        if (w == 3 && h.num_edges() > 9) continue;
        for (SearchMode mode : {SearchMode::Strong, SearchMode::Weak}) {
            for (EdgeOrder order : {EdgeOrder::GreedyVertexCompletion, EdgeOrder::GivenOrder}) {
                const auto out = solve(h, w, config(mode, order));
                const bool expected = oracle::brute_force(h, w, mode).has_value();
                CHECK(out.status == (expected ? SolveStatus::Found : SolveStatus::ExhaustedUnsat));
                require_sound(h, out, mode);
            }
        }
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("monotonicity in the weight bound") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        const auto h = oracle::random_hypergraph(6, 3, 0.3, rng);
        for (Weight w = 1; w <= 2; ++w) {
            const auto out = solve(h, w, config(SearchMode::Strong));
            if (out.status != SolveStatus::Found) continue;
            WeightAssignment wider = *out.assignment;
            wider.w_max = w + 1;
            CHECK_NOTHROW(wider.validate());
            CHECK(check_strong(h, wider).ok());
            CHECK(solve(h, w + 1, config(SearchMode::Strong)).status == SolveStatus::Found);
        }
    }
}

TEST_CASE("determinism and budget") {
    const Hypergraph fano = blowup_hypergraph(projective_plane(2)).graph;
    const auto a = solve(fano, 3, config(SearchMode::Strong));
    const auto b = solve(fano, 3, config(SearchMode::Strong));
    CHECK(a.status == b.status);
    CHECK(a.nodes_visited == b.nodes_visited);

    const auto tight = solve(fano, 3, config(SearchMode::Strong, EdgeOrder::GivenOrder, 5));
    CHECK(tight.status == SolveStatus::BudgetExceeded);
    CHECK(tight.nodes_visited <= 6);
    CHECK_FALSE(tight.assignment.has_value());

    CHECK(to_string(SolveStatus::ExhaustedUnsat) == "ExhaustedUnsat");
    CHECK(to_string(SolveStatus::Found) == "Found");
    CHECK(to_string(SolveStatus::BudgetExceeded) == "BudgetExceeded");
}

TEST_CASE("search edge order") {
    const Hypergraph t = gadget_T(3);
    for (EdgeOrder order : {EdgeOrder::GreedyVertexCompletion, EdgeOrder::GivenOrder}) {
        auto seq = search_edge_order(t, order);
        CHECK(seq.size() == t.num_edges());
        std::sort(seq.begin(), seq.end());
        CHECK(std::adjacent_find(seq.begin(), seq.end()) == seq.end());
    }
    const auto given = search_edge_order(t, EdgeOrder::GivenOrder);
    for (std::size_t i = 0; i < given.size(); ++i) CHECK(given[i] == i);
}

TEST_CASE("empty and isolated inputs") {
    const Hypergraph empty(4, 3, {});
    CHECK(solve(empty, 1, config(SearchMode::Strong)).status == SolveStatus::Found);
    const Hypergraph single(3, 3, {{0, 1, 2}});
    CHECK(solve(single, 5, config(SearchMode::Strong)).status == SolveStatus::ExhaustedUnsat);
    CHECK(solve(single, 5, config(SearchMode::Weak)).status == SolveStatus::ExhaustedUnsat);
    CHECK_THROWS(solve(single, 0, config(SearchMode::Strong)));
}

TEST_CASE("pigeonhole certificate") {
    const auto plane = projective_plane(2);
    const auto blow = blowup_hypergraph(plane);
    const auto cert = blowup_unsat_certificate(plane, blow, 6, false);
    CHECK(cert.e1_count == 7);
    CHECK(cert.w == 6);
    CHECK(cert.coline_witness.size() == 21);
    for (const auto& c : cert.coline_witness) {
        CHECK(plane.incident(c.p1, c.line));
        CHECK(plane.incident(c.p2, c.line));
    }
    CHECK_THROWS_AS(blowup_unsat_certificate(plane, blow, 7, false), CertificateRejected);

    const auto plane3 = projective_plane(3);
    const auto cert3 = blowup_unsat_certificate(plane3, blowup_hypergraph(plane3), 12, false);
    CHECK(cert3.e1_count == 13);
    CHECK(cert3.coline_witness.size() == 78);

    CHECK_THROWS_AS(blowup_unsat_certificate(plane3, blow, 6, false), CertificateRejected);
}

TEST_CASE("collision witnesses") {
    const auto plane = projective_plane(2);
    const auto blow = blowup_hypergraph(plane);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<Weight> pick(1, 6);
    for (int i = 0; i < 200; ++i) {
        std::vector<Weight> e1(7);
        for (auto& x : e1) x = pick(rng);
        const auto wit = find_collision_witness(plane, blow, e1);
        CHECK(wit.p1 != wit.p2);
        CHECK(e1[wit.p1] == e1[wit.p2]);
        CHECK(plane.incident(wit.p1, wit.line));
        CHECK(plane.incident(wit.p2, wit.line));
        CHECK(wit.line_edge == blow.line_edges[wit.line]);
        CHECK(blow.graph.edge_contains(wit.line_edge, wit.a));
        CHECK(blow.graph.edge_contains(wit.line_edge, wit.b));
        // Each flag lies in exactly its point edge and its line edge, so the
        // two colors differ only through the point-edge weights.
        CHECK(blow.graph.edge_contains(blow.point_edges[wit.p1], wit.a));
        CHECK(blow.graph.edge_contains(blow.point_edges[wit.p2], wit.b));
    }
    const std::vector<Weight> distinct{1, 2, 3, 4, 5, 6, 7};
    CHECK_THROWS(find_collision_witness(plane, blow, distinct));
}

TEST_CASE("certificate enumeration at q = 2") {
    const auto plane = projective_plane(2);
    const auto cert = blowup_unsat_certificate(plane, blowup_hypergraph(plane), 3, true);
    REQUIRE(cert.enumeration.has_value());
    CHECK(cert.enumeration->assignments_checked == 2187);
    CHECK(cert.enumeration->witnesses_verified == 2187);
}
