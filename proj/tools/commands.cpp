#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "hyperweight/constructions/blowup.hpp"
#include "hyperweight/constructions/gadgets.hpp"
#include "hyperweight/constructions/projective_plane.hpp"
#include "hyperweight/constructions/reduction.hpp"
#include "hyperweight/core/io.hpp"
#include "hyperweight/random/expectations.hpp"
#include "hyperweight/random/experiment.hpp"
#include "hyperweight/random/sampler.hpp"
#include "hyperweight/solver/certificate.hpp"
#include "hyperweight/solver/solver.hpp"
#include "hyperweight/weighting/repair.hpp"
#include "hyperweight/weighting/three_uniform.hpp"

namespace hyperweight::cli {

using Json = nlohmann::ordered_json;

namespace {

Json header(const std::string& command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

void print(const Json& j) {
    std::cout << j.dump(2) << '\n';
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write failed for " + path);
    }
}

Json shape(const Hypergraph& h) {
    return Json{{"n", h.num_vertices()}, {"r", h.uniformity()}, {"m", h.num_edges()}};
}

Json to_json(const Violation& v) {
    Json j;
    j["kind"] = to_string(v.kind);
    if (v.edge) {
        j["edge"] = *v.edge;
    }
    j["vertices"] = {v.first, v.second};
    return j;
}

SearchMode parse_mode(const std::string& mode) {
    if (mode == "strong") return SearchMode::Strong;
    if (mode == "weak") return SearchMode::Weak;
    throw std::invalid_argument("mode must be strong or weak, got '" + mode + "'");
}

EdgeOrder parse_order(const std::string& order) {
    if (order == "greedy") return EdgeOrder::GreedyVertexCompletion;
    if (order == "given") return EdgeOrder::GivenOrder;
    throw std::invalid_argument("order must be greedy or given, got '" + order + "'");
}

// Writes the .hg text to --out (and the report to stdout) or, without
// --out, the .hg text itself to stdout.
int emit_hypergraph(const Hypergraph& h, const std::string& out, const std::string& sidecar,
                    Json report, const Json& sidecar_body) {
    if (!sidecar.empty()) {
        write_file(sidecar, sidecar_body.dump(2) + "\n");
    }
    if (out.empty()) {
        write_hypergraph(std::cout, h);
        std::cerr << "edges: " << h.num_edges() << '\n';
    } else {
        write_file(out, to_hg_string(h));
        report["out"] = out;
        print(report);
    }
    return kExitOk;
}

Json blowup_json(const BlowupHypergraph& b) {
    Json j;
    j["q"] = b.q;
    j["point_edges"] = b.point_edges;
    j["line_edges"] = b.line_edges;
    Json flags = Json::array();
    for (const auto& [p, l] : b.flags) {
        flags.push_back({p, l});
    }
    j["flags"] = flags;
    j["extension_vertices"] = b.extension_vertices;
    j["extension_edges"] = b.extension_edges;
    return j;
}

Json reduction_json(const ReductionMap& map) {
    Json j;
    j["r"] = map.r;
    j["source"] = shape(map.source);
    j["target"] = shape(map.target);
    Json derived = Json::array();
    for (std::size_t e = 0; e < map.derived.size(); ++e) {
        const auto& d = map.derived[e];
        derived.push_back({{"source_edge", e},
                           {"target_edge", d.target_edge},
                           {"padding", d.padding},
                           {"gadget_edges", d.gadget_edges}});
    }
    j["derived"] = derived;
    return j;
}

}  // namespace

int cmd_gen(const GenArgs& args) {
    const Hypergraph h = sample_hypergraph(args.n, args.r, args.p, args.seed, args.trial);
    Json report = header("gen");
    report["n"] = args.n;
    report["r"] = args.r;
    report["p"] = args.p;
    report["seed"] = args.seed;
    report["trial"] = args.trial;
    report["edges"] = h.num_edges();
    return emit_hypergraph(h, args.out, args.sidecar, report, report);
}

int cmd_construct(const ConstructArgs& args) {
    Json report = header("construct");
    report["kind"] = args.kind;
    Json side = report;
    Hypergraph h;
    if (args.kind == "plane-blowup") {
        const IncidenceStructure plane = projective_plane(args.q);
        BlowupHypergraph b = blowup_hypergraph(plane);
        if (args.r != 0) {
            b = extend_blowup(b, args.r);
        }
        h = b.graph;
        side["blowup"] = blowup_json(b);
        side["labels"] = h.labels();
    } else if (args.kind == "weak-counterexample") {
        h = weak_counterexample(args.r);
        side["labels"] = h.labels();
    } else if (args.kind == "gadget-T") {
        const RootedGadget g = gadget_Tk(args.r, args.k);
        h = g.graph;
        side["k"] = args.k;
        side["root"] = g.root;
    } else if (args.kind == "np-reduce") {
        const ReductionMap map = np_reduce(load_hypergraph(args.graph), args.r);
        h = map.target;
        side["reduction"] = reduction_json(map);
    } else {
        throw std::invalid_argument("unknown construction '" + args.kind + "'");
    }
    report.update(shape(h));
    side.update(shape(h));
    return emit_hypergraph(h, args.out, args.sidecar, report, side);
}

int cmd_solve(const SolveArgs& args) {
    const Hypergraph h = load_hypergraph(args.input);
    SearchConfig cfg;
    cfg.mode = parse_mode(args.mode);
    cfg.edge_order = parse_order(args.order);
    cfg.node_budget = args.budget;
    if (args.w < 1) {
        throw std::invalid_argument("weight bound must be at least 1");
    }
    const auto start = std::chrono::steady_clock::now();
    const SolveOutcome outcome = solve(h, args.w, cfg);
    const double millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    Json report = header("solve");
    report.update(shape(h));
    report["mode"] = args.mode;
    report["w"] = args.w;
    report["budget"] = args.budget;
    report["status"] = to_string(outcome.status);
    report["nodes"] = outcome.nodes_visited;
    if (outcome.assignment) {
        report["weights"] = outcome.assignment->weights;
        if (!args.out.empty()) {
            write_file(args.out, to_wt_string(*outcome.assignment));
            report["out"] = args.out;
        }
    }
    report["millis"] = millis;
    print(report);
    return outcome.status == SolveStatus::BudgetExceeded ? kExitFailure : kExitOk;
}

int cmd_check(const CheckArgs& args) {
    const Hypergraph h = load_hypergraph(args.input);
    const WeightAssignment w = load_weights(args.weights);
    const SearchMode mode = parse_mode(args.mode);
    const Verdict verdict = mode == SearchMode::Strong ? check_strong(h, w) : check_weak(h, w);

    Json report = header("check");
    report.update(shape(h));
    report["mode"] = args.mode;
    report["ok"] = verdict.ok();
    if (verdict.violation) {
        report["violation"] = to_json(*verdict.violation);
    }
    report["colors"] = induced_coloring(h, w).colors;
    print(report);
    return kExitOk;
}

int cmd_weight(const WeightArgs& args) {
    const Hypergraph h = load_hypergraph(args.input);
    std::string algorithm = args.algorithm;
    if (algorithm == "auto") {
        const std::size_t r = h.uniformity();
        if (r >= 5) algorithm = "r5";
        else if (r == 4) algorithm = "r4";
        else if (r == 3) algorithm = "r3";
        else throw std::invalid_argument("no constructive weighting for r = " + std::to_string(r));
    }

    Json report = header("weight");
    report.update(shape(h));
    report["algorithm"] = algorithm;
    std::optional<WeightAssignment> assignment;
    std::string failure;
    if (algorithm == "r5" || algorithm == "r4") {
        R4Options options;
        options.literal_offset_rule = args.strict;
        const RepairResult res = algorithm == "r5" ? repair_r_ge_5(h) : repair_r4(h, options);
        assignment = res.assignment;
        failure = res.failure;
        report["classes"] = {{"pairs", res.classes.pairs.size()},
                             {"triples", res.classes.triples.size()},
                             {"larger", res.classes.larger.size()},
                             {"notes", res.classes.notes}};
        report["flipped"] = res.flipped;
        if (algorithm == "r4") {
            report["strict"] = args.strict;
        }
    } else if (algorithm == "r3") {
        ThreeUniformConfig cfg;
        cfg.gamma = args.gamma;
        cfg.max_retries = args.retries;
        cfg.strict = args.strict;
        const ThreeUniformResult res = strong_weighting_3uniform(h, args.seed, cfg);
        assignment = res.assignment;
        failure = res.failure;
        report["seed"] = args.seed;
        report["gamma"] = args.gamma;
        report["retries"] = args.retries;
        report["strict"] = args.strict;
        Json attempts = Json::array();
        for (const auto& a : res.attempts) {
            attempts.push_back({{"attempt", a.attempt},
                                {"family_size", a.family_size},
                                {"family_target", a.family_target},
                                {"dangerous_pairs", a.dangerous_pairs},
                                {"dangerous_triples", a.dangerous_triples},
                                {"bad_pairs", a.bad_pairs},
                                {"repairs", a.repairs},
                                {"fallback_repairs", a.fallback_repairs},
                                {"abort_cause", a.abort_cause}});
        }
        report["attempts"] = attempts;
    } else {
        throw std::invalid_argument("algorithm must be auto, r5, r4 or r3, got '" + algorithm + "'");
    }

    report["status"] = assignment ? "ok" : "failed";
    if (assignment) {
        report["weights"] = assignment->weights;
        if (!args.out.empty()) {
            write_file(args.out, to_wt_string(*assignment));
            report["out"] = args.out;
        }
    } else {
        report["failure"] = failure;
    }
    if (!args.sidecar.empty()) {
        write_file(args.sidecar, report.dump(2) + "\n");
    }
    print(report);
    return assignment ? kExitOk : kExitFailure;
}

int cmd_reduce(const ReduceArgs& args) {
    const Graph g = load_hypergraph(args.graph);
    const ReductionMap map = np_reduce(g, args.r);
    SearchConfig cfg;
    cfg.node_budget = args.budget;
    const SolveOutcome source = solve(map.source, 2, cfg);
    const SolveOutcome target = solve(map.target, 2, cfg);

    Json report = header("reduce");
    report["r"] = args.r;
    report["budget"] = args.budget;
    report["source"] = shape(map.source);
    report["source"]["status"] = to_string(source.status);
    report["source"]["nodes"] = source.nodes_visited;
    report["target"] = shape(map.target);
    report["target"]["status"] = to_string(target.status);
    report["target"]["nodes"] = target.nodes_visited;
    const bool decided = source.status != SolveStatus::BudgetExceeded &&
                         target.status != SolveStatus::BudgetExceeded;
    report["decided"] = decided;
    if (decided) {
        report["agree"] = source.status == target.status;
    }
    if (source.assignment) {
        const WeightAssignment lifted = lift_weighting(map, *source.assignment);
        report["lift_strong"] = check_strong(map.target, lifted).ok();
        report["restrict_roundtrip"] = restrict_weighting(map, lifted) == *source.assignment;
    }
    if (target.assignment) {
        const WeightAssignment restricted = restrict_weighting(map, *target.assignment);
        report["restricted_strong"] = check_strong(map.source, restricted).ok();
    }
    print(report);
    return decided ? kExitOk : kExitFailure;
}

int cmd_mc(const McArgs& args) {
    ExperimentConfig cfg;
    cfg.n = args.n;
    cfg.r = args.r;
    cfg.p = args.p;
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.jobs = args.jobs;
    for (const auto& name : args.stats) {
        const auto s = parse_statistic(name);
        if (!s) {
            throw std::invalid_argument("unknown statistic '" + name + "'");
        }
        cfg.statistics.push_back(*s);
    }
    if (cfg.statistics.empty()) {
        cfg.statistics = {Statistic::X2, Statistic::X2Zero};
    }
    const ExperimentReport rep = run_experiment(cfg);

    Json report = header("mc");
    report["n"] = cfg.n;
    report["r"] = cfg.r;
    report["p"] = cfg.p;
    report["trials"] = cfg.trials;
    report["seed"] = cfg.seed;
    Json stats;
    for (const auto& s : rep.summaries) {
        Json entry{{"mean", s.mean},
                   {"variance", s.variance},
                   {"std_error", s.std_error},
                   {"indicator", s.indicator}};
        if (s.indicator) {
            entry["frequency"] = s.mean;
        }
        stats[to_string(s.statistic)] = entry;
    }
    report["statistics"] = stats;
    if (cfg.p == 0.5 && cfg.r >= 2 && cfg.r + 2 <= cfg.n) {
        Json ref;
        const double ex = expected_x2_exact(cfg.n, cfg.r);
        ref["expected_x2_exact"] = ex;
        ref["poisson_x2_zero"] = std::exp(-ex);
        if (cfg.r >= 3) {
            ref["expected_x2_asymptotic"] = expected_x2_asymptotic(cfg.n, cfg.r);
        }
        if (cfg.r == 5) {
            ref["poisson_reference"] = poisson_reference();
        }
        report["reference"] = ref;
    }
    if (!args.csv.empty()) {
        std::ostringstream csv;
        csv << "trial";
        for (const auto& s : rep.summaries) {
            csv << ',' << to_string(s.statistic);
        }
        csv << '\n';
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            csv << t;
            for (const auto& s : rep.summaries) {
                csv << ',' << s.values[t];
            }
            csv << '\n';
        }
        write_file(args.csv, csv.str());
        report["csv"] = args.csv;
    }
    report["wall_ms"] = rep.wall_ms;
    print(report);
    return kExitOk;
}

int cmd_verify_construction(const VerifyArgs& args) {
    const IncidenceStructure plane = projective_plane(args.q);
    const PlaneInvariants inv = verify_plane(plane);
    const BlowupHypergraph base = blowup_hypergraph(plane);
    const std::size_t r = args.r == 0 ? args.q + 1 : args.r;
    const BlowupHypergraph b = extend_blowup(base, r);
    const Weight w = args.w == 0 ? static_cast<Weight>(args.q * args.q + args.q) : args.w;

    Json report = header("verify-construction");
    report["q"] = args.q;
    report["r"] = r;
    report["w"] = w;
    report["plane"] = {{"point_count", inv.point_count},
                       {"line_count", inv.line_count},
                       {"line_size", inv.line_size},
                       {"point_degree", inv.point_degree},
                       {"unique_joining_line", inv.unique_joining_line}};
    const auto deg = degrees(base.graph);
    const bool regular = std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; });
    const bool base_nice = is_nice(base.graph).ok();
    const bool nice = is_nice(b.graph).ok();
    report["blowup"] = shape(b.graph);
    report["blowup"]["base_two_regular"] = regular;
    report["blowup"]["base_nice"] = base_nice;
    report["blowup"]["nice"] = nice;
    bool verified = inv.all() && regular && base_nice && nice;
    try {
        const PigeonholeCertificate cert = blowup_unsat_certificate(plane, b, w, args.enumerate);
        Json c{{"e1_count", cert.e1_count}, {"w", cert.w}, {"coline_pairs", cert.coline_witness.size()}};
        if (cert.enumeration) {
            c["enumeration"] = {{"assignments_checked", cert.enumeration->assignments_checked},
                                {"witnesses_verified", cert.enumeration->witnesses_verified}};
        }
        report["certificate"] = c;
    } catch (const CertificateRejected& e) {
        report["certificate"] = {{"rejected", e.what()}};
        verified = false;
    }
    report["verified"] = verified;
    print(report);
    return verified ? kExitOk : kExitFailure;
}

}  // namespace hyperweight::cli
