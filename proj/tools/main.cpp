#include <functional>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "commands.hpp"

using namespace hyperweight::cli;

int main(int argc, char** argv) {
    CLI::App app{"Strong and weak edge weightings of uniform hypergraphs"};
    app.require_subcommand(1);
    std::function<int()> run;

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Sample H^(r)(n, p) and write it as .hg");
    g->add_option("--n", gen.n, "Vertex count")->required();
    g->add_option("--r", gen.r, "Uniformity")->required()->check(CLI::Range(2, 64));
    g->add_option("--p", gen.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    g->add_option("--seed", gen.seed, "Random seed")->required();
    g->add_option("--trial", gen.trial, "Trial index within the seed");
    g->add_option("--out", gen.out, "Write the .hg file here instead of stdout");
    g->add_option("--sidecar", gen.sidecar, "Write a JSON summary here");
    g->callback([&] { run = [&] { return cmd_gen(gen); }; });

    ConstructArgs con;
    auto* c = app.add_subcommand("construct", "Build an explicit hypergraph");
    c->require_subcommand(1);
    c->add_option("--out", con.out, "Write the .hg file here instead of stdout");
    c->add_option("--sidecar", con.sidecar, "Write construction metadata as JSON here");
    auto* blow = c->add_subcommand("plane-blowup", "Flag hypergraph of PG(2, q), optionally extended to r");
    blow->add_option("--q", con.q, "Plane order (prime power)")->required();
    blow->add_option("--r", con.r, "Target uniformity (default q + 1)");
    blow->callback([&] { con.kind = "plane-blowup"; });
    auto* weak = c->add_subcommand("weak-counterexample", "Six-edge hypergraph that is not weakly 2-weighted");
    weak->add_option("--r", con.r, "Uniformity")->required();
    weak->callback([&] { con.kind = "weak-counterexample"; });
    auto* gadget = c->add_subcommand("gadget-T", "Gadget T, or T(k) with --k");
    gadget->add_option("--r", con.r, "Uniformity")->required();
    gadget->add_option("--k", con.k, "Number of copies glued at the root")->check(CLI::PositiveNumber);
    gadget->callback([&] { con.kind = "gadget-T"; });
    auto* reduce_c = c->add_subcommand("np-reduce", "Reduction h(G) of a graph");
    reduce_c->add_option("--graph", con.graph, "Source graph (.hg with r = 2)")->required()->check(CLI::ExistingFile);
    reduce_c->add_option("--r", con.r, "Target uniformity")->required();
    reduce_c->callback([&] { con.kind = "np-reduce"; });
    c->callback([&] { run = [&] { return cmd_construct(con); }; });

    SolveArgs sol;
    auto* s = app.add_subcommand("solve", "Decide strong or weak w-weightedness exactly");
    s->add_option("--in", sol.input, "Input .hg file")->required()->check(CLI::ExistingFile);
    s->add_option("--w", sol.w, "Weight bound")->required()->check(CLI::PositiveNumber);
    s->add_option("--mode", sol.mode, "strong or weak")->check(CLI::IsMember({"strong", "weak"}));
    s->add_option("--order", sol.order, "greedy or given")->check(CLI::IsMember({"greedy", "given"}));
    s->add_option("--budget", sol.budget, "Node budget, 0 for unlimited");
    s->add_option("--out", sol.out, "Write a found weighting as .wt here");
    s->callback([&] { run = [&] { return cmd_solve(sol); }; });

    CheckArgs chk;
    auto* k = app.add_subcommand("check", "Check a weighting against a hypergraph");
    k->add_option("--in", chk.input, "Input .hg file")->required()->check(CLI::ExistingFile);
    k->add_option("--weights", chk.weights, "Input .wt file")->required()->check(CLI::ExistingFile);
    k->add_option("--mode", chk.mode, "strong or weak")->check(CLI::IsMember({"strong", "weak"}));
    k->callback([&] { run = [&] { return cmd_check(chk); }; });

    WeightArgs wa;
    auto* w = app.add_subcommand("weight", "Constructive strong {1,2}-weighting");
    w->add_option("--in", wa.input, "Input .hg file")->required()->check(CLI::ExistingFile);
    w->add_option("--algorithm", wa.algorithm, "auto, r5, r4 or r3")
        ->check(CLI::IsMember({"auto", "r5", "r4", "r3"}));
    w->add_option("--seed", wa.seed, "Random seed (r3)");
    w->add_option("--gamma", wa.gamma, "Matching family density (r3)")->check(CLI::NonNegativeNumber);
    w->add_option("--retries", wa.retries, "Attempts (r3)")->check(CLI::PositiveNumber);
    w->add_flag("--strict", wa.strict, "Literal preconditions: r4 rejects (d,d,d,d+1); r3 repairs once and aborts on dangerous triples");
    w->add_option("--out", wa.out, "Write the weighting as .wt here");
    w->add_option("--sidecar,--diagnostics", wa.sidecar, "Write the JSON report here as well");
    w->callback([&] { run = [&] { return cmd_weight(wa); }; });

    ReduceArgs red;
    auto* r = app.add_subcommand("reduce", "Solve G and h(G) at w = 2 and compare");
    r->add_option("--graph", red.graph, "Source graph (.hg with r = 2)")->required()->check(CLI::ExistingFile);
    r->add_option("--r", red.r, "Target uniformity")->check(CLI::Range(3, 8));
    r->add_option("--budget", red.budget, "Node budget per solve, 0 for unlimited");
    r->callback([&] { run = [&] { return cmd_reduce(red); }; });

    McArgs mc;
    auto* m = app.add_subcommand("mc", "Monte Carlo degree-collision experiment");
    m->add_option("--n", mc.n, "Vertex count")->required();
    m->add_option("--r", mc.r, "Uniformity")->required()->check(CLI::Range(2, 64));
    m->add_option("--p", mc.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    m->add_option("--trials", mc.trials, "Number of trials")->required()->check(CLI::PositiveNumber);
    m->add_option("--seed", mc.seed, "Random seed")->required();
    m->add_option("--stats", mc.stats, "Statistics (comma separated)")->delimiter(',');
    m->add_option("--jobs", mc.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    m->add_option("--csv", mc.csv, "Write per-trial values as CSV here");
    m->callback([&] { run = [&] { return cmd_mc(mc); }; });

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify-construction", "Plane invariants and pigeonhole certificate");
    v->add_option("--q", ver.q, "Plane order (prime power)")->required();
    v->add_option("--w", ver.w, "Weight bound (default q^2 + q)")->check(CLI::PositiveNumber);
    v->add_option("--r", ver.r, "Uniformity of the extended blow-up (default q + 1)");
    v->add_flag("--enumerate", ver.enumerate, "Check every E1 assignment");
    v->callback([&] { run = [&] { return cmd_verify_construction(ver); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return run();
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
}
