#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperweight::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;        // definitive answer
inline constexpr int kExitUsage = 1;     // bad flags, parameters or input files
inline constexpr int kExitFailure = 2;   // budget exceeded or algorithm failure

inline constexpr int kSchemaVersion = 1;

struct GenArgs {
    std::size_t n = 0;
    std::size_t r = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    std::string out;
    std::string sidecar;
};

struct ConstructArgs {
    std::string kind;  // plane-blowup, weak-counterexample, gadget-T, np-reduce
    std::size_t q = 0;
    std::size_t r = 0;
    std::size_t k = 1;
    std::string graph;
    std::string out;
    std::string sidecar;
};

struct SolveArgs {
    std::string input;
    int w = 2;
    std::string mode = "strong";
    std::string order = "greedy";
    std::uint64_t budget = 0;
    std::string out;
};

struct CheckArgs {
    std::string input;
    std::string weights;
    std::string mode = "strong";
};

struct WeightArgs {
    std::string input;
    std::string algorithm = "auto";
    std::uint64_t seed = 0;
    double gamma = 0.1;
    unsigned retries = 50;
    bool strict = false;
    std::string out;
    std::string sidecar;
};

struct ReduceArgs {
    std::string graph;
    std::size_t r = 3;
    std::uint64_t budget = 10'000'000;
};

struct McArgs {
    std::size_t n = 0;
    std::size_t r = 0;
    double p = 0.5;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::vector<std::string> stats;
    unsigned jobs = 1;
    std::string csv;
};

struct VerifyArgs {
    std::size_t q = 0;
    int w = 0;  // 0 means q^2 + q
    std::size_t r = 0;  // 0 means q + 1
    bool enumerate = false;
};

// Each command writes its JSON report to standard output and returns an exit code.
int cmd_gen(const GenArgs& args);
int cmd_construct(const ConstructArgs& args);
int cmd_solve(const SolveArgs& args);
int cmd_check(const CheckArgs& args);
int cmd_weight(const WeightArgs& args);
int cmd_reduce(const ReduceArgs& args);
int cmd_mc(const McArgs& args);
int cmd_verify_construction(const VerifyArgs& args);

}  // namespace hyperweight::cli
