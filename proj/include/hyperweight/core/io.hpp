#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hyperweight/core/coloring.hpp"
#include "hyperweight/core/hypergraph.hpp"

namespace hyperweight {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ".hg": header line `n r m`, then m lines of r vertex indices.
// ".wt": header line `m w_max`, then m weights, one per line.
// Lines whose first non-blank character is '#' are comments. Whitespace
// between tokens is free-form on input; the writers emit exactly one record
// per line with single spaces.

Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

WeightAssignment read_weights(std::istream& in);
void write_weights(std::ostream& out, const WeightAssignment& w);

Hypergraph load_hypergraph(const std::filesystem::path& path);
WeightAssignment load_weights(const std::filesystem::path& path);

std::string to_hg_string(const Hypergraph& h);
std::string to_wt_string(const WeightAssignment& w);

}  // namespace hyperweight
