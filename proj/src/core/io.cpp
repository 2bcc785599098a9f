#include "hyperweight/core/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hyperweight {

namespace {

// Yields integer tokens from a stream, skipping '#' comment lines.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    bool next(long long& value) {
        while (true) {
            if (pos_ < tokens_.size()) {
                const std::string& tok = tokens_[pos_++];
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
                if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                    throw ParseError("line " + std::to_string(line_no_) +
                                     ": expected an integer, got '" + tok + "'");
                }
                return true;
            }
            std::string line;
            if (!std::getline(in_, line)) {
                return false;
            }
            ++line_no_;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') {
                continue;
            }
            std::istringstream ls(line);
            tokens_.clear();
            pos_ = 0;
            for (std::string tok; ls >> tok;) {
                tokens_.push_back(tok);
            }
        }
    }

    long long require(const char* what) {
        long long v = 0;
        if (!next(v)) {
            throw ParseError(std::string("unexpected end of input while reading ") + what);
        }
        return v;
    }

    int line() const { return line_no_; }

private:
    std::istream& in_;
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
    int line_no_ = 0;
};

long long require_nonnegative(long long v, const char* what) {
    if (v < 0) {
        throw ParseError(std::string(what) + " must be nonnegative");
    }
    return v;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
    TokenReader tr(in);
    auto n = require_nonnegative(tr.require("n"), "n");
    auto r = require_nonnegative(tr.require("r"), "r");
    auto m = require_nonnegative(tr.require("m"), "m");
    std::vector<std::vector<Vertex>> edges(static_cast<std::size_t>(m));
    for (auto& e : edges) {
        e.reserve(static_cast<std::size_t>(r));
        for (long long i = 0; i < r; ++i) {
            auto v = require_nonnegative(tr.require("edge vertex"), "vertex index");
            e.push_back(static_cast<Vertex>(v));
        }
    }
    long long extra = 0;
    if (tr.next(extra)) {
        throw ParseError("trailing data after " + std::to_string(m) + " edges");
    }
    try {
        return Hypergraph(static_cast<std::size_t>(n), static_cast<std::size_t>(r),
                          std::move(edges));
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
    }
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.num_vertices() << ' ' << h.uniformity() << ' ' << h.num_edges() << '\n';
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
        auto ed = h.edge(e);
        for (std::size_t i = 0; i < ed.size(); ++i) {
            if (i > 0) {
                out << ' ';
            }
            out << ed[i];
        }
        out << '\n';
    }
}

WeightAssignment read_weights(std::istream& in) {
    TokenReader tr(in);
    auto m = require_nonnegative(tr.require("m"), "m");
    WeightAssignment w;
    w.w_max = static_cast<Weight>(tr.require("w_max"));
    w.weights.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        w.weights.push_back(static_cast<Weight>(tr.require("weight")));
    }
    long long extra = 0;
    if (tr.next(extra)) {
        throw ParseError("trailing data after " + std::to_string(m) + " weights");
    }
    try {
        w.validate();
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
    }
    return w;
}

void write_weights(std::ostream& out, const WeightAssignment& w) {
    out << w.weights.size() << ' ' << w.w_max << '\n';
    for (Weight x : w.weights) {
        out << x << '\n';
    }
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_hypergraph(in);
}

WeightAssignment load_weights(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_weights(in);
}

std::string to_hg_string(const Hypergraph& h) {
    std::ostringstream os;
    write_hypergraph(os, h);
    return os.str();
}

std::string to_wt_string(const WeightAssignment& w) {
    std::ostringstream os;
    write_weights(os, w);
    return os.str();
}

}  // namespace hyperweight
