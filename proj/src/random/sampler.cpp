#include "hyperweight/random/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hyperweight {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632BE59BD9B4E019ULL));
}

BernoulliStream::BernoulliStream(double p, std::uint64_t seed) : engine_(seed) {
    if (p <= 0.0) {
        mode_ = Mode::Never;
    } else if (p >= 1.0) {
        mode_ = Mode::Always;
    } else if (p == 0.5) {
        mode_ = Mode::Half;
    } else {
        mode_ = Mode::Threshold;
        threshold_ = static_cast<std::uint64_t>(std::ldexp(static_cast<long double>(p), 64));
    }
}

void validate_sampling(std::size_t n, std::size_t r, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
    if (r < 2) {
        throw std::invalid_argument("uniformity must be at least 2");
    }
    if (r > n) {
        throw std::invalid_argument("uniformity " + std::to_string(r) + " exceeds n = " +
                                    std::to_string(n));
    }
}

Hypergraph sample_hypergraph(std::size_t n, std::size_t r, double p, std::uint64_t seed,
                             std::uint64_t trial) {
    std::vector<std::vector<Vertex>> edges;
    for_each_sampled_edge(n, r, p, seed, trial, [&](std::span<const Vertex> e) {
        edges.emplace_back(e.begin(), e.end());
    });
    return Hypergraph(n, r, std::move(edges));
}

std::vector<std::size_t> sample_degrees(std::size_t n, std::size_t r, double p,
                                        std::uint64_t seed, std::uint64_t trial) {
    validate_sampling(n, r, p);
    BernoulliStream coin(p, trial_seed(seed, trial));
    std::vector<std::size_t> deg(n, 0);

    // Enumerate (r-1)-prefixes in lexicographic order and run the last
    // coordinate in a tight loop; the prefix vertices get the kept count once.
    const std::size_t k = r - 1;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) {
        c[i] = i;
    }
    while (true) {
        std::size_t kept = 0;
        std::size_t last = c[k - 1] + 1;
        coin.for_next(n - last, [&](bool bit) {
            deg[last] += bit;
            kept += bit;
            ++last;
        });
        for (std::size_t i = 0; i < k; ++i) {
            deg[c[i]] += kept;
        }
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - r + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            c[j] = c[j - 1] + 1;
        }
    }
    return deg;
}

}  // namespace hyperweight
