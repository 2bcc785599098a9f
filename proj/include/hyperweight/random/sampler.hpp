#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hyperweight/core/hypergraph.hpp"

namespace hyperweight {

/// Seed of the independent stream for one trial of an experiment.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/**
 * Independent Bernoulli(p) coins drawn from a 64-bit Mersenne Twister.
 *
 * For p = 1/2 every bit of a 64-bit draw is one coin; otherwise each coin
 * compares one 64-bit draw against p * 2^64. p = 0 and p = 1 consume nothing.
 */
class BernoulliStream {
public:
    BernoulliStream(double p, std::uint64_t seed);

    bool next() {
        switch (mode_) {
            case Mode::Never:
                return false;
            case Mode::Always:
                return true;
            case Mode::Half:
                if (bits_left_ == 0) {
                    buffer_ = engine_();
                    bits_left_ = 64;
                }
                {
                    const bool bit = (buffer_ & 1u) != 0;
                    buffer_ >>= 1;
                    --bits_left_;
                    return bit;
                }
            case Mode::Threshold:
                return engine_() < threshold_;
        }
        return false;
    }

    /// Calls on_coin(bool) for the next `count` coins; same stream as next().
    template <class OnCoin>
    void for_next(std::size_t count, OnCoin&& on_coin) {
        if (mode_ != Mode::Half) {
            for (std::size_t i = 0; i < count; ++i) {
                on_coin(next());
            }
            return;
        }
        while (count > 0) {
            if (bits_left_ == 0) {
                buffer_ = engine_();
                bits_left_ = 64;
            }
            const int take = count < static_cast<std::size_t>(bits_left_) ? static_cast<int>(count) : bits_left_;
            std::uint64_t word = buffer_;
            for (int i = 0; i < take; ++i) {
                on_coin((word & 1u) != 0);
                word >>= 1;
            }
            buffer_ = take == 64 ? 0 : word;
            bits_left_ -= take;
            count -= static_cast<std::size_t>(take);
        }
    }

private:
    enum class Mode { Never, Always, Half, Threshold };
    Mode mode_;
    std::mt19937_64 engine_;
    std::uint64_t threshold_ = 0;
    std::uint64_t buffer_ = 0;
    int bits_left_ = 0;
};

/// Throws std::invalid_argument unless 0 <= p <= 1 and 2 <= r <= n.
void validate_sampling(std::size_t n, std::size_t r, double p);

/**
 * Visits the edges of H^(r)(n, p) for (seed, trial): all r-subsets of [n] in
 * lexicographic order, each kept when its coin (one per subset, in that order)
 * comes up. Every sampling routine here consumes the stream the same way, so
 * they all see the same hypergraph.
 */
template <class OnEdge>
void for_each_sampled_edge(std::size_t n, std::size_t r, double p, std::uint64_t seed,
                           std::uint64_t trial, OnEdge&& on_edge) {
    validate_sampling(n, r, p);
    BernoulliStream coin(p, trial_seed(seed, trial));
    std::vector<Vertex> c(r);
    for (std::size_t i = 0; i < r; ++i) {
        c[i] = static_cast<Vertex>(i);
    }
    while (true) {
        if (coin.next()) {
            on_edge(std::span<const Vertex>(c));
        }
        std::size_t i = r;
        while (i > 0 && c[i - 1] == n - r + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++c[i - 1];
        for (std::size_t j = i; j < r; ++j) {
            c[j] = c[j - 1] + 1;
        }
    }
}

Hypergraph sample_hypergraph(std::size_t n, std::size_t r, double p, std::uint64_t seed,
                             std::uint64_t trial);

/// Degree sequence of the same sample without materializing its edges.
std::vector<std::size_t> sample_degrees(std::size_t n, std::size_t r, double p,
                                        std::uint64_t seed, std::uint64_t trial);

}  // namespace hyperweight
