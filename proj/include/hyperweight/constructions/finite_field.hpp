#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace hyperweight {

/**
 * Addition and multiplication tables of GF(q), q = p^k.
 *
 * Element i encodes the polynomial sum_j c_j x^j with i = sum_j c_j p^j. Index
 * 0 is the additive identity and index 1 the multiplicative identity. For
 * k > 1, multiplication reduces modulo the monic irreducible polynomial of
 * degree k whose lower coefficients have the smallest such encoding.
 */
class FiniteField {
public:
    static constexpr std::size_t kMaxOrder = 64;

    /// Throws std::invalid_argument when q is not a prime power in [2, kMaxOrder].
    explicit FiniteField(std::size_t q);

    std::size_t order() const { return q_; }
    std::size_t characteristic() const { return p_; }
    std::size_t degree() const { return k_; }

    /// Lower coefficients c_0..c_{k-1} of the modulus x^k + ...; empty when k = 1.
    const std::vector<std::size_t>& modulus() const { return modulus_; }

    std::size_t add(std::size_t a, std::size_t b) const { return add_[a * q_ + b]; }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * q_ + b]; }
    std::size_t neg(std::size_t a) const { return neg_[a]; }
    /// Multiplicative inverse; a must be nonzero.
    std::size_t inv(std::size_t a) const { return inv_[a]; }

private:
    std::size_t q_ = 0;
    std::size_t p_ = 0;
    std::size_t k_ = 0;
    std::vector<std::size_t> modulus_;
    std::vector<std::size_t> add_;
    std::vector<std::size_t> mul_;
    std::vector<std::size_t> neg_;
    std::vector<std::size_t> inv_;
};

/// Returns (p, k) with q = p^k, or (0, 0) if q is not a prime power.
std::pair<std::size_t, std::size_t> prime_power_decomposition(std::size_t q);

}  // namespace hyperweight
