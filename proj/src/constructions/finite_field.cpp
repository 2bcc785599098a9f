#include "hyperweight/constructions/finite_field.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace hyperweight {

namespace {

using Poly = std::vector<std::size_t>;  // coefficients, lowest degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

Poly decode(std::size_t index, std::size_t p, std::size_t k) {
    Poly a(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        a[j] = index % p;
        index /= p;
    }
    return a;
}

std::size_t encode(const Poly& a, std::size_t p) {
    std::size_t index = 0;
    for (std::size_t j = a.size(); j-- > 0;) {
        index = index * p + a[j];
    }
    return index;
}

std::size_t inverse_mod(std::size_t a, std::size_t p) {
    for (std::size_t x = 1; x < p; ++x) {
        if (a * x % p == 1) {
            return x;
        }
    }
    throw std::logic_error("no inverse modulo p");
}

// Remainder of a modulo a nonzero polynomial b over GF(p).
Poly poly_mod(Poly a, Poly b, std::size_t p) {
    trim(a);
    trim(b);
    const std::size_t lead_inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const std::size_t factor = a.back() * lead_inv % p;
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[shift + j] = (a[shift + j] + p * p - factor * b[j] % p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::size_t p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        }
    }
    trim(c);
    return c;
}

// Monic polynomial of degree k is irreducible iff no monic divisor of degree
// 1..k/2 divides it.
bool irreducible(const Poly& f, std::size_t p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::size_t count = 1;
        for (std::size_t j = 0; j < d; ++j) {
            count *= p;
        }
        for (std::size_t low = 0; low < count; ++low) {
            Poly g = decode(low, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::pair<std::size_t, std::size_t> prime_power_decomposition(std::size_t q) {
    if (q < 2) {
        return {0, 0};
    }
    std::size_t p = 2;
    while (q % p != 0) {
        ++p;
    }
    std::size_t k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) {
        return {0, 0};
    }
    return {p, k};
}

FiniteField::FiniteField(std::size_t q) : q_(q) {
    auto [p, k] = prime_power_decomposition(q);
    if (p == 0) {
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    }
    if (q > kMaxOrder) {
        throw std::invalid_argument("field order " + std::to_string(q) + " exceeds " +
                                    std::to_string(kMaxOrder));
    }
    p_ = p;
    k_ = k;

    Poly modulus_poly;
    if (k > 1) {
        for (std::size_t low = 0; low < q; ++low) {
            Poly f = decode(low, p, k);
            f.push_back(1);
            if (irreducible(f, p)) {
                modulus_ = decode(low, p, k);
                modulus_poly = std::move(f);
                break;
            }
        }
    }

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a) {
        Poly pa = decode(a, p, k);
        for (std::size_t b = 0; b < q; ++b) {
            Poly pb = decode(b, p, k);
            Poly sum(k);
            for (std::size_t j = 0; j < k; ++j) {
                sum[j] = (pa[j] + pb[j]) % p;
            }
            add_[a * q + b] = encode(sum, p);

            Poly prod;
            if (k == 1) {
                prod = Poly{pa[0] * pb[0] % p};
            } else {
                Poly ta = pa;
                Poly tb = pb;
                trim(ta);
                trim(tb);
                prod = poly_mod(poly_mul(ta, tb, p), modulus_poly, p);
            }
            prod.resize(k, 0);
            mul_[a * q + b] = encode(prod, p);
        }
    }
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            if (add(a, b) == 0) {
                neg_[a] = b;
            }
            if (a != 0 && mul(a, b) == 1) {
                inv_[a] = b;
            }
        }
    }
}

}  // namespace hyperweight
