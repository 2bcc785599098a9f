#include "hyperweight/random/expectations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hyperweight {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kLn2 = std::numbers::ln2_v<long double>;

long double exact_choose(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    long double result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    }
    return std::round(result);
}

}  // namespace

long double log_binomial(long double n, long double k) {
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

double expected_x2_exact(std::size_t n, std::size_t r) {
    if (r < 2 || r + 2 > n) {
        throw std::invalid_argument("expected_x2_exact needs 2 <= r <= n-2 (n = " +
                                    std::to_string(n) + ", r = " + std::to_string(r) + ")");
    }
    const long double m = exact_choose(n - 2, r - 1);
    const long double log_value = std::log(exact_choose(n, 2)) + log_binomial(2 * m, m) -
                                  2 * m * kLn2;
    return static_cast<double>(std::exp(log_value));
}

double expected_x2_asymptotic(std::size_t n, std::size_t r) {
    if (r < 3) {
        throw std::invalid_argument("expected_x2_asymptotic needs r >= 3");
    }
    const long double fact = std::tgamma(static_cast<long double>(r));  // (r-1)!
    const long double exponent = 2.0L - static_cast<long double>(r - 1) / 2.0L;
    return static_cast<double>(std::sqrt(fact) / (2 * std::sqrt(kPi)) *
                               std::pow(static_cast<long double>(n), exponent));
}

AsymptoticOrders asymptotic_orders(std::size_t n, std::size_t r) {
    const double nn = static_cast<double>(n);
    const double rr = static_cast<double>(r);
    AsymptoticOrders o;
    o.x3 = std::pow(nn, 4.0 - rr);
    o.x4 = std::pow(nn, 4.0 - 3.0 * (rr - 1.0) / 2.0);
    o.x3_edges = static_cast<double>(exact_choose(n, 3)) * 2.0 /
                 (std::numbers::pi * std::sqrt(3.0) * nn * nn);
    return o;
}

double poisson_reference() {
    return std::exp(-std::sqrt(6.0 / std::numbers::pi));
}

long double binomial_power_sum(std::size_t m, std::size_t k) {
    long double sum = 0;
    for (std::size_t i = 0; i <= m; ++i) {
        sum += std::pow(exact_choose(m, i), static_cast<long double>(k));
    }
    return sum;
}

long double binomial_power_sum_asymptotic(std::size_t m, std::size_t k) {
    const long double mm = static_cast<long double>(m);
    const long double kk = static_cast<long double>(k);
    const long double base = std::pow(2.0L, mm) * std::sqrt(2 / (kPi * mm));
    return std::pow(base, kk) * std::sqrt(kPi * mm / (2 * kk));
}

long double central_binomial(std::size_t m) {
    return exact_choose(m, m / 2);
}

long double central_binomial_asymptotic(std::size_t m) {
    const long double mm = static_cast<long double>(m);
    return std::pow(2.0L, mm + 0.5L) / std::sqrt(kPi * mm);
}

}  // namespace hyperweight
