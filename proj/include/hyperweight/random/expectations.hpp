#pragma once

#include <cstddef>

namespace hyperweight {

/**
 * E(X_2) for H^(r)(n, 1/2): C(n,2) * C(2m, m) * 2^(-2m) with m = C(n-2, r-1),
 * the number of potential edges through one vertex of a pair but not the
 * other. Evaluated in log space with lgamma. Requires 2 <= r <= n-2.
 */
double expected_x2_exact(std::size_t n, std::size_t r);

/// Leading-order form sqrt((r-1)!) / (2 sqrt(pi)) * n^(2 - (r-1)/2). Requires r >= 3.
double expected_x2_asymptotic(std::size_t n, std::size_t r);

/// Leading orders used only as sanity ratios.
struct AsymptoticOrders {
    double x3 = 0;        // n^(4-r)
    double x4 = 0;        // n^(4 - 3(r-1)/2)
    double x3_edges = 0;  // C(n,3) * 2 / (pi sqrt(3) n^2), the r = 3 edge count
};

AsymptoticOrders asymptotic_orders(std::size_t n, std::size_t r);

/// exp(-sqrt(6/pi)): limiting probability that H^(5)(n, 1/2) is strongly 1-weighted.
double poisson_reference();

/// log C(n, k) via lgamma.
long double log_binomial(long double n, long double k);

// Binomial-sum approximations and their exact counterparts, checked
// against each other at moderate m.
long double binomial_power_sum(std::size_t m, std::size_t k);             // sum_i C(m,i)^k
long double binomial_power_sum_asymptotic(std::size_t m, std::size_t k);  // (2^m sqrt(2/(pi m)))^k sqrt(pi m / (2k))
long double central_binomial(std::size_t m);                               // C(m, floor(m/2))
long double central_binomial_asymptotic(std::size_t m);                    // 2^(m+1/2) / sqrt(pi m)

}  // namespace hyperweight
