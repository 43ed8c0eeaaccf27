#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "seriesfact/rings.hpp"
#include "seriesfact/series.hpp"

namespace seriesfact {

/**
 * One coprime split f = left * right. The correction series g has g(0) = 0
 * and is shared by both factors: left = m + v*g, right = n + u*g, with
 * u*m + v*n = 1. Its coefficients satisfy
 *   b_i = a_i - u*v * sum_{t=1..i-1} b_t b_{i-t},
 * so the split is exact at every order, not an approximation.
 */
struct SplitResult {
    Series left, right;
    Series g;
    RingElem u, v;
};

// Splits f with f(0) = m*n into factors with constant terms m and n.
// Requires gcd(m, n) to be a unit; Bezout data is computed internally.
// Errors: std::invalid_argument on constant-term mismatch or non-coprime
// m, n; ext_gcd's errors pass through (e.g. over Q[y] use the explicit
// overload).
SplitResult split_coprime(const Series& f, const RingElem& m,
                          const RingElem& n);

// Same, with caller-supplied Bezout coefficients; u*m + v*n must be 1.
SplitResult split_coprime(const Series& f, const RingElem& m,
                          const RingElem& n, const RingElem& u,
                          const RingElem& v);

// Splits f into one factor per distinct prime of its constant term, left to
// right in the factorization's prime order; the unit is absorbed into the
// first factor. Requires fact.value() == f(0) and fact.omega() >= 2.
std::vector<Series> split_by_primes(const Series& f,
                                    const ConstantFactorization& fact);

// Convenience form that factors f(0) itself (over Z or Z[i]).
std::vector<Series> split_by_primes(const Series& f);

// Least index <= order where f and the product of the factors differ.
std::optional<std::size_t> first_product_mismatch(
    const Series& f, const std::vector<Series>& factors, std::size_t order);

// True when the product of the factors reproduces f through the given order.
bool verify_product(const Series& f, const std::vector<Series>& factors,
                    std::size_t order);

} // namespace seriesfact
