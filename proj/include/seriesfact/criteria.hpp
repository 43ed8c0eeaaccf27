#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seriesfact/rings.hpp"
#include "seriesfact/series.hpp"

namespace seriesfact {

/** Scan bounds for the coefficient-window criteria. */
struct Config {
    std::size_t valuation_scan = 256;      // J: indices probed for the upper bound
    std::size_t pattern_period_bound = 64; // M: staircase periods tried
    std::size_t zero_valuation_scan = 512; // D: search horizon for v(a_n) = 0
    std::size_t zpower_probe = 1024;       // leading-zero window before giving up
};

/** One criterion that fired, with its witness data as printable strings. */
struct CriterionHit {
    std::string name;
    std::map<std::string, std::string> params;
};

enum class VerdictStatus { Unit, Irreducible, ExactCount, Bounds, Unknown };

std::string status_name(VerdictStatus s);

/**
 * Result of analyzing f = z^t * f' with f'(0) != 0. The status and the
 * factor-count bounds describe f'; z is itself prime, so the z-power adds
 * z_power further factors on top of whatever is reported.
 *
 * Status resolution: lower == upper gives ExactCount (Irreducible when that
 * count is 1, Unit when 0); a certain lower bound >= 2 with slack gives
 * Bounds; otherwise Unknown, still carrying any bounds that were found.
 */
struct Verdict {
    VerdictStatus status = VerdictStatus::Unknown;
    std::size_t z_power = 0;
    std::optional<unsigned long> lower, upper;
    std::vector<CriterionHit> criteria; // every criterion that fired
    std::vector<std::string> notes;
    std::size_t window = 0; // highest coefficient index of f examined
};

// Valuation choice for Q[y] coefficients; `degree` is the experimental
// non-ultrametric mode and taints verdicts with a note.
enum class PolyValuationMode { y_adic, degree };

/**
 * Witness searches shared by the single- and multi-prime criteria. All
 * operate on a z-stripped series (nonzero constant term) with k = v(a_0).
 */

// Least n <= scan with v(a_n) = 0 such that gcd(k, n) = 1 and every interior
// point lies strictly above the segment (0,k)-(n,0). The least
// zero-valuation index is the only possible n, so failure there is final.
std::optional<std::size_t> dumas_witness(const Series& f, const Valuation& v,
                                         const Int& k, std::size_t scan);

// Least j <= scan with v(a_j) = 0 such that gcd(k, j) = 1 and v(a_i) >= k
// for all 0 < i < j.
std::optional<std::size_t> eisenstein_witness(const Series& f,
                                              const Valuation& v, const Int& k,
                                              std::size_t scan);

// Least period m <= bound whose staircase matches exactly:
// v(a_{(k-l)m+i}) = l for l = 1..k, i = 1..m, and v(a_{k*m+1}) = 0.
std::optional<std::size_t> pattern_witness(const Series& f, const Valuation& v,
                                           const Int& k, std::size_t bound);

/**
 * Individual criteria. Each returns the hit that fired, or nullopt. They
 * expect a z-stripped series and, where a ConstantFactorization appears, a
 * factorization of its constant term.
 */

// omega = 1 only: a_0 = u p^k is irreducible when k = 1, or when p does not
// divide a_1.
std::optional<CriterionHit> check_prime_power_basic(
    const Series& f, const ConstantFactorization& fact);

// Unconditional bounds omega(a_0) <= count <= bigomega(a_0); square-free
// constant terms pin the count to omega exactly.
CriterionHit bounds_from_constant(const ConstantFactorization& fact);

// omega >= 2: when no prime of a_0 divides a_1, the count is exactly
// omega(a_0). a_1 = 0 never qualifies (every prime divides 0).
std::optional<CriterionHit> check_coprime_a1(const Series& f,
                                             const ConstantFactorization& fact);

// Valuation upper bound min_j (v(a_j) + j), scanned for j <= J; each probed
// index is a valid bound on its own, so the truncated scan stays sound.
struct ValuationBound {
    CriterionHit hit;
    Int bound;
};
ValuationBound upper_bound_valuation(const Series& f, const Valuation& v,
                                     const Config& cfg);

// omega = 1, integer coefficients: exact staircase of p-valuations.
std::optional<CriterionHit> check_pattern(const Series& f,
                                          const ConstantFactorization& fact,
                                          const Config& cfg);

// omega = 1, integer coefficients: Eisenstein-type window with gcd(k, j) = 1.
std::optional<CriterionHit> check_gcd_eisenstein(
    const Series& f, const ConstantFactorization& fact, const Config& cfg);

// Single-edge criterion for any discrete valuation with v(a_0) = k >= 1.
std::optional<CriterionHit> check_dumas(const Series& f, const Valuation& v,
                                        const Config& cfg);

// omega >= 2: a per-prime single-edge witness for every prime of a_0 pins
// the count to exactly omega(a_0). When every witness also matches the
// Eisenstein (resp. staircase) shape, the hit is reported under the
// preset name "multi-prime-eisenstein" (resp. "multi-prime-pattern").
std::optional<CriterionHit> check_multi_prime(
    const Series& f, const ConstantFactorization& fact, const Config& cfg);

/**
 * Full pipeline: strips the z-power, classifies the constant term, then
 * runs every criterion applicable to the coefficient ring, recording all
 * hits (no short-circuiting).
 *
 * Errors propagate: IndeterminateError (no nonzero coefficient within the
 * probe window), OversizeError (constant term too large to factor).
 */
Verdict analyze(const Series& f, const Config& cfg = {},
                PolyValuationMode mode = PolyValuationMode::y_adic);

} // namespace seriesfact
