#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <seriesfact/errors.hpp>
#include <seriesfact/numbers.hpp>

namespace seriesfact {

// Supported coefficient rings. All three are principal ideal domains with
// decidable divisibility; `integers` and `gaussian` additionally support
// constant-term factorization.
enum class RingTag { integers, gaussian, polyq };

std::string ring_name(RingTag tag);

/**
 * Gaussian integer a + b*i with exact integer components.
 * Units are 1, -1, i, -i (norm 1). The canonical associate of a nonzero
 * element is the rotation into the half-open first quadrant: re > 0, im >= 0.
 */
class GaussianInt {
public:
    GaussianInt() = default;
    GaussianInt(Int re, Int im) : re_(std::move(re)), im_(std::move(im)) {}

    const Int& re() const { return re_; }
    const Int& im() const { return im_; }

    Int norm() const { return re_ * re_ + im_ * im_; }
    GaussianInt conj() const { return {re_, -im_}; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_unit() const { return norm() == 1; }

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    GaussianInt operator-() const { return {-re_, -im_}; }
    bool operator==(const GaussianInt&) const = default;

private:
    Int re_ = 0, im_ = 0;
};

/**
 * Polynomial over Q in one variable y, dense coefficients ascending by
 * degree, canonical form has no zero high-order coefficients. The units of
 * Q[y] are the nonzero constants.
 */
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolyQ constant(Rat v);

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_unit() const { return c_.size() == 1; }
    // pre: nonzero
    std::size_t degree() const;
    // index of the lowest nonzero coefficient; pre: nonzero
    std::size_t low_order() const;

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    PolyQ operator-() const;
    bool operator==(const PolyQ&) const = default;

private:
    void trim();
    std::vector<Rat> c_;
};

/**
 * One element of one of the supported rings. The tag is implicit in the
 * active variant alternative. Binary operations require matching rings and
 * throw RingMismatchError otherwise.
 */
class RingElem {
public:
    static RingElem integer(Int v) { return RingElem(std::move(v)); }
    static RingElem gaussian(Int re, Int im) { return RingElem(GaussianInt(std::move(re), std::move(im))); }
    static RingElem gaussian(GaussianInt g) { return RingElem(std::move(g)); }
    static RingElem poly(PolyQ p) { return RingElem(std::move(p)); }
    static RingElem zero(RingTag tag);
    static RingElem one(RingTag tag);

    RingTag ring() const { return static_cast<RingTag>(v_.index()); }

    bool is_zero() const;
    bool is_unit() const;
    // multiplicative inverse; pre: is_unit()
    RingElem unit_inverse() const;

    const Int& as_int() const;
    const GaussianInt& as_gaussian() const;
    const PolyQ& as_poly() const;

    friend RingElem operator+(const RingElem& a, const RingElem& b);
    friend RingElem operator-(const RingElem& a, const RingElem& b);
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    RingElem operator-() const;
    bool operator==(const RingElem&) const = default;

    std::string str() const;

private:
    explicit RingElem(Int v) : v_(std::move(v)) {}
    explicit RingElem(GaussianInt v) : v_(std::move(v)) {}
    explicit RingElem(PolyQ v) : v_(std::move(v)) {}
    std::variant<Int, GaussianInt, PolyQ> v_;
};

// Exact divisibility d | a (nonzero d). Quotient form returns nullopt when
// d does not divide a exactly.
bool divides(const RingElem& d, const RingElem& a);
std::optional<RingElem> exact_quotient(const RingElem& a, const RingElem& d);

// a = u*b for a unit u. Zero is associate only to zero.
bool is_associate(const RingElem& a, const RingElem& b);

// The distinguished associate: positive for integers, half-open first
// quadrant (re > 0, im >= 0) for Gaussian integers, monic for Q[y].
RingElem canonical_associate(const RingElem& a);

/** Bezout data: g = gcd(a, b) in canonical-associate form, with u*a + v*b = g. */
struct ExtGcd {
    RingElem g, u, v;
};

// Extended Euclid over Z or Z[i]. Errors: both inputs zero ("gcd
// undefined"); Q[y] operands ("unsupported ring for gcd").
ExtGcd ext_gcd(const RingElem& a, const RingElem& b);

/**
 * Factorization of a nonzero constant: unit * prod(p_i^k_i) with pairwise
 * nonassociate primes in canonical-associate form, ordered ascending (by
 * value over Z, by (norm, re, im) over Z[i]).
 */
struct ConstantFactorization {
    RingElem unit;
    std::vector<std::pair<RingElem, unsigned long>> factors;

    std::size_t omega() const { return factors.size(); }
    unsigned long big_omega() const;
    bool square_free() const;
    RingElem value() const;
};

// Factor a constant over Z or Z[i]. A unit input yields an empty factor
// list. Errors: zero ("zero has no factorization"); Q[y] ("unsupported ring
// for factorization"); |a| resp. norm(a) beyond 10^18 (OversizeError).
ConstantFactorization factor_constant(const RingElem& a);

// Distinct-prime and with-multiplicity factor counts of a nonzero nonunit.
std::size_t omega(const RingElem& a);
unsigned long big_omega(const RingElem& a);

/** A valuation value: a nonnegative integer, or +infinity (for 0). */
class ValValue {
public:
    static ValValue infinity() { return ValValue(); }
    explicit ValValue(Int v) : v_(std::move(v)), inf_(false) {}
    explicit ValValue(long v) : v_(v), inf_(false) {}

    bool is_infinite() const { return inf_; }
    // pre: finite
    const Int& finite() const;

    friend bool operator==(const ValValue& a, const ValValue& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator<(const ValValue& a, const ValValue& b) {
        if (a.inf_) return false;
        return b.inf_ || a.v_ < b.v_;
    }
    friend bool operator<=(const ValValue& a, const ValValue& b) { return !(b < a); }
    friend ValValue operator+(const ValValue& a, const ValValue& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ValValue(a.v_ + b.v_);
    }
    std::string str() const;

private:
    ValValue() : inf_(true) {}
    Int v_;
    bool inf_;
};

/**
 * A discrete valuation usable for polygon and criterion computations.
 *
 *  - p_adic(p): multiplicity of the prime p, over Z or Z[i].
 *  - y_adic(): order of vanishing at y = 0, over Q[y]. A genuine discrete
 *    valuation with uniformizer y.
 *  - degree_experimental(): deg(a) for nonzero a over Q[y]. This is the
 *    negative of the valuation at infinity and is NOT itself a valuation
 *    (deg(a+b) >= min(deg a, deg b) can fail); results derived through it
 *    are flagged experimental by callers.
 */
class Valuation {
public:
    enum class Kind { p_adic, y_adic, degree };

    // Validates primality of p; throws std::invalid_argument otherwise.
    static Valuation p_adic(RingElem p);
    static Valuation y_adic();
    static Valuation degree_experimental();

    Kind kind() const { return kind_; }
    // pre: kind() == p_adic
    const RingElem& prime() const;
    RingTag ring() const;
    bool experimental() const { return kind_ == Kind::degree; }

    ValValue operator()(const RingElem& a) const;
    std::string str() const;

private:
    Valuation(Kind k, std::optional<RingElem> p) : kind_(k), prime_(std::move(p)) {}
    Kind kind_;
    std::optional<RingElem> prime_;
};

// Free-function form of applying a valuation.
inline ValValue valuation_of(const RingElem& a, const Valuation& v) { return v(a); }

// Deterministic Miller-Rabin, exact for every n below 3.3e24.
bool is_prime_int(const Int& n);
bool is_gaussian_prime(const GaussianInt& g);

} // namespace seriesfact
