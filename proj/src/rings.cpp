#include <seriesfact/rings.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace seriesfact {

namespace {

namespace mp = boost::multiprecision;

const Int kFactorLimit = Int("1000000000000000000"); // 10^18

[[noreturn]] void mismatch() { throw RingMismatchError("ring mismatch"); }

// Floor division for b > 0.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r < 0) --q;
    return q;
}

// Nearest integer to a/b for b > 0, ties toward +infinity.
Int round_div(const Int& a, const Int& b) { return floor_div(2 * a + b, 2 * b); }

// Quotient in Z[i] with remainder of norm at most norm(b)/2.
GaussianInt gaussian_round_div(const GaussianInt& a, const GaussianInt& b) {
    GaussianInt num = a * b.conj();
    Int n = b.norm();
    return {round_div(num.re(), n), round_div(num.im(), n)};
}

std::optional<GaussianInt> gaussian_exact_div(const GaussianInt& a, const GaussianInt& b) {
    GaussianInt num = a * b.conj();
    Int n = b.norm();
    if (num.re() % n != 0 || num.im() % n != 0) return std::nullopt;
    return GaussianInt(num.re() / n, num.im() / n);
}

// Multiply by i^k (k in 0..3).
GaussianInt rotate(const GaussianInt& g, int k) {
    GaussianInt r = g;
    for (int j = 0; j < k; ++j) r = GaussianInt(-r.im(), r.re());
    return r;
}

// Unit u with u*g in the half-open first quadrant, together with u*g.
std::pair<GaussianInt, GaussianInt> gaussian_canonical(const GaussianInt& g) {
    for (int k = 0; k < 4; ++k) {
        GaussianInt c = rotate(g, k);
        if (c.re() > 0 && c.im() >= 0) return {rotate(GaussianInt(1, 0), k), c};
    }
    return {GaussianInt(1, 0), g}; // zero
}

} // namespace

std::string ring_name(RingTag tag) {
    switch (tag) {
        case RingTag::integers: return "int";
        case RingTag::gaussian: return "gauss";
        case RingTag::polyq: return "polyq";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// PolyQ

PolyQ PolyQ::constant(Rat v) {
    PolyQ p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t PolyQ::degree() const {
    if (c_.empty()) throw std::domain_error("degree of zero polynomial");
    return c_.size() - 1;
}

std::size_t PolyQ::low_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    throw std::domain_error("low order of zero polynomial");
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return PolyQ(std::move(c));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return PolyQ(std::move(c));
}

PolyQ PolyQ::operator-() const {
    std::vector<Rat> c = c_;
    for (auto& x : c) x = -x;
    return PolyQ(std::move(c));
}

// ---------------------------------------------------------------------------
// RingElem

RingElem RingElem::zero(RingTag tag) {
    switch (tag) {
        case RingTag::integers: return integer(0);
        case RingTag::gaussian: return gaussian(0, 0);
        case RingTag::polyq: return poly(PolyQ());
    }
    throw std::logic_error("bad ring tag");
}

RingElem RingElem::one(RingTag tag) {
    switch (tag) {
        case RingTag::integers: return integer(1);
        case RingTag::gaussian: return gaussian(1, 0);
        case RingTag::polyq: return poly(PolyQ::constant(1));
    }
    throw std::logic_error("bad ring tag");
}

bool RingElem::is_zero() const {
    if (auto* i = std::get_if<Int>(&v_)) return *i == 0;
    if (auto* g = std::get_if<GaussianInt>(&v_)) return g->is_zero();
    return std::get<PolyQ>(v_).is_zero();
}

bool RingElem::is_unit() const {
    if (auto* i = std::get_if<Int>(&v_)) return *i == 1 || *i == -1;
    if (auto* g = std::get_if<GaussianInt>(&v_)) return g->is_unit();
    return std::get<PolyQ>(v_).is_unit();
}

RingElem RingElem::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("not a unit: " + str());
    if (auto* i = std::get_if<Int>(&v_)) return integer(*i);
    if (auto* g = std::get_if<GaussianInt>(&v_)) return gaussian(g->conj());
    return poly(PolyQ::constant(1 / std::get<PolyQ>(v_).coeffs()[0]));
}

const Int& RingElem::as_int() const {
    if (auto* i = std::get_if<Int>(&v_)) return *i;
    throw RingMismatchError("not an integer element");
}

const GaussianInt& RingElem::as_gaussian() const {
    if (auto* g = std::get_if<GaussianInt>(&v_)) return *g;
    throw RingMismatchError("not a Gaussian integer element");
}

const PolyQ& RingElem::as_poly() const {
    if (auto* p = std::get_if<PolyQ>(&v_)) return *p;
    throw RingMismatchError("not a polynomial element");
}

RingElem operator+(const RingElem& a, const RingElem& b) {
    if (a.ring() != b.ring()) mismatch();
    switch (a.ring()) {
        case RingTag::integers: return RingElem::integer(a.as_int() + b.as_int());
        case RingTag::gaussian: return RingElem::gaussian(a.as_gaussian() + b.as_gaussian());
        case RingTag::polyq: return RingElem::poly(a.as_poly() + b.as_poly());
    }
    throw std::logic_error("bad ring tag");
}

RingElem operator-(const RingElem& a, const RingElem& b) {
    if (a.ring() != b.ring()) mismatch();
    switch (a.ring()) {
        case RingTag::integers: return RingElem::integer(a.as_int() - b.as_int());
        case RingTag::gaussian: return RingElem::gaussian(a.as_gaussian() - b.as_gaussian());
        case RingTag::polyq: return RingElem::poly(a.as_poly() - b.as_poly());
    }
    throw std::logic_error("bad ring tag");
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    if (a.ring() != b.ring()) mismatch();
    switch (a.ring()) {
        case RingTag::integers: return RingElem::integer(a.as_int() * b.as_int());
        case RingTag::gaussian: return RingElem::gaussian(a.as_gaussian() * b.as_gaussian());
        case RingTag::polyq: return RingElem::poly(a.as_poly() * b.as_poly());
    }
    throw std::logic_error("bad ring tag");
}

RingElem RingElem::operator-() const {
    if (auto* i = std::get_if<Int>(&v_)) return integer(-*i);
    if (auto* g = std::get_if<GaussianInt>(&v_)) return gaussian(-*g);
    return poly(-std::get<PolyQ>(v_));
}

std::string RingElem::str() const {
    if (auto* i = std::get_if<Int>(&v_)) return i->str();
    if (auto* g = std::get_if<GaussianInt>(&v_)) {
        if (g->is_zero()) return "0";
        if (g->im() == 0) return g->re().str();
        std::string im = (g->im() == 1) ? "" : (g->im() == -1 ? "-" : g->im().str());
        if (g->re() == 0) return im + "i";
        return g->re().str() + (g->im() > 0 ? "+" : "") + im + "i";
    }
    const PolyQ& p = std::get<PolyQ>(v_);
    if (p.is_zero()) return "[0]";
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
        const Rat& c = p.coeffs()[d];
        if (c == 0) continue;
        Rat abs_c = c < 0 ? Rat(-c) : c;
        if (!first)
            out << (c < 0 ? "-" : "+");
        else if (c < 0)
            out << '-';
        first = false;
        bool unit_coeff = (abs_c == 1) && d > 0;
        if (!unit_coeff) {
            out << numerator(abs_c).str();
            if (denominator(abs_c) != 1) out << '/' << denominator(abs_c).str();
        }
        if (d == 1)
            out << 'y';
        else if (d > 1)
            out << "y^" << d;
    }
    out << ']';
    return out.str();
}

// ---------------------------------------------------------------------------
// Divisibility, associates

std::optional<RingElem> exact_quotient(const RingElem& a, const RingElem& d) {
    if (a.ring() != d.ring()) mismatch();
    if (d.is_zero()) throw std::domain_error("division by zero");
    switch (a.ring()) {
        case RingTag::integers: {
            if (a.as_int() % d.as_int() != 0) return std::nullopt;
            return RingElem::integer(a.as_int() / d.as_int());
        }
        case RingTag::gaussian: {
            auto q = gaussian_exact_div(a.as_gaussian(), d.as_gaussian());
            if (!q) return std::nullopt;
            return RingElem::gaussian(*q);
        }
        case RingTag::polyq:
            // Q[y] has field coefficients, but nothing here needs polynomial
            // division; valuations are computed positionally.
            throw RingMismatchError("exact division unsupported for polyq");
    }
    throw std::logic_error("bad ring tag");
}

bool divides(const RingElem& d, const RingElem& a) { return exact_quotient(a, d).has_value(); }

bool is_associate(const RingElem& a, const RingElem& b) {
    if (a.ring() != b.ring()) mismatch();
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return canonical_associate(a) == canonical_associate(b);
}

RingElem canonical_associate(const RingElem& a) {
    switch (a.ring()) {
        case RingTag::integers:
            return RingElem::integer(mp::abs(a.as_int()));
        case RingTag::gaussian:
            return RingElem::gaussian(gaussian_canonical(a.as_gaussian()).second);
        case RingTag::polyq: {
            const PolyQ& p = a.as_poly();
            if (p.is_zero()) return a;
            std::vector<Rat> c = p.coeffs();
            Rat lead = c.back();
            for (auto& x : c) x /= lead;
            return RingElem::poly(PolyQ(std::move(c)));
        }
    }
    throw std::logic_error("bad ring tag");
}

// ---------------------------------------------------------------------------
// Extended gcd

ExtGcd ext_gcd(const RingElem& a, const RingElem& b) {
    if (a.ring() != b.ring()) mismatch();
    if (a.ring() == RingTag::polyq) throw std::invalid_argument("unsupported ring for gcd");
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd undefined");

    if (a.ring() == RingTag::integers) {
        Int r0 = a.as_int(), r1 = b.as_int();
        Int u0 = 1, u1 = 0, v0 = 0, v1 = 1;
        while (r1 != 0) {
            Int q = r0 / r1;
            Int r2 = r0 - q * r1, u2 = u0 - q * u1, v2 = v0 - q * v1;
            r0 = r1; r1 = r2;
            u0 = u1; u1 = u2;
            v0 = v1; v1 = v2;
        }
        if (r0 < 0) {
            r0 = -r0;
            u0 = -u0;
            v0 = -v0;
        }
        return {RingElem::integer(r0), RingElem::integer(u0), RingElem::integer(v0)};
    }

    GaussianInt r0 = a.as_gaussian(), r1 = b.as_gaussian();
    GaussianInt u0(1, 0), u1(0, 0), v0(0, 0), v1(1, 0);
    while (!r1.is_zero()) {
        GaussianInt q = gaussian_round_div(r0, r1);
        GaussianInt r2 = r0 - q * r1, u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    auto [w, canon] = gaussian_canonical(r0);
    return {RingElem::gaussian(canon), RingElem::gaussian(w * u0), RingElem::gaussian(w * v0)};
}

// ---------------------------------------------------------------------------
// Primality and integer factorization

bool is_prime_int(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // Witness set exact below 3.3e24 (covers the 10^18 input bound).
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = mp::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_gaussian_prime(const GaussianInt& g) {
    Int n = g.norm();
    if (n <= 1) return false;
    if (is_prime_int(n)) return true; // norm 2 or a split/ramified prime
    if (g.re() == 0 || g.im() == 0) {
        Int q = mp::abs(g.re() == 0 ? g.im() : g.re());
        return q % 4 == 3 && is_prime_int(q);
    }
    return false;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's cycle variant; n odd composite, not a prime power check needed.
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int saved_x = x;
        unsigned long power = 1, lam = 0;
        auto step = [&](const Int& v) -> Int { return (v * v + c) % n; };
        y = step(x);
        while (d == 1) {
            if (lam == power) {
                saved_x = y;
                power *= 2;
                lam = 0;
            }
            y = step(y);
            ++lam;
            d = mp::gcd(mp::abs(y - saved_x), n);
        }
        if (d != n) return d;
    }
}

void factor_positive(Int n, std::map<Int, unsigned long>& out) {
    for (Int p = 2; p <= 65536 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_prime_int(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_positive(d, out);
    factor_positive(n / d, out);
}

// x with x^2 = -1 (mod p), for prime p = 1 (mod 4).
Int sqrt_minus_one(const Int& p) {
    Int e = (p - 1) / 2;
    for (Int a = 2;; ++a) {
        if (mp::powm(a, e, p) == p - 1) return mp::powm(a, e / 2, p);
    }
}

// A Gaussian prime of norm p, for rational prime p = 2 or p = 1 (mod 4).
GaussianInt split_prime(const Int& p) {
    if (p == 2) return {1, 1};
    Int x = sqrt_minus_one(p);
    // gcd(p, x + i) in Z[i] has norm p.
    GaussianInt r0(p, 0), r1(x, 1);
    while (!r1.is_zero()) {
        GaussianInt q = gaussian_round_div(r0, r1);
        GaussianInt r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
    }
    return r0;
}

ConstantFactorization factor_int_elem(const Int& a) {
    if (mp::abs(a) > kFactorLimit)
        throw OversizeError("constant-term factorization limited to magnitudes below 10^18; |" +
                            a.str() + "| exceeds it");
    ConstantFactorization fact{RingElem::integer(a < 0 ? -1 : 1), {}};
    if (a == 1 || a == -1) return fact;
    std::map<Int, unsigned long> m;
    factor_positive(mp::abs(a), m);
    for (auto& [p, k] : m) fact.factors.emplace_back(RingElem::integer(p), k);
    return fact;
}

ConstantFactorization factor_gaussian_elem(const GaussianInt& a) {
    if (a.norm() > kFactorLimit)
        throw OversizeError("constant-term factorization limited to norms below 10^18; norm " +
                            a.norm().str() + " exceeds it");
    if (a.is_unit()) return {RingElem::gaussian(a), {}};

    std::map<Int, unsigned long> norm_primes;
    factor_positive(a.norm(), norm_primes);

    std::vector<GaussianInt> candidates;
    for (auto& [q, e] : norm_primes) {
        (void)e;
        if (q == 2) {
            candidates.push_back({1, 1});
        } else if (q % 4 == 3) {
            candidates.push_back({q, 0});
        } else {
            GaussianInt pi = split_prime(q);
            candidates.push_back(pi);
            candidates.push_back(pi.conj());
        }
    }

    GaussianInt rest = a;
    std::vector<std::pair<GaussianInt, unsigned long>> found;
    for (const GaussianInt& raw : candidates) {
        GaussianInt pi = gaussian_canonical(raw).second;
        unsigned long k = 0;
        while (true) {
            auto q = gaussian_exact_div(rest, pi);
            if (!q) break;
            rest = *q;
            ++k;
        }
        if (k > 0) found.emplace_back(pi, k);
    }
    if (!rest.is_unit())
        throw std::logic_error("gaussian factorization left a nonunit cofactor");

    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        Int nx = x.first.norm(), ny = y.first.norm();
        if (nx != ny) return nx < ny;
        if (x.first.re() != y.first.re()) return x.first.re() < y.first.re();
        return x.first.im() < y.first.im();
    });

    ConstantFactorization fact{RingElem::gaussian(rest), {}};
    for (auto& [p, k] : found) fact.factors.emplace_back(RingElem::gaussian(p), k);
    return fact;
}

} // namespace

unsigned long ConstantFactorization::big_omega() const {
    unsigned long total = 0;
    for (auto& [p, k] : factors) {
        (void)p;
        total += k;
    }
    return total;
}

bool ConstantFactorization::square_free() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const auto& f) { return f.second == 1; });
}

RingElem ConstantFactorization::value() const {
    RingElem acc = unit;
    for (auto& [p, k] : factors)
        for (unsigned long i = 0; i < k; ++i) acc = acc * p;
    return acc;
}

ConstantFactorization factor_constant(const RingElem& a) {
    if (a.is_zero()) throw std::domain_error("zero has no factorization");
    switch (a.ring()) {
        case RingTag::integers: return factor_int_elem(a.as_int());
        case RingTag::gaussian: return factor_gaussian_elem(a.as_gaussian());
        case RingTag::polyq: throw std::invalid_argument("unsupported ring for factorization");
    }
    throw std::logic_error("bad ring tag");
}

std::size_t omega(const RingElem& a) {
    if (a.is_zero() || a.is_unit())
        throw std::invalid_argument("factor count defined for nonzero nonunits only");
    return factor_constant(a).omega();
}

unsigned long big_omega(const RingElem& a) {
    if (a.is_zero() || a.is_unit())
        throw std::invalid_argument("factor count defined for nonzero nonunits only");
    return factor_constant(a).big_omega();
}

// ---------------------------------------------------------------------------
// Valuations

const Int& ValValue::finite() const {
    if (inf_) throw std::domain_error("valuation is infinite");
    return v_;
}

std::string ValValue::str() const { return inf_ ? "inf" : v_.str(); }

Valuation Valuation::p_adic(RingElem p) {
    switch (p.ring()) {
        case RingTag::integers:
            if (!is_prime_int(mp::abs(p.as_int())))
                throw std::invalid_argument(p.str() + " is not a prime");
            break;
        case RingTag::gaussian:
            if (!is_gaussian_prime(p.as_gaussian()))
                throw std::invalid_argument(p.str() + " is not a Gaussian prime");
            break;
        case RingTag::polyq:
            throw std::invalid_argument("p-adic valuation unsupported for polyq; use y_adic");
    }
    return Valuation(Kind::p_adic, std::move(p));
}

Valuation Valuation::y_adic() { return Valuation(Kind::y_adic, std::nullopt); }
Valuation Valuation::degree_experimental() { return Valuation(Kind::degree, std::nullopt); }

const RingElem& Valuation::prime() const {
    if (!prime_) throw std::logic_error("valuation has no prime");
    return *prime_;
}

RingTag Valuation::ring() const {
    return kind_ == Kind::p_adic ? prime_->ring() : RingTag::polyq;
}

ValValue Valuation::operator()(const RingElem& a) const {
    if (a.ring() != ring()) mismatch();
    if (a.is_zero()) return ValValue::infinity();
    switch (kind_) {
        case Kind::p_adic: {
            Int count = 0;
            RingElem rest = a;
            while (true) {
                auto q = exact_quotient(rest, *prime_);
                if (!q) break;
                rest = *q;
                ++count;
            }
            return ValValue(count);
        }
        case Kind::y_adic:
            return ValValue(Int(a.as_poly().low_order()));
        case Kind::degree:
            return ValValue(Int(a.as_poly().degree()));
    }
    throw std::logic_error("bad valuation kind");
}

std::string Valuation::str() const {
    switch (kind_) {
        case Kind::p_adic: return "v_" + prime_->str();
        case Kind::y_adic: return "v_y";
        case Kind::degree: return "deg";
    }
    return "?";
}

} // namespace seriesfact
