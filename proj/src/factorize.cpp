#include "seriesfact/factorize.hpp"

#include <stdexcept>
#include <utility>

#include "seriesfact/errors.hpp"

namespace seriesfact {

SplitResult split_coprime(const Series& f, const RingElem& m,
                          const RingElem& n, const RingElem& u,
                          const RingElem& v) {
    RingTag ring = f.ring();
    if (!(u * m + v * n == RingElem::one(ring))) {
        throw std::invalid_argument("u*m + v*n must be 1; got " +
                                    (u * m + v * n).str());
    }
    if (!(f.coeff(0) == m * n)) {
        throw std::invalid_argument(
            "constant term mismatch: series starts with " + f.coeff(0).str() +
            " but m*n = " + (m * n).str());
    }

    RingElem uv = u * v;
    Series g = detail::make_series_from_recurrence(
        ring, [f, uv, ring](std::size_t i,
                            const std::vector<RingElem>& b) -> RingElem {
            if (i == 0) return RingElem::zero(ring);
            RingElem s = RingElem::zero(ring);
            for (std::size_t t = 1; t < i; ++t) s = s + b[t] * b[i - t];
            return f.coeff(i) - uv * s;
        });

    Series left = Series::constant(m) + g.scaled(v);
    Series right = Series::constant(n) + g.scaled(u);
    return SplitResult{std::move(left), std::move(right), std::move(g), u, v};
}

SplitResult split_coprime(const Series& f, const RingElem& m,
                          const RingElem& n) {
    ExtGcd e = ext_gcd(m, n);
    if (!e.g.is_unit()) {
        throw std::invalid_argument(
            "constant-term parts are not coprime: gcd(" + m.str() + ", " +
            n.str() + ") = " + e.g.str());
    }
    // gcd comes back canonical; rescale the identity so it equals exactly 1.
    RingElem w = e.g.unit_inverse();
    return split_coprime(f, m, n, w * e.u, w * e.v);
}

std::vector<Series> split_by_primes(const Series& f,
                                    const ConstantFactorization& fact) {
    if (!(fact.value() == f.coeff(0))) {
        throw std::invalid_argument(
            "factorization describes " + fact.value().str() +
            ", not the constant term " + f.coeff(0).str());
    }
    if (fact.omega() < 2) {
        throw std::invalid_argument(
            "constant term is a unit times a prime power; no coprime split "
            "exists");
    }

    auto prime_power = [](const std::pair<RingElem, unsigned long>& pk) {
        RingElem acc = RingElem::one(pk.first.ring());
        for (unsigned long e = 0; e < pk.second; ++e) acc = acc * pk.first;
        return acc;
    };

    std::vector<Series> out;
    Series remaining = f;
    // Peel one prime power at a time; the unit rides along in the leading
    // factor, so each step splits remaining(0) = m * (rest).
    RingElem lead_unit = fact.unit;
    for (std::size_t j = 0; j + 1 < fact.factors.size(); ++j) {
        RingElem m = lead_unit * prime_power(fact.factors[j]);
        RingElem rest = RingElem::one(f.ring());
        for (std::size_t t = j + 1; t < fact.factors.size(); ++t)
            rest = rest * prime_power(fact.factors[t]);
        SplitResult s = split_coprime(remaining, m, rest);
        out.push_back(s.left);
        remaining = s.right;
        lead_unit = RingElem::one(f.ring());
    }
    out.push_back(remaining);
    return out;
}

std::vector<Series> split_by_primes(const Series& f) {
    return split_by_primes(f, factor_constant(f.coeff(0)));
}

std::optional<std::size_t> first_product_mismatch(
    const Series& f, const std::vector<Series>& factors, std::size_t order) {
    Series prod = Series::one(f.ring());
    for (const Series& factor : factors) prod = prod * factor;
    for (std::size_t i = 0; i <= order; ++i) {
        if (!(prod.coeff(i) == f.coeff(i))) return i;
    }
    return std::nullopt;
}

bool verify_product(const Series& f, const std::vector<Series>& factors,
                    std::size_t order) {
    return !first_product_mismatch(f, factors, order).has_value();
}

} // namespace seriesfact
