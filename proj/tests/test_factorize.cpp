#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "seriesfact/errors.hpp"
#include "seriesfact/factorize.hpp"
#include "seriesfact/rings.hpp"
#include "seriesfact/series.hpp"
#include "seriesfact/sparser.hpp"

using namespace seriesfact;

namespace {

RingElem zz(long v) { return RingElem::integer(Int(v)); }
RingElem zi(long re, long im) {
    return RingElem::gaussian(GaussianInt(Int(re), Int(im)));
}

Series zser(std::initializer_list<long> cs) {
    std::vector<RingElem> v;
    for (long c : cs) v.push_back(zz(c));
    return Series::from_coefficients(RingTag::integers, std::move(v));
}

std::mt19937 rng(0xFAC70u);

RingElem random_nonzero(RingTag ring) {
    std::uniform_int_distribution<long> small(-20, 20);
    for (;;) {
        RingElem c = ring == RingTag::integers
                         ? zz(small(rng))
                         : zi(small(rng), small(rng));
        if (!c.is_zero()) return c;
    }
}

} // namespace

TEST_CASE("split of 6+z with explicit Bezout data") {
    Series f = zser({6, 1});
    SplitResult s = split_coprime(f, zz(2), zz(3), zz(2), zz(-1));

    // correction series: b_1 = 1 and b_i = 2 * sum_{t=1..i-1} b_t b_{i-t}
    CHECK(s.g.coeff(0) == zz(0));
    CHECK(s.g.coeff(1) == zz(1));
    CHECK(s.g.coeff(2) == zz(2));
    CHECK(s.g.coeff(3) == zz(8));
    CHECK(s.g.coeff(4) == zz(40));

    CHECK(s.left.coeff(0) == zz(2));
    CHECK(s.left.coeff(1) == zz(-1));
    CHECK(s.left.coeff(2) == zz(-2));
    CHECK(s.left.coeff(3) == zz(-8));
    CHECK(s.left.coeff(4) == zz(-40));

    CHECK(s.right.coeff(0) == zz(3));
    CHECK(s.right.coeff(1) == zz(2));
    CHECK(s.right.coeff(2) == zz(4));
    CHECK(s.right.coeff(3) == zz(16));
    CHECK(s.right.coeff(4) == zz(80));

    CHECK(verify_product(f, {s.left, s.right}, 64));
}

TEST_CASE("split with internal Bezout data") {
    Series f = zser({6, 1});
    SplitResult s = split_coprime(f, zz(2), zz(3));
    CHECK(s.left.coeff(0) == zz(2));
    CHECK(s.right.coeff(0) == zz(3));
    CHECK(s.u * zz(2) + s.v * zz(3) == zz(1));
    CHECK(verify_product(f, {s.left, s.right}, 64));

    SplitResult t = split_coprime(f, zz(3), zz(2));
    CHECK(t.left.coeff(0) == zz(3));
    CHECK(t.right.coeff(0) == zz(2));
    CHECK(verify_product(f, {t.left, t.right}, 64));

    SplitResult m = split_coprime(f, zz(-2), zz(-3));
    CHECK(m.left.coeff(0) == zz(-2));
    CHECK(verify_product(f, {m.left, m.right}, 48));
}

TEST_CASE("split rejections") {
    Series f = zser({6, 1});
    CHECK_THROWS_AS(split_coprime(f, zz(2), zz(3), zz(1), zz(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(split_coprime(f, zz(2), zz(2)), std::invalid_argument);
    CHECK_THROWS_AS(split_coprime(zser({4, 1}), zz(2), zz(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(split_coprime(f, zz(1), zz(5)), std::invalid_argument);
}

TEST_CASE("random verified splits over Z and Z[i]") {
    for (RingTag ring : {RingTag::integers, RingTag::gaussian}) {
        int done = 0;
        while (done < 150) {
            RingElem m = random_nonzero(ring);
            RingElem n = random_nonzero(ring);
            ExtGcd e = ext_gcd(m, n);
            if (!e.g.is_unit()) continue;

            std::vector<RingElem> cs{m * n};
            std::uniform_int_distribution<long> small(-9, 9);
            std::uniform_int_distribution<std::size_t> deg(1, 6);
            std::size_t d = deg(rng);
            for (std::size_t j = 0; j < d; ++j) {
                cs.push_back(ring == RingTag::integers
                                 ? zz(small(rng))
                                 : zi(small(rng), small(rng)));
            }
            Series f = Series::from_coefficients(ring, std::move(cs));
            SplitResult s = split_coprime(f, m, n);
            CHECK(s.left.coeff(0) == m);
            CHECK(s.right.coeff(0) == n);
            CHECK(s.g.coeff(0).is_zero());
            REQUIRE(verify_product(f, {s.left, s.right}, 48));
            ++done;
        }
    }
}

TEST_CASE("splitting along the primes of the constant term") {
    SUBCASE("30 + z spreads over 2, 3, 5") {
        Series f = zser({30, 1});
        std::vector<Series> parts = split_by_primes(f);
        REQUIRE(parts.size() == 3);
        CHECK(parts[0].coeff(0) == zz(2));
        CHECK(parts[1].coeff(0) == zz(3));
        CHECK(parts[2].coeff(0) == zz(5));
        CHECK(verify_product(f, parts, 40));
    }

    SUBCASE("the unit is absorbed into the first factor") {
        Series f = zser({-30, 1});
        std::vector<Series> parts = split_by_primes(f);
        REQUIRE(parts.size() == 3);
        CHECK(parts[0].coeff(0) == zz(-2));
        CHECK(parts[1].coeff(0) == zz(3));
        CHECK(parts[2].coeff(0) == zz(5));
        CHECK(verify_product(f, parts, 40));
    }

    SUBCASE("gaussian constant terms") {
        Series f = parse_expression("5+z", RingTag::gaussian)->eval();
        std::vector<Series> parts = split_by_primes(f);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].coeff(0) == zi(2, -1)); // -i * (1+2i)
        CHECK(parts[1].coeff(0) == zi(2, 1));
        CHECK(verify_product(f, parts, 40));

        Series g = parse_expression("6+z", RingTag::gaussian)->eval();
        std::vector<Series> gparts = split_by_primes(g);
        REQUIRE(gparts.size() == 2);
        CHECK(gparts[0].coeff(0) == zi(2, 0)); // -i * (1+i)^2
        CHECK(gparts[1].coeff(0) == zi(3, 0));
        CHECK(verify_product(g, gparts, 40));
    }

    SUBCASE("prime-power and unit constant terms are refused") {
        CHECK_THROWS_AS(split_by_primes(zser({4, 1})), std::invalid_argument);
        CHECK_THROWS_AS(split_by_primes(zser({1, 1})), std::invalid_argument);
        CHECK_THROWS_AS(split_by_primes(zser({17, 1})), std::invalid_argument);
    }

    SUBCASE("mismatched factorization data is refused") {
        ConstantFactorization fact = factor_constant(zz(30));
        CHECK_THROWS_AS(split_by_primes(zser({6, 1}), fact),
                        std::invalid_argument);
    }
}

TEST_CASE("product verification locates the first mismatch") {
    Series f = zser({6, 1});
    SplitResult s = split_coprime(f, zz(2), zz(3));
    CHECK_FALSE(first_product_mismatch(f, {s.left, s.right}, 64).has_value());

    // Perturb one coefficient of one factor.
    Series bumped = s.left + zser({0, 0, 0, 1});
    std::optional<std::size_t> at =
        first_product_mismatch(f, {bumped, s.right}, 64);
    REQUIRE(at.has_value());
    CHECK(*at == 3);
    CHECK_FALSE(verify_product(f, {bumped, s.right}, 64));
}

TEST_CASE("explicit Bezout data extends the split to Q[y] constants") {
    Series f = parse_expression("6 + [y]*z + z^2", RingTag::polyq)->eval();
    RingElem two = RingElem::poly(PolyQ::constant(Rat(2)));
    RingElem three = RingElem::poly(PolyQ::constant(Rat(3)));
    RingElem half = RingElem::poly(PolyQ::constant(Rat(1, 2)));
    RingElem zero = RingElem::zero(RingTag::polyq);
    SplitResult s = split_coprime(f, two, three, half, zero);
    CHECK(s.left.coeff(0) == two);
    CHECK(s.right.coeff(0) == three);
    CHECK(verify_product(f, {s.left, s.right}, 32));
}
