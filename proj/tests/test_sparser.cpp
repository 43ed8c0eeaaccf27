#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "seriesfact/errors.hpp"
#include "seriesfact/rings.hpp"
#include "seriesfact/series.hpp"
#include "seriesfact/sparser.hpp"

using namespace seriesfact;

namespace {

RingElem zz(long v) { return RingElem::integer(Int(v)); }
RingElem zi(long re, long im) {
    return RingElem::gaussian(GaussianInt(Int(re), Int(im)));
}

Series evaluate(const std::string& text, RingTag ring = RingTag::integers) {
    return parse_expression(text, ring)->eval();
}

bool same_prefix(const Series& a, const Series& b, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
        if (!(a.coeff(i) == b.coeff(i))) return false;
    return true;
}

} // namespace

TEST_CASE("integer expressions and precedence") {
    Series f = evaluate("6+z");
    CHECK(f.coeff(0) == zz(6));
    CHECK(f.coeff(1) == zz(1));
    CHECK(f.coeff(2) == zz(0));

    Series p = evaluate("(2+z)^4");
    long binom[] = {16, 32, 24, 8, 1, 0};
    for (std::size_t i = 0; i < 6; ++i) CHECK(p.coeff(i) == zz(binom[i]));

    CHECK(evaluate("2*3+z").coeff(0) == zz(6));
    CHECK(evaluate("2*3+z").coeff(1) == zz(1));
    CHECK(evaluate("2*(3+z)").coeff(1) == zz(2));

    // '^' binds tighter than unary '-', which binds tighter than '*'.
    CHECK(evaluate("-2^3+z^2").coeff(0) == zz(-8));
    CHECK(evaluate("-2^3+z^2").coeff(2) == zz(1));
    CHECK(evaluate("-2*3").coeff(0) == zz(-6));
    CHECK(evaluate("2--3").coeff(0) == zz(5));
    CHECK(evaluate("--z").coeff(1) == zz(1));

    CHECK(evaluate(" ( 2 + z ) ^ 2 ").coeff(1) == zz(4));
    CHECK(evaluate("08+z").coeff(0) == zz(8));
    CHECK(evaluate("007").coeff(0) == zz(7));
    CHECK_NOTHROW(parse_expression("z^1000000", RingTag::integers));
}

TEST_CASE("inversion inside expressions") {
    Series g = evaluate("inv(1-z)");
    CHECK(g.coeff(0) == zz(1));
    CHECK(g.coeff(40) == zz(1));

    Series h = evaluate("inv(1-z)^2");
    for (std::size_t i = 0; i < 8; ++i) CHECK(h.coeff(i) == zz(i + 1));

    Series f = evaluate("36+6*z+z^2*inv(1-z)");
    CHECK(f.coeff(0) == zz(36));
    CHECK(f.coeff(1) == zz(6));
    CHECK(f.coeff(2) == zz(1));
    CHECK(f.coeff(3) == zz(1));
    CHECK(f.coeff(17) == zz(1));

    CHECK_NOTHROW(parse_expression("inv(2+z)", RingTag::integers));
    CHECK_THROWS_AS(evaluate("inv(2+z)").coeff(0), NotInvertibleError);
}

TEST_CASE("gaussian literals munch maximally") {
    CHECK(evaluate("4+3i", RingTag::gaussian).coeff(0) == zi(4, 3));
    CHECK(evaluate("4 + 3 i", RingTag::gaussian).coeff(0) == zi(4, 3));
    CHECK(evaluate("4+3i", RingTag::gaussian).coeff(1) == zi(0, 0));
    CHECK(evaluate("3-i", RingTag::gaussian).coeff(0) == zi(3, -1));
    CHECK(evaluate("i", RingTag::gaussian).coeff(0) == zi(0, 1));
    CHECK(evaluate("2i", RingTag::gaussian).coeff(0) == zi(0, 2));
    CHECK(evaluate("1+i", RingTag::gaussian).coeff(0) == zi(1, 1));

    Series f = evaluate("4+3i+z", RingTag::gaussian);
    CHECK(f.coeff(0) == zi(4, 3));
    CHECK(f.coeff(1) == zi(1, 0));

    Series g = evaluate("z+1+2i", RingTag::gaussian);
    CHECK(g.coeff(0) == zi(1, 2));
    CHECK(g.coeff(1) == zi(1, 0));

    // The munch backtracks when no trailing 'i' completes the literal.
    Series h = evaluate("4+3*z", RingTag::gaussian);
    CHECK(h.coeff(0) == zi(4, 0));
    CHECK(h.coeff(1) == zi(3, 0));

    CHECK(evaluate("(1+2i)*(2+i)", RingTag::gaussian).coeff(0) == zi(0, 5));

    // A literal is one token, so '^' applies to all of it; use '*' to
    // exponentiate the imaginary unit alone.
    CHECK(evaluate("2-3i^2", RingTag::gaussian).coeff(0) == zi(-5, -12));
    CHECK(evaluate("2-3*i^2", RingTag::gaussian).coeff(0) == zi(5, 0));
}

TEST_CASE("bracketed polynomial literals") {
    auto pq = [](std::vector<Rat> cs) { return RingElem::poly(PolyQ(std::move(cs))); };

    Series f = evaluate("[1+y]+[1/2]*z", RingTag::polyq);
    CHECK(f.coeff(0) == pq({Rat(1), Rat(1)}));
    CHECK(f.coeff(1) == pq({Rat(1, 2)}));

    CHECK(evaluate("[y]^2", RingTag::polyq).coeff(0) ==
          pq({Rat(0), Rat(0), Rat(1)}));
    CHECK(evaluate("[1/2-3y^2]", RingTag::polyq).coeff(0) ==
          pq({Rat(1, 2), Rat(0), Rat(-3)}));
    CHECK(evaluate("[0]", RingTag::polyq).coeff(0) == pq({}));
    CHECK(evaluate("[-y]", RingTag::polyq).coeff(0) == pq({Rat(0), Rat(-1)}));
    CHECK(evaluate("[2y]", RingTag::polyq).coeff(0) == pq({Rat(0), Rat(2)}));
    CHECK(evaluate("[1/2*y^3]", RingTag::polyq).coeff(0) ==
          pq({Rat(0), Rat(0), Rat(0), Rat(1, 2)}));
    CHECK(evaluate("[1+y]*[1-y]", RingTag::polyq).coeff(0) ==
          pq({Rat(1), Rat(0), Rat(-1)}));
    CHECK(evaluate("2+z", RingTag::polyq).coeff(0) == pq({Rat(2)}));
}

TEST_CASE("parse errors carry positions") {
    auto expect_error = [](const std::string& text, RingTag ring,
                           std::size_t pos) {
        try {
            parse_expression(text, ring);
            FAIL_CHECK("no error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.position == pos);
            CHECK(std::string(e.what()).find("at position") != std::string::npos);
        }
    };

    expect_error("", RingTag::integers, 0);
    expect_error("2+", RingTag::integers, 2);
    expect_error("(2+z", RingTag::integers, 4);
    expect_error("2)", RingTag::integers, 1);
    expect_error("inv 2", RingTag::integers, 4);
    expect_error("z^-1", RingTag::integers, 2);
    expect_error("z^z", RingTag::integers, 2);
    expect_error("q", RingTag::integers, 0);
    expect_error("y", RingTag::polyq, 0);
    expect_error("i", RingTag::integers, 0);
    expect_error("4+3i", RingTag::integers, 3);
    expect_error("[1]", RingTag::integers, 0);
    expect_error("1/2", RingTag::integers, 1);
    expect_error("[1/0]", RingTag::polyq, 4);
    expect_error("z^99999999999", RingTag::integers, 2);
    expect_error("2^(3)", RingTag::integers, 2);
    expect_error("z z", RingTag::integers, 2);
}

TEST_CASE("rendering round-trips") {
    auto round_trip = [](const std::string& text, RingTag ring) {
        ExprPtr first = parse_expression(text, ring);
        std::string printed = first->str();
        ExprPtr second = parse_expression(printed, ring);
        CHECK(second->str() == printed);
        CHECK(same_prefix(first->eval(), second->eval(), 12));
    };

    round_trip("(2+z)^4", RingTag::integers);
    round_trip("-z", RingTag::integers);
    round_trip("2 - z", RingTag::integers);
    round_trip("inv(1-z)", RingTag::integers);
    round_trip("z*(1+z)*(1-z)", RingTag::integers);
    round_trip("-2^3+z^2", RingTag::integers);
    round_trip("(4+3i)*z", RingTag::gaussian);
    round_trip("19^3*(4+3i)+z^7", RingTag::gaussian);
    round_trip("[1+y] + [1/2]*z", RingTag::polyq);
    round_trip("inv([1/2]+z)*[3+y]", RingTag::polyq);

    CHECK(parse_expression("-z", RingTag::integers)->str() == "-z");
    CHECK(parse_expression("2*(3+z)", RingTag::integers)->str() == "2*(3 + z)");
}

TEST_CASE("ast structure is inspectable") {
    ExprPtr e = parse_expression("6+z", RingTag::integers);
    REQUIRE(e->kind() == ExprAst::Kind::sum);
    CHECK(e->ring() == RingTag::integers);
    CHECK(e->lhs()->kind() == ExprAst::Kind::constant);
    CHECK(e->lhs()->value() == zz(6));
    CHECK(e->rhs()->kind() == ExprAst::Kind::variable);

    ExprPtr p = parse_expression("(1+z)^9", RingTag::integers);
    REQUIRE(p->kind() == ExprAst::Kind::power);
    CHECK(p->exponent() == 9);

    CHECK_THROWS_AS(ExprAst::make_sum(ExprAst::make_variable(RingTag::integers),
                                      ExprAst::make_variable(RingTag::gaussian)),
                    RingMismatchError);
}

TEST_CASE("malformed input never escapes as anything but ParseError") {
    const std::string alphabet = "0123456789zi+-*^()[]/y ";
    std::mt19937 rng(0xFEEDu);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<std::size_t> len(0, 30);
    for (RingTag ring :
         {RingTag::integers, RingTag::gaussian, RingTag::polyq}) {
        for (int trial = 0; trial < 1500; ++trial) {
            std::string text;
            std::size_t n = len(rng);
            for (std::size_t j = 0; j < n; ++j) text += alphabet[pick(rng)];
            try {
                parse_expression(text, ring);
            } catch (const ParseError&) {
                // expected for most random strings
            }
        }
    }
    CHECK(true);
}
