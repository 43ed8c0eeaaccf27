#include "seriesfact/sparser.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "seriesfact/errors.hpp"

namespace seriesfact {

namespace {

constexpr unsigned long kMaxExponent = 1000000000ul;

struct Token {
    enum class Kind {
        constant,
        variable,
        inv,
        plus,
        minus,
        star,
        caret,
        lparen,
        rparen,
        end
    };

    Kind kind;
    std::size_t pos;
    std::optional<RingElem> value; // constant
    std::optional<Int> plain_int;  // set when the constant was a bare integer
};

bool is_standalone(const std::string& s, std::size_t pos) {
    return pos + 1 >= s.size() || !std::isalnum(static_cast<unsigned char>(s[pos + 1]));
}

class Lexer {
public:
    Lexer(const std::string& text, RingTag ring) : s_(text), ring_(ring) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_ws();
            if (p_ >= s_.size()) {
                out.push_back({Token::Kind::end, p_, {}, {}});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    void skip_ws() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }

    char peek() const { return p_ < s_.size() ? s_[p_] : '\0'; }

    Token next() {
        std::size_t start = p_;
        char c = peek();
        switch (c) {
            case '+': ++p_; return {Token::Kind::plus, start, {}, {}};
            case '-': ++p_; return {Token::Kind::minus, start, {}, {}};
            case '*': ++p_; return {Token::Kind::star, start, {}, {}};
            case '^': ++p_; return {Token::Kind::caret, start, {}, {}};
            case '(': ++p_; return {Token::Kind::lparen, start, {}, {}};
            case ')': ++p_; return {Token::Kind::rparen, start, {}, {}};
            case '[':
                if (ring_ != RingTag::polyq) {
                    throw ParseError("bracketed polynomial literals need the "
                                     "Q[y] coefficient ring", start);
                }
                return poly_literal();
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return ring_ == RingTag::gaussian ? gaussian_literal() : integer_literal();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return word();
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

    // Accumulates digits directly: leading zeros stay decimal ("08" is 8,
    // not a failed octal literal).
    Int read_nat() {
        Int n = 0;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
            n *= 10;
            n += s_[p_] - '0';
            ++p_;
        }
        return n;
    }

    Token integer_literal() {
        std::size_t start = p_;
        Int n = read_nat();
        RingElem v = RingElem::zero(ring_);
        switch (ring_) {
            case RingTag::integers: v = RingElem::integer(n); break;
            case RingTag::gaussian: v = RingElem::gaussian(n, 0); break;
            case RingTag::polyq: v = RingElem::poly(PolyQ::constant(Rat(n))); break;
        }
        return {Token::Kind::constant, start, v, n};
    }

    // Maximal munch of INT, INT [+-] INT? i, INT i. Whitespace inside the
    // literal is insignificant ("4 + 3 i" is one constant); when the munch
    // fails past the leading integer the cursor backtracks to it.
    Token gaussian_literal() {
        std::size_t start = p_;
        Int re = read_nat();
        std::size_t after_int = p_;
        skip_ws();
        if (peek() == 'i' && is_standalone(s_, p_)) {
            ++p_;
            return {Token::Kind::constant, start,
                    RingElem::gaussian(Int(0), re), {}};
        }
        if (peek() == '+' || peek() == '-') {
            bool neg = peek() == '-';
            ++p_;
            skip_ws();
            Int im = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                im = read_nat();
                skip_ws();
            }
            if (peek() == 'i' && is_standalone(s_, p_)) {
                ++p_;
                return {Token::Kind::constant, start,
                        RingElem::gaussian(re, neg ? -im : im), {}};
            }
        }
        p_ = after_int;
        return {Token::Kind::constant, start, RingElem::gaussian(re, 0), re};
    }

    // '[' ('-')? rterm (('+'|'-') rterm)* ']' with
    // rterm := RAT ('*'? 'y' ('^' NAT)?)? | 'y' ('^' NAT)?
    // RAT   := NAT ('/' NAT)?
    Token poly_literal() {
        std::size_t start = p_;
        ++p_; // '['
        std::vector<Rat> coeffs;
        auto add = [&coeffs](std::size_t deg, const Rat& c) {
            if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rat(0));
            coeffs[deg] += c;
        };
        bool first = true;
        for (;;) {
            skip_ws();
            bool neg = false;
            if (first) {
                if (peek() == '-') { neg = true; ++p_; skip_ws(); }
            } else {
                if (peek() == ']') { ++p_; break; }
                if (peek() == '+') { ++p_; }
                else if (peek() == '-') { neg = true; ++p_; }
                else throw ParseError("expected '+', '-' or ']' in polynomial literal", p_);
                skip_ws();
            }
            first = false;
            Rat c(1);
            bool have_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                Int num = read_nat();
                Int den = 1;
                skip_ws();
                if (peek() == '/') {
                    ++p_;
                    skip_ws();
                    if (!std::isdigit(static_cast<unsigned char>(peek())))
                        throw ParseError("expected a denominator", p_);
                    den = read_nat();
                    if (den == 0) throw ParseError("zero denominator", p_);
                    skip_ws();
                }
                c = Rat(num, den);
                have_coeff = true;
                if (peek() == '*') { ++p_; skip_ws(); }
            }
            std::size_t deg = 0;
            if (peek() == 'y') {
                ++p_;
                deg = 1;
                skip_ws();
                if (peek() == '^') {
                    ++p_;
                    skip_ws();
                    if (!std::isdigit(static_cast<unsigned char>(peek())))
                        throw ParseError("expected an exponent after '^'", p_);
                    Int d = read_nat();
                    if (d > 4096) throw ParseError("polynomial degree out of range", p_);
                    deg = static_cast<std::size_t>(d);
                    skip_ws();
                }
            } else if (!have_coeff) {
                throw ParseError("expected a rational or 'y' in polynomial literal", p_);
            }
            add(deg, neg ? -c : c);
        }
        return {Token::Kind::constant, start,
                RingElem::poly(PolyQ(std::move(coeffs))), {}};
    }

    Token word() {
        std::size_t start = p_;
        while (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) ++p_;
        std::string w = s_.substr(start, p_ - start);
        if (w == "z") return {Token::Kind::variable, start, {}, {}};
        if (w == "inv") return {Token::Kind::inv, start, {}, {}};
        if (w == "i") {
            if (ring_ != RingTag::gaussian) {
                throw ParseError("the imaginary unit needs the Gaussian "
                                 "integer coefficient ring", start);
            }
            return {Token::Kind::constant, start,
                    RingElem::gaussian(Int(0), Int(1)), {}};
        }
        if (w == "y") {
            throw ParseError("write polynomial coefficients inside brackets, "
                             "e.g. [y]", start);
        }
        throw ParseError("unknown name '" + w + "'", start);
    }

    const std::string& s_;
    RingTag ring_;
    std::size_t p_ = 0;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, RingTag ring)
        : toks_(std::move(tokens)), ring_(ring) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (cur().kind != Token::Kind::end)
            throw ParseError("unexpected trailing input", cur().pos);
        return e;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    void advance() { ++i_; }

    bool eat(Token::Kind k) {
        if (cur().kind != k) return false;
        advance();
        return true;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (eat(Token::Kind::plus)) {
                e = ExprAst::make_sum(std::move(e), term());
            } else if (eat(Token::Kind::minus)) {
                e = ExprAst::make_difference(std::move(e), term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = unary();
        while (eat(Token::Kind::star)) e = ExprAst::make_product(std::move(e), unary());
        return e;
    }

    ExprPtr unary() {
        if (cur().kind == Token::Kind::minus) {
            advance();
            return ExprAst::make_difference(
                ExprAst::make_constant(RingElem::zero(ring_)), unary());
        }
        return factor();
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (!eat(Token::Kind::caret)) return base;
        const Token& t = cur();
        if (t.kind != Token::Kind::constant || !t.plain_int.has_value())
            throw ParseError("expected a nonnegative integer exponent", t.pos);
        const Int& e = *t.plain_int;
        if (e > kMaxExponent) throw ParseError("exponent out of range", t.pos);
        advance();
        return ExprAst::make_power(std::move(base),
                                   static_cast<unsigned long>(e));
    }

    ExprPtr atom() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::Kind::lparen: {
                advance();
                ExprPtr e = expr();
                if (!eat(Token::Kind::rparen))
                    throw ParseError("expected ')'", cur().pos);
                return e;
            }
            case Token::Kind::inv: {
                advance();
                if (!eat(Token::Kind::lparen))
                    throw ParseError("expected '(' after inv", cur().pos);
                ExprPtr e = expr();
                if (!eat(Token::Kind::rparen))
                    throw ParseError("expected ')'", cur().pos);
                return ExprAst::make_inverse(std::move(e));
            }
            case Token::Kind::constant: {
                ExprPtr e = ExprAst::make_constant(*t.value);
                advance();
                return e;
            }
            case Token::Kind::variable: {
                advance();
                return ExprAst::make_variable(ring_);
            }
            case Token::Kind::end:
                throw ParseError("unexpected end of input", t.pos);
            default:
                throw ParseError("expected a constant, 'z', 'inv' or '('", t.pos);
        }
    }

    std::vector<Token> toks_;
    RingTag ring_;
    std::size_t i_ = 0;
};

void require_matching(const ExprPtr& a, const ExprPtr& b) {
    if (a->ring() != b->ring()) {
        throw RingMismatchError(
            std::string("cannot combine expressions over ") +
            ring_name(a->ring()) + " and " + ring_name(b->ring()));
    }
}

// Rendering precedence: higher binds tighter.
int precedence(const ExprAst& e) {
    switch (e.kind()) {
        case ExprAst::Kind::sum:
        case ExprAst::Kind::difference: return 1;
        case ExprAst::Kind::product: return 2;
        case ExprAst::Kind::power: return 3;
        case ExprAst::Kind::constant: {
            // A constant that prints as a sum, difference or negation needs
            // the same protection as that expression; brackets are already
            // self-delimiting.
            std::string s = e.value().str();
            if (s.front() == '[') return 4;
            if (s.front() == '-') return 1;
            for (std::size_t p = 1; p < s.size(); ++p)
                if (s[p] == '+' || s[p] == '-') return 1;
            return 4;
        }
        default: return 4; // variable, inverse
    }
}

std::string render(const ExprAst& e, int parent_prec) {
    std::string out;
    switch (e.kind()) {
        case ExprAst::Kind::constant: out = e.value().str(); break;
        case ExprAst::Kind::variable: out = "z"; break;
        case ExprAst::Kind::sum:
            out = render(*e.lhs(), 1) + " + " + render(*e.rhs(), 2);
            break;
        case ExprAst::Kind::difference:
            // difference(0, x) is how unary minus is stored; render it back
            // as a prefix sign.
            if (e.lhs()->kind() == ExprAst::Kind::constant &&
                e.lhs()->value().is_zero()) {
                out = "-" + render(*e.rhs(), 2);
            } else {
                out = render(*e.lhs(), 1) + " - " + render(*e.rhs(), 2);
            }
            break;
        case ExprAst::Kind::product:
            out = render(*e.lhs(), 2) + "*" + render(*e.rhs(), 3);
            break;
        case ExprAst::Kind::power:
            out = render(*e.lhs(), 4) + "^" + std::to_string(e.exponent());
            break;
        case ExprAst::Kind::inverse:
            return "inv(" + render(*e.lhs(), 0) + ")";
    }
    if (precedence(e) < parent_prec) return "(" + out + ")";
    return out;
}

} // namespace

ExprPtr ExprAst::make_constant(RingElem v) {
    auto e = std::shared_ptr<ExprAst>(new ExprAst(Kind::constant, v.ring()));
    e->value_ = std::move(v);
    return e;
}

ExprPtr ExprAst::make_variable(RingTag ring) {
    return std::shared_ptr<ExprAst>(new ExprAst(Kind::variable, ring));
}

ExprPtr ExprAst::make_sum(ExprPtr a, ExprPtr b) {
    require_matching(a, b);
    auto e = std::shared_ptr<ExprAst>(new ExprAst(Kind::sum, a->ring()));
    e->lhs_ = std::move(a);
    e->rhs_ = std::move(b);
    return e;
}

ExprPtr ExprAst::make_difference(ExprPtr a, ExprPtr b) {
    require_matching(a, b);
    auto e = std::shared_ptr<ExprAst>(new ExprAst(Kind::difference, a->ring()));
    e->lhs_ = std::move(a);
    e->rhs_ = std::move(b);
    return e;
}

ExprPtr ExprAst::make_product(ExprPtr a, ExprPtr b) {
    require_matching(a, b);
    auto e = std::shared_ptr<ExprAst>(new ExprAst(Kind::product, a->ring()));
    e->lhs_ = std::move(a);
    e->rhs_ = std::move(b);
    return e;
}

ExprPtr ExprAst::make_power(ExprPtr base, unsigned long exponent) {
    auto e = std::shared_ptr<ExprAst>(new ExprAst(Kind::power, base->ring()));
    e->lhs_ = std::move(base);
    e->exponent_ = exponent;
    return e;
}

ExprPtr ExprAst::make_inverse(ExprPtr a) {
    auto e = std::shared_ptr<ExprAst>(new ExprAst(Kind::inverse, a->ring()));
    e->lhs_ = std::move(a);
    return e;
}

const RingElem& ExprAst::value() const { return *value_; }
const ExprPtr& ExprAst::lhs() const { return lhs_; }
const ExprPtr& ExprAst::rhs() const { return rhs_; }
unsigned long ExprAst::exponent() const { return exponent_; }

std::string ExprAst::str() const { return render(*this, 0); }

Series ExprAst::eval() const {
    switch (kind_) {
        case Kind::constant: return Series::constant(*value_);
        case Kind::variable: return Series::variable(ring_);
        case Kind::sum: return lhs_->eval() + rhs_->eval();
        case Kind::difference: return lhs_->eval() - rhs_->eval();
        case Kind::product: return lhs_->eval() * rhs_->eval();
        case Kind::power: return lhs_->eval().pow(exponent_);
        case Kind::inverse: return lhs_->eval().inverse();
    }
    throw std::logic_error("unreachable expression kind");
}

ExprPtr parse_expression(const std::string& text, RingTag ring) {
    Lexer lexer(text, ring);
    Parser parser(lexer.run(), ring);
    return parser.run();
}

} // namespace seriesfact
