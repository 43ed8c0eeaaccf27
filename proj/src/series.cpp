#include "seriesfact/series.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "seriesfact/errors.hpp"

namespace seriesfact {

namespace {

std::atomic<std::size_t> g_memo_limit{std::size_t{1} << 16};

void require_same_ring(const Series& a, const Series& b) {
    if (a.ring() != b.ring()) {
        throw RingMismatchError(std::string("cannot combine a series over ") +
                                ring_name(a.ring()) + " with one over " +
                                ring_name(b.ring()));
    }
}

class PolyNode final : public SeriesNode {
public:
    PolyNode(RingTag ring, std::vector<RingElem> coeffs)
        : SeriesNode(ring), coeffs_(std::move(coeffs)) {}

protected:
    RingElem compute(std::size_t i) override {
        return i < coeffs_.size() ? coeffs_[i] : RingElem::zero(ring());
    }

private:
    std::vector<RingElem> coeffs_;
};

class AddNode final : public SeriesNode {
public:
    AddNode(std::shared_ptr<SeriesNode> a, std::shared_ptr<SeriesNode> b)
        : SeriesNode(a->ring()), a_(std::move(a)), b_(std::move(b)) {}

protected:
    RingElem compute(std::size_t i) override { return a_->at(i) + b_->at(i); }

private:
    std::shared_ptr<SeriesNode> a_, b_;
};

class SubNode final : public SeriesNode {
public:
    SubNode(std::shared_ptr<SeriesNode> a, std::shared_ptr<SeriesNode> b)
        : SeriesNode(a->ring()), a_(std::move(a)), b_(std::move(b)) {}

protected:
    RingElem compute(std::size_t i) override { return a_->at(i) - b_->at(i); }

private:
    std::shared_ptr<SeriesNode> a_, b_;
};

class ScaleNode final : public SeriesNode {
public:
    ScaleNode(RingElem c, std::shared_ptr<SeriesNode> a)
        : SeriesNode(a->ring()), c_(std::move(c)), a_(std::move(a)) {}

protected:
    RingElem compute(std::size_t i) override { return c_ * a_->at(i); }

private:
    RingElem c_;
    std::shared_ptr<SeriesNode> a_;
};

class MulNode final : public SeriesNode {
public:
    MulNode(std::shared_ptr<SeriesNode> a, std::shared_ptr<SeriesNode> b)
        : SeriesNode(a->ring()), a_(std::move(a)), b_(std::move(b)) {}

protected:
    RingElem compute(std::size_t i) override {
        RingElem sum = RingElem::zero(ring());
        for (std::size_t t = 0; t <= i; ++t)
            sum = sum + a_->at(t) * b_->at(i - t);
        return sum;
    }

private:
    std::shared_ptr<SeriesNode> a_, b_;
};

// 1/f for f with unit constant term: b_0 = a_0^{-1},
// b_i = -a_0^{-1} * sum_{t=1..i} a_t b_{i-t}.
class InvertNode final : public SeriesNode {
public:
    InvertNode(RingElem inv0, std::shared_ptr<SeriesNode> a)
        : SeriesNode(a->ring()), inv0_(std::move(inv0)), a_(std::move(a)) {}

protected:
    RingElem compute(std::size_t i) override {
        if (i == 0) return inv0_;
        RingElem sum = RingElem::zero(ring());
        for (std::size_t t = 1; t <= i; ++t)
            sum = sum + a_->at(t) * memo_[i - t];
        return -(inv0_ * sum);
    }

private:
    RingElem inv0_;
    std::shared_ptr<SeriesNode> a_;
};

class ShiftNode final : public SeriesNode {
public:
    ShiftNode(std::size_t k, std::shared_ptr<SeriesNode> a)
        : SeriesNode(a->ring()), k_(k), a_(std::move(a)) {}

protected:
    RingElem compute(std::size_t i) override {
        return i < k_ ? RingElem::zero(ring()) : a_->at(i - k_);
    }

private:
    std::size_t k_;
    std::shared_ptr<SeriesNode> a_;
};

class UnshiftNode final : public SeriesNode {
public:
    UnshiftNode(std::size_t k, std::shared_ptr<SeriesNode> a)
        : SeriesNode(a->ring()), k_(k), a_(std::move(a)) {}

protected:
    RingElem compute(std::size_t i) override { return a_->at(i + k_); }

private:
    std::size_t k_;
    std::shared_ptr<SeriesNode> a_;
};

class RuleNode final : public SeriesNode {
public:
    RuleNode(RingTag ring, std::function<RingElem(std::size_t)> rule)
        : SeriesNode(ring), rule_(std::move(rule)) {}

protected:
    RingElem compute(std::size_t i) override { return rule_(i); }

private:
    std::function<RingElem(std::size_t)> rule_;
};

class RecurrenceNode final : public SeriesNode {
public:
    RecurrenceNode(
        RingTag ring,
        std::function<RingElem(std::size_t, const std::vector<RingElem>&)> rule)
        : SeriesNode(ring), rule_(std::move(rule)) {}

protected:
    RingElem compute(std::size_t i) override { return rule_(i, memo_); }

private:
    std::function<RingElem(std::size_t, const std::vector<RingElem>&)> rule_;
};

} // namespace

std::size_t memo_limit() { return g_memo_limit.load(); }

void set_memo_limit(std::size_t limit) { g_memo_limit.store(limit); }

RingElem SeriesNode::at(std::size_t i) {
    if (i >= memo_limit()) {
        std::ostringstream msg;
        msg << "coefficient index " << i << " exceeds the memo limit "
            << memo_limit();
        throw std::length_error(msg.str());
    }
    std::lock_guard<std::mutex> lock(mu_);
    while (memo_.size() <= i) {
        std::size_t next = memo_.size();
        memo_.push_back(compute(next));
    }
    return memo_[i];
}

Series::Series(std::shared_ptr<SeriesNode> node) : node_(std::move(node)) {}

Series Series::from_coefficients(RingTag ring, std::vector<RingElem> coeffs) {
    for (const RingElem& c : coeffs) {
        if (c.ring() != ring) {
            throw RingMismatchError(
                std::string("coefficient ") + c.str() + " is not over " +
                ring_name(ring));
        }
    }
    return Series(std::make_shared<PolyNode>(ring, std::move(coeffs)));
}

Series Series::constant(const RingElem& c) {
    return from_coefficients(c.ring(), {c});
}

Series Series::zero(RingTag ring) { return from_coefficients(ring, {}); }

Series Series::one(RingTag ring) {
    return from_coefficients(ring, {RingElem::one(ring)});
}

Series Series::variable(RingTag ring) {
    return from_coefficients(ring, {RingElem::zero(ring), RingElem::one(ring)});
}

RingTag Series::ring() const { return node_->ring(); }

RingElem Series::coeff(std::size_t i) const { return node_->at(i); }

std::vector<RingElem> Series::coeffs(std::size_t count) const {
    std::vector<RingElem> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(node_->at(i));
    return out;
}

Series Series::operator+(const Series& rhs) const {
    require_same_ring(*this, rhs);
    return Series(std::make_shared<AddNode>(node_, rhs.node_));
}

Series Series::operator-(const Series& rhs) const {
    require_same_ring(*this, rhs);
    return Series(std::make_shared<SubNode>(node_, rhs.node_));
}

Series Series::operator*(const Series& rhs) const {
    require_same_ring(*this, rhs);
    return Series(std::make_shared<MulNode>(node_, rhs.node_));
}

Series Series::operator-() const {
    return scaled(-RingElem::one(ring()));
}

Series Series::scaled(const RingElem& c) const {
    if (c.ring() != ring()) {
        throw RingMismatchError(std::string("cannot scale a series over ") +
                                ring_name(ring()) + " by " + c.str());
    }
    return Series(std::make_shared<ScaleNode>(c, node_));
}

Series Series::inverse() const {
    RingElem a0 = coeff(0);
    if (!a0.is_unit()) {
        throw NotInvertibleError("constant term " + a0.str() +
                                 " is not a unit, so the series has no "
                                 "inverse over " + ring_name(ring()));
    }
    return Series(std::make_shared<InvertNode>(a0.unit_inverse(), node_));
}

Series Series::pow(unsigned long exponent) const {
    Series result = one(ring());
    Series base = *this;
    while (exponent != 0) {
        if (exponent & 1ul) result = result * base;
        exponent >>= 1;
        if (exponent != 0) base = base * base;
    }
    return result;
}

Series Series::shift(long offset) const {
    if (offset == 0) return *this;
    if (offset > 0) {
        return Series(std::make_shared<ShiftNode>(
            static_cast<std::size_t>(offset), node_));
    }
    return Series(std::make_shared<UnshiftNode>(
        static_cast<std::size_t>(-offset), node_));
}

TruncatedSeries Series::truncate(std::size_t order) const {
    return TruncatedSeries(ring(), coeffs(order + 1));
}

TruncatedSeries::TruncatedSeries(RingTag ring, std::vector<RingElem> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {}

RingElem TruncatedSeries::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : RingElem::zero(ring_);
}

namespace {

std::string z_power_str(std::size_t i) {
    return i == 1 ? "z" : "z^" + std::to_string(i);
}

std::string term_str(const RingElem& c, std::size_t i) {
    std::string cs = c.str();
    if (i == 0) return cs;
    if (cs == "1") return z_power_str(i);
    if (cs == "-1") return "-" + z_power_str(i);
    // Delimit coefficients that read as a sum or difference; bracketed
    // polynomial coefficients are already self-delimiting.
    bool composite = false;
    if (cs.front() != '[') {
        for (std::size_t p = 1; p < cs.size(); ++p) {
            if (cs[p] == '+' || cs[p] == '-') composite = true;
        }
    }
    if (composite) return "(" + cs + ")" + z_power_str(i);
    std::string sep = (cs.back() == 'i' || cs.back() == ']') ? " " : "";
    return cs + sep + z_power_str(i);
}

} // namespace

std::string TruncatedSeries::str() const {
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) terms.push_back(term_str(coeffs_[i], i));
    }
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t t = 1; t < terms.size(); ++t) {
        if (terms[t].front() == '-') {
            out += " - " + terms[t].substr(1);
        } else {
            out += " + " + terms[t];
        }
    }
    return out;
}

ZPowerSplit strip_z(const Series& f, std::size_t probe) {
    for (std::size_t t = 0; t < probe; ++t) {
        if (!f.coeff(t).is_zero()) {
            return ZPowerSplit{t, t == 0 ? f : f.shift(-static_cast<long>(t))};
        }
    }
    std::ostringstream msg;
    msg << "every coefficient through index " << (probe == 0 ? 0 : probe - 1)
        << " vanishes; cannot separate a z-power from a possibly zero series";
    throw IndeterminateError(msg.str());
}

namespace detail {

Series make_series_from_rule(RingTag ring,
                             std::function<RingElem(std::size_t)> rule) {
    return Series(std::make_shared<RuleNode>(ring, std::move(rule)));
}

Series make_series_from_recurrence(
    RingTag ring,
    std::function<RingElem(std::size_t, const std::vector<RingElem>&)> rule) {
    return Series(std::make_shared<RecurrenceNode>(ring, std::move(rule)));
}

} // namespace detail

} // namespace seriesfact
