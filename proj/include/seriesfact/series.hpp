#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "seriesfact/rings.hpp"

namespace seriesfact {

// Cap on how many coefficients any single node will memoize. Guards against
// runaway expansion when a loop bound comes from untrusted input. Process
// global; the CLI wires it to SERIESFACT_MAX_MEMO.
std::size_t memo_limit();
void set_memo_limit(std::size_t limit);

// One operator in a lazily evaluated series DAG. Nodes are immutable once
// built; coefficients are memoized on first access under a per-node lock.
class SeriesNode {
public:
    explicit SeriesNode(RingTag ring) : ring_(ring) {}
    virtual ~SeriesNode() = default;

    SeriesNode(const SeriesNode&) = delete;
    SeriesNode& operator=(const SeriesNode&) = delete;

    RingTag ring() const { return ring_; }

    // Coefficient of z^i. Thread-safe. Throws std::length_error once i
    // reaches the memo limit.
    RingElem at(std::size_t i);

protected:
    // Invariant: called with the node lock held and memo_[0..i-1] filled.
    // Implementations may read that prefix directly (self-referential
    // definitions like inversion depend on it) but must not call at() on
    // this same node.
    virtual RingElem compute(std::size_t i) = 0;

    std::vector<RingElem> memo_;

private:
    RingTag ring_;
    std::mutex mu_;
};

class TruncatedSeries;

// Value-semantics handle to an immutable lazy series; copies share the
// underlying node and its memo.
class Series {
public:
    explicit Series(std::shared_ptr<SeriesNode> node);

    static Series from_coefficients(RingTag ring, std::vector<RingElem> coeffs);
    static Series constant(const RingElem& c);
    static Series zero(RingTag ring);
    static Series one(RingTag ring);
    static Series variable(RingTag ring); // z

    RingTag ring() const;
    RingElem coeff(std::size_t i) const;
    std::vector<RingElem> coeffs(std::size_t count) const; // indices 0..count-1

    Series operator+(const Series& rhs) const;
    Series operator-(const Series& rhs) const;
    Series operator*(const Series& rhs) const;
    Series operator-() const;
    Series scaled(const RingElem& c) const;

    // Multiplicative inverse; requires a unit constant term, else throws
    // NotInvertibleError.
    Series inverse() const;

    Series pow(unsigned long exponent) const;

    // Multiply by z^offset (offset >= 0), or drop the first -offset
    // coefficients (offset < 0; caller asserts those coefficients are zero).
    Series shift(long offset) const;

    TruncatedSeries truncate(std::size_t order) const; // indices 0..order

    const std::shared_ptr<SeriesNode>& node() const { return node_; }

private:
    std::shared_ptr<SeriesNode> node_;
};

// First order+1 coefficients of a series, as a plain value.
class TruncatedSeries {
public:
    TruncatedSeries(RingTag ring, std::vector<RingElem> coeffs);

    RingTag ring() const { return ring_; }
    std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<RingElem>& coefficients() const { return coeffs_; }
    RingElem coeff(std::size_t i) const; // zero beyond the stored window

    std::string str() const;

private:
    RingTag ring_;
    std::vector<RingElem> coeffs_;
};

struct ZPowerSplit {
    std::size_t power; // the exact t with f = z^t * tail, tail(0) != 0
    Series tail;
};

// Splits f = z^t * tail with tail(0) != 0, scanning indices 0..probe-1.
// Throws IndeterminateError when every scanned coefficient vanishes.
ZPowerSplit strip_z(const Series& f, std::size_t probe);

namespace detail {

// Series whose coefficient i is rule(i); rule must be pure.
Series make_series_from_rule(RingTag ring,
                             std::function<RingElem(std::size_t)> rule);

// Self-referential series: rule(i, prefix) sees coefficients 0..i-1 of the
// series being defined.
Series make_series_from_recurrence(
    RingTag ring,
    std::function<RingElem(std::size_t, const std::vector<RingElem>&)> rule);

} // namespace detail

} // namespace seriesfact
