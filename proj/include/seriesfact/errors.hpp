#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seriesfact {

// Mixing elements of different coefficient rings in one operation.
struct RingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Constant-term factorization refused because the input exceeds the
// supported magnitude for the factoring backend.
struct OversizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inversion requested for a series whose constant term is not a unit.
struct NotInvertibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded scan (e.g. leading-zero stripping) exhausted its window
// without reaching a decision.
struct IndeterminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected expression text. `position` is a 0-based byte offset into the
// input; every rejection carries one.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

} // namespace seriesfact
