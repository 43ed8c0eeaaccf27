#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace seriesfact {

// Exact arbitrary-precision integers and rationals. All coefficient
// arithmetic in this library is exact; nothing ever rounds.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

} // namespace seriesfact
