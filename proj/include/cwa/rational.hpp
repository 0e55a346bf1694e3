#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cwa/error.hpp"

namespace cwa {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline bool is_nonneg_integer(const Rat& r) { return is_integer(r) && r >= 0; }

inline bool is_neg_integer(const Rat& r) { return is_integer(r) && r < 0; }

// Integer value of an exact integer rational, for use as an exponent or index.
inline long long to_long(const Rat& r) {
    if (!is_integer(r)) fail(errc::bad_argument, "not an integer: " + r.str());
    return static_cast<long long>(numerator(r));
}

// Canonical "p/q" rendering, denominator always printed ("3/4", "5/1", "-2/3").
inline std::string frac_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "p/q", optional leading sign on p.
Rat parse_rat(const std::string& text);

}  // namespace cwa
