#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace segvis {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline const BigInt& rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline const BigInt& rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rat& r) { return r.sign(); }

/// Parses "42", "-3", "1.25", "-0.5", or "p/q" into an exact rational.
Rat parse_rat(std::string_view text);

/// Canonical form: integer "p" when q == 1, otherwise "p/q" with q > 0.
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace segvis
