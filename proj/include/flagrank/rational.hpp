#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace flagrank {

// Exact scalars for the polynomial layer. Arbitrary precision so no
// intermediate ever overflows; no floating point anywhere near this code.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

inline long long to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::logic_error("expected an integer, got " + q.str());
  Int n = rat_num(q);
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
    throw std::logic_error("integer out of int64 range: " + n.str());
  return n.convert_to<long long>();
}

}  // namespace flagrank
