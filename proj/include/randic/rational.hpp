#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace randic {

// Exact rational arithmetic. Degree products 1/(d_u*d_v) are tiny, but the
// congruence recurrences behave like continued fractions and blow up any
// fixed-width numerator, so we sit on an arbitrary-precision backend.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline int sign_of(const Rat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

// Parses "a" or "a/b" with optional leading '-'. Denominator must be nonzero.
inline Rat rat_from_string(std::string_view s) {
  const auto slash = s.find('/');
  auto parse_int = [](std::string_view t) -> BigInt {
    if (t.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bare sign in rational literal");
    for (std::size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9')
        throw std::invalid_argument("invalid character in rational literal: '" +
                                    std::string(t) + "'");
    return BigInt(std::string(t));
  };
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
  return Rat(num, den);
}

inline std::string rat_to_string(const Rat& r) {
  return r.str();
}

}  // namespace randic
