#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace abc {

// All scores, quotients and loads are exact rationals; there is no tolerance
// parameter anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Signed 128-bit scaled-score arithmetic used by the rule inner loops:
// harmonic quantities are carried as integers scaled by lcm(1..m).
using Wide = __int128;

inline BigInt wide_to_big(Wide v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                            : static_cast<unsigned __int128>(v);
  BigInt b = static_cast<std::uint64_t>(u >> 64);
  b <<= 64;
  b += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-b) : b;
}

inline Rational make_rational(Wide num, Wide den) {
  return Rational(wide_to_big(num), wide_to_big(den));
}

// lcm(1..m); fits __int128 comfortably for m <= 64.
inline Wide harmonic_scale(int m) {
  auto gcd = [](Wide a, Wide b) {
    while (b) { Wide t = a % b; a = b; b = t; }
    return a;
  };
  Wide l = 1;
  for (int j = 2; j <= m; ++j) l = l / gcd(l, j) * j;
  return l;
}

// H(p) = sum_{j=1}^p 1/j, H(0) = 0.
inline Rational harmonic(int p) {
  Rational h = 0;
  for (int j = 1; j <= p; ++j) h += Rational(1, j);
  return h;
}

// Canonical "p/q" rendering; the denominator is always printed ("4/1").
inline std::string rational_str(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace abc
