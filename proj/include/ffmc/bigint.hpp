#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffmc {

// Exact integer and rational scalar types used by every counting routine.
// Field cardinalities like q^{md} overflow machine words even at small
// parameters, so counts are never carried in built-in integers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// q^e for a non-negative machine exponent.
inline Int int_pow(const Int& q, std::uint64_t e) {
  Int r = 1, b = q;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

/// Number of m-dimensional subspaces of F_q^n, by the product formula
/// prod_{i=0}^{m-1} (q^{n-i} - 1) / (q^{i+1} - 1).
inline Int gaussian_binomial(const Int& q, int n, int m) {
  if (m < 0 || m > n) return 0;
  Int num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    num *= int_pow(q, n - i) - 1;
    den *= int_pow(q, i + 1) - 1;
  }
  return num / den;  // always exact
}

/// "24" for integers, "21/32" otherwise.
inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ffmc
