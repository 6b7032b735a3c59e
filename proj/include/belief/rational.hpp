#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace belief {

// Exact rational probabilities. cpp_rational keeps values in lowest terms
// with a positive denominator, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// p^n with a natural exponent; r^0 == 1.
inline Rat rat_pow(const Rat& r, std::uint64_t n) {
  using boost::multiprecision::pow;
  if (n == 0) return Rat(1);
  return Rat(pow(numerator(r), static_cast<unsigned>(n)),
             pow(denominator(r), static_cast<unsigned>(n)));
}

// Serializes as "a/b" in lowest terms, or just "a" for integers.
std::string rat_to_string(const Rat& r);

// Parses "a/b" or "a". Throws std::invalid_argument on anything else,
// including decimal notation.
Rat rat_from_string(const std::string& s);

double rat_to_double(const Rat& r);

// Natural log of a positive rational, computed as ln(num) - ln(den) so
// that huge numerators/denominators do not overflow double.
double rat_log(const Rat& r);

Int factorial(std::uint64_t n);

}  // namespace belief
