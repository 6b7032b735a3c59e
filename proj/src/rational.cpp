#include "belief/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace belief {

std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational string");
  auto check_int = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("malformed rational string");
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("malformed rational string");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("malformed rational string: '" + t + "'");
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    check_int(s);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (d <= 0) throw std::invalid_argument("denominator must be positive: '" + s + "'");
  return Rat(Int(num), d);
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

double rat_log(const Rat& r) {
  if (r <= 0) throw std::domain_error("rat_log of non-positive rational");
  // ln(a/b) via ln(a) - ln(b); use the top bits plus the exponent so that
  // arbitrarily large integers stay in range.
  auto ln_int = [](const Int& v) {
    std::size_t bits = msb(v);  // v >= 1 here
    if (bits <= 900) return std::log(v.convert_to<double>());
    Int shifted = v >> (bits - 64);
    return std::log(shifted.convert_to<double>()) +
           static_cast<double>(bits - 64) * std::log(2.0);
  };
  return ln_int(numerator(r)) - ln_int(denominator(r));
}

Int factorial(std::uint64_t n) {
  Int acc = 1;
  for (std::uint64_t i = 2; i <= n; ++i) acc *= i;
  return acc;
}

}  // namespace belief
