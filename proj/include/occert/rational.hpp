#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "occert/errors.hpp"

namespace occ {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored with gcd(|num|,den) = 1 and
// den >= 1. boost::multiprecision::cpp_rational keeps exactly that canonical
// form, so we use it directly.
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// gcd on nonnegative rationals: gcd(a/b, c/d) = gcd(a*d, c*b)/(b*d), the
// largest rational dividing both with integer quotients.
inline BigRational rat_gcd(const BigRational& x, const BigRational& y) {
  if (x == 0) return y < 0 ? BigRational(-y) : y;
  if (y == 0) return x < 0 ? BigRational(-x) : x;
  BigInt a = rat_num(x), b = rat_den(x), c = rat_num(y), d = rat_den(y);
  if (a < 0) a = -a;
  if (c < 0) c = -c;
  return BigRational(int_gcd(a * d, c * b), b * d);
}

inline std::string rat_to_string(const BigRational& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

// Parses "p" or "p/q". Signs allowed on p.
inline BigRational rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw division_by_zero("rational with zero denominator: " + s);
    return BigRational(num, den);
  } catch (const std::exception& e) {
    throw parse_error("bad rational '" + s + "': " + e.what());
  }
}

}  // namespace occ
