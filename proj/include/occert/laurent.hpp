#pragma once

#include <map>
#include <string>

#include "occert/rational.hpp"

namespace occ {

// Element of Lambda = Q[t, t^-1], a sparse exponent -> coefficient map with
// no zero coefficients. Units are c*t^k; the canonical form of a nonzero
// element has lowest exponent 0 and monic leading coefficient, which pins
// down gcds and invariant factors exactly.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const BigRational& c);
  static LaurentPoly t_power(long k, const BigRational& c = 1);

  const std::map<long, BigRational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_unit() const { return coeffs_.size() == 1; }
  bool is_one() const;
  long lowest_exp() const;
  long highest_exp() const;
  // Span of exponents of the canonical form (0 for constants and 0 itself).
  long degree() const;
  BigRational leading_coeff() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const BigRational& c) const;
  LaurentPoly shifted(long k) const;  // * t^k

  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // lowest exponent -> 0, leading coefficient -> 1.
  LaurentPoly canonical() const;
  // Same canonical form, i.e. equal up to a unit of Lambda.
  bool associate_of(const LaurentPoly& o) const;

  BigRational evaluate(const BigRational& t) const;

  void add_term(long exp, const BigRational& c);

  std::string to_string() const;

 private:
  std::map<long, BigRational> coeffs_;
};

// Exact division in Q[t, t^-1]; throws domain_error if b does not divide a.
LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b);
bool lp_divides(const LaurentPoly& b, const LaurentPoly& a);

// Euclidean step after clearing units: q, r with a = q*b + r and the
// canonical degree of r less than that of b.
void lp_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* q, LaurentPoly* r);

struct LaurentGcd {
  LaurentPoly g, p, q;  // p*a + q*b = g, g canonical
};

// Extended gcd; verifies the Bezout identity before returning.
LaurentGcd lp_gcd_ext(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Parses Laurent expressions in `t`: rationals, t, ^ with any integer
// exponent, + - * / (division only by nonzero constants), parentheses.
LaurentPoly parse_laurent(const std::string& text);

}  // namespace occ
