#pragma once

#include <map>
#include <string>

#include "occert/multipoly.hpp"

namespace occ {

// Element of the rational function field Q(sqrt2)(X1,...,Xn), stored as an
// unreduced fraction num/den of expanded polynomials. Equality is decided by
// cross multiplication, so no multivariate gcd is ever needed; a cheap
// content strip (integer content, common monomial, monic denominator) keeps
// growth in check and makes the canonical key collide for fractions that
// differ by a scalar or monomial factor.
class FieldElem {
 public:
  FieldElem() : num_(), den_(MultiPoly::constant(QSqrt2(1), num_.vars())) {}
  FieldElem(MultiPoly num, MultiPoly den);

  static FieldElem constant(const QSqrt2& c, const VarSetPtr& vars);
  static FieldElem from_long(long n, const VarSetPtr& vars) {
    return constant(QSqrt2(n), vars);
  }
  static FieldElem variable(const std::string& name, const VarSetPtr& vars);
  static FieldElem sqrt2(const VarSetPtr& vars) { return constant(QSqrt2::sqrt2(), vars); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const VarSetPtr& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  // Exact rational value, if the element is a constant with rational value.
  bool as_rational(BigRational* out) const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(long e) const;

  // True iff num*o.den - o.num*den is the zero polynomial.
  bool eq(const FieldElem& o) const;

  // Substitutes every variable; images must share one variable set and all
  // variables occurring in this element must be assigned.
  FieldElem substitute(const std::map<std::string, FieldElem>& assignment) const;

  // Canonical text form: "(num)/(den)", den omitted when it is 1.
  std::string to_string() const;
  // Equal strings imply equal values (the converse can fail when fractions
  // differ by a common polynomial factor); used as a hash key with eq() as
  // the fallback. Computed lazily on first use; Generator materializes it
  // at construction, so letters shared between threads are safe.
  const std::string& key() const;

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
  mutable std::string key_;  // lazily built canonical serialization
};

inline bool fe_eq(const FieldElem& a, const FieldElem& b) { return a.eq(b); }

}  // namespace occ
