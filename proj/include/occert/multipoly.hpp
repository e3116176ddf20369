#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "occert/qsqrt2.hpp"

namespace occ {

// Fixed, ordered list of variable names. Every polynomial carries a pointer
// to its variable set; operations require equal lists (compared by value, so
// independently parsed contexts are compatible).
struct VarSet {
  std::vector<std::string> names;

  explicit VarSet(std::vector<std::string> n = {}) : names(std::move(n)) {}
  std::size_t size() const { return names.size(); }
  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }
  bool operator==(const VarSet& o) const { return names == o.names; }
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

// Exponent vector, one nonnegative entry per variable. std::map's
// lexicographic key order doubles as the canonical monomial order.
using Monomial = std::vector<unsigned>;

// Polynomial over Q(sqrt2) in the variables of `vars`, stored as a sparse
// term map with no zero coefficients.
class MultiPoly {
 public:
  MultiPoly() : vars_(make_varset({})) {}
  explicit MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(const QSqrt2& c, VarSetPtr vars);
  static MultiPoly variable(const std::string& name, VarSetPtr vars);

  const VarSetPtr& vars() const { return vars_; }
  const std::map<Monomial, QSqrt2>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Leading coefficient in the canonical monomial order (zero for 0).
  QSqrt2 leading_coeff() const;
  QSqrt2 constant_term() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const QSqrt2& c) const;

  bool operator==(const MultiPoly& o) const;

  // Largest monomial dividing every term (the zero polynomial yields the
  // empty monomial), used by content stripping.
  Monomial common_monomial() const;
  // Positive rational content over both sqrt2-components; 0 for the zero
  // polynomial.
  BigRational content() const;
  MultiPoly divided_by_monomial(const Monomial& m) const;

  void add_term(const Monomial& m, const QSqrt2& c);

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  VarSetPtr vars_;
  std::map<Monomial, QSqrt2> terms_;
};

}  // namespace occ
