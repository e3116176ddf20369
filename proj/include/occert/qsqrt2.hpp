#pragma once

#include <string>

#include "occert/rational.hpp"

namespace occ {

// Element of Q(sqrt 2): value rat + irr*sqrt(2). Zero iff both parts vanish;
// every nonzero element is invertible because the norm rat^2 - 2*irr^2 only
// vanishes at 0 (sqrt 2 is irrational).
struct QSqrt2 {
  BigRational rat;
  BigRational irr;

  QSqrt2() = default;
  QSqrt2(BigRational r) : rat(std::move(r)) {}  // NOLINT: implicit from rational
  QSqrt2(BigRational r, BigRational i) : rat(std::move(r)), irr(std::move(i)) {}
  QSqrt2(long n) : rat(n) {}  // NOLINT

  static QSqrt2 sqrt2() { return QSqrt2(BigRational(0), BigRational(1)); }

  bool is_zero() const { return rat == 0 && irr == 0; }
  bool is_one() const { return rat == 1 && irr == 0; }
  bool is_rational() const { return irr == 0; }

  QSqrt2 operator-() const { return QSqrt2(-rat, -irr); }

  QSqrt2 operator+(const QSqrt2& o) const { return QSqrt2(rat + o.rat, irr + o.irr); }
  QSqrt2 operator-(const QSqrt2& o) const { return QSqrt2(rat - o.rat, irr - o.irr); }
  QSqrt2 operator*(const QSqrt2& o) const {
    return QSqrt2(rat * o.rat + 2 * irr * o.irr, rat * o.irr + irr * o.rat);
  }

  QSqrt2 inverse() const {
    if (is_zero()) throw division_by_zero("inverse of 0 in Q(sqrt2)");
    BigRational norm = rat * rat - 2 * irr * irr;
    return QSqrt2(rat / norm, -irr / norm);
  }

  QSqrt2 operator/(const QSqrt2& o) const { return *this * o.inverse(); }

  QSqrt2& operator+=(const QSqrt2& o) { *this = *this + o; return *this; }
  QSqrt2& operator-=(const QSqrt2& o) { *this = *this - o; return *this; }
  QSqrt2& operator*=(const QSqrt2& o) { *this = *this * o; return *this; }

  bool operator==(const QSqrt2& o) const { return rat == o.rat && irr == o.irr; }
  bool operator!=(const QSqrt2& o) const { return !(*this == o); }

  // "3", "-1/2", "r2", "2*r2", "(1+r2)" style; parenthesized when both parts
  // are present so terms can be embedded in polynomial output verbatim.
  std::string to_string() const {
    if (irr == 0) return rat_to_string(rat);
    std::string irr_part;
    if (irr == 1) irr_part = "r2";
    else if (irr == -1) irr_part = "-r2";
    else irr_part = rat_to_string(irr) + "*r2";
    if (rat == 0) return irr_part;
    std::string s = "(" + rat_to_string(rat);
    if (irr_part[0] == '-') s += irr_part;
    else s += "+" + irr_part;
    return s + ")";
  }
};

}  // namespace occ
