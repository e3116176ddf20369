#include "occert/laurent.hpp"

#include <cctype>

#include "occert/errors.hpp"

namespace occ {

LaurentPoly::LaurentPoly(const BigRational& c) {
  if (c != 0) coeffs_[0] = c;
}

LaurentPoly LaurentPoly::t_power(long k, const BigRational& c) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[k] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

long LaurentPoly::lowest_exp() const {
  if (coeffs_.empty()) throw domain_error("exponent of zero polynomial");
  return coeffs_.begin()->first;
}

long LaurentPoly::highest_exp() const {
  if (coeffs_.empty()) throw domain_error("exponent of zero polynomial");
  return coeffs_.rbegin()->first;
}

long LaurentPoly::degree() const {
  if (coeffs_.empty()) return -1;
  return highest_exp() - lowest_exp();
}

BigRational LaurentPoly::leading_coeff() const {
  if (coeffs_.empty()) return 0;
  return coeffs_.rbegin()->second;
}

void LaurentPoly::add_term(long exp, const BigRational& c) {
  if (c == 0) return;
  auto it = coeffs_.find(exp);
  if (it == coeffs_.end()) {
    coeffs_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const BigRational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : coeffs_) r.coeffs_.emplace(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [ea, ca] : coeffs_)
    for (const auto& [eb, cb] : o.coeffs_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::canonical() const {
  if (coeffs_.empty()) return LaurentPoly();
  return shifted(-lowest_exp()).scaled(1 / leading_coeff());
}

bool LaurentPoly::associate_of(const LaurentPoly& o) const {
  return canonical() == o.canonical();
}

BigRational LaurentPoly::evaluate(const BigRational& t) const {
  if (t == 0) throw division_by_zero("Laurent evaluation at t = 0");
  BigRational acc = 0;
  for (const auto& [e, c] : coeffs_) {
    BigRational p = 1;
    long k = e < 0 ? -e : e;
    for (long i = 0; i < k; ++i) p *= t;
    if (e < 0) acc += c / p;
    else acc += c * p;
  }
  return acc;
}

void lp_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* q, LaurentPoly* r) {
  if (b.is_zero()) throw division_by_zero("Laurent division by zero");
  // Work in Q[t] by clearing the lowest exponents (multiplication by units).
  long shift_a = a.is_zero() ? 0 : a.lowest_exp();
  long shift_b = b.lowest_exp();
  LaurentPoly ap = a.shifted(-shift_a);
  LaurentPoly bp = b.shifted(-shift_b);
  LaurentPoly quot;
  while (!ap.is_zero() && ap.highest_exp() >= bp.highest_exp()) {
    long de = ap.highest_exp() - bp.highest_exp();
    BigRational c = ap.leading_coeff() / bp.leading_coeff();
    LaurentPoly m = LaurentPoly::t_power(de, c);
    quot = quot + m;
    ap = ap - m * bp;
  }
  // a = t^sa * ap0, b = t^sb * bp; ap0 = quot*bp + ap
  // a = (t^(sa-sb) * quot) * b + t^sa * ap
  if (q) *q = quot.shifted(shift_a - shift_b);
  if (r) *r = ap.shifted(shift_a);
}

bool lp_divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  LaurentPoly r;
  lp_divmod(a, b, nullptr, &r);
  return r.is_zero();
}

LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q, r;
  lp_divmod(a, b, &q, &r);
  if (!r.is_zero()) throw domain_error("inexact Laurent division");
  return q;
}

LaurentGcd lp_gcd_ext(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw domain_error("gcd(0, 0) undefined");
  // Euclid with Bezout bookkeeping: r0 = a, r1 = b.
  LaurentPoly r0 = a, r1 = b;
  LaurentPoly p0(BigRational(1)), p1;  // coefficients of a
  LaurentPoly q0, q1(BigRational(1));  // coefficients of b
  while (!r1.is_zero()) {
    LaurentPoly quo, rem;
    lp_divmod(r0, r1, &quo, &rem);
    r0 = r1;
    r1 = rem;
    LaurentPoly p2 = p0 - quo * p1;
    LaurentPoly q2 = q0 - quo * q1;
    p0 = p1; p1 = p2;
    q0 = q1; q1 = q2;
  }
  // Normalize to canonical form: divide everything by the unit r0/canonical.
  LaurentPoly can = r0.canonical();
  LaurentPoly unit = LaurentPoly::t_power(r0.lowest_exp(), r0.leading_coeff());
  LaurentGcd out;
  out.g = can;
  out.p = lp_div_exact(p0, unit);
  out.q = lp_div_exact(q0, unit);
  if (out.p * a + out.q * b != out.g) throw internal_error("Bezout identity failed");
  if (!lp_divides(out.g, a) || !lp_divides(out.g, b))
    throw internal_error("gcd does not divide inputs");
  return out;
}

LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  if (a.is_zero()) return b.canonical();
  if (b.is_zero()) return a.canonical();
  return lp_gcd_ext(a, b).g;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    long e = it->first;
    const BigRational& c = it->second;
    std::string term;
    std::string tc = rat_to_string(c < 0 ? BigRational(-c) : c);
    if (e == 0) {
      term = tc;
    } else {
      term = (tc == "1") ? "" : tc + "*";
      term += "t";
      if (e != 1) term += "^" + std::to_string(e);
    }
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? "-" : "+") + term;
  }
  return out;
}

namespace {

struct LaurentParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit LaurentParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  LaurentPoly parse() {
    LaurentPoly p = expr();
    if (peek() != '\0') fail("trailing input");
    return p;
  }
  LaurentPoly expr() {
    LaurentPoly acc = term();
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }
  LaurentPoly term() {
    LaurentPoly acc = factor();
    for (;;) {
      if (eat('*')) acc = acc * factor();
      else if (eat('/')) {
        LaurentPoly d = factor();
        if (!d.is_unit()) fail("division only by units c*t^k");
        acc = lp_div_exact(acc, d);
      } else {
        return acc;
      }
    }
  }
  LaurentPoly factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    LaurentPoly base = atom();
    if (eat('^')) {
      long e = integer();
      if (base.is_unit()) {
        // unit powers allow negative exponents
        LaurentPoly r(BigRational(1));
        LaurentPoly b = e < 0 ? LaurentPoly::t_power(-base.lowest_exp(),
                                                     1 / base.leading_coeff())
                              : base;
        long k = e < 0 ? -e : e;
        for (long i = 0; i < k; ++i) r = r * b;
        return r;
      }
      if (e < 0) fail("negative exponent on non-unit");
      LaurentPoly r(BigRational(1));
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }
  long integer() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected integer");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  }
  LaurentPoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      LaurentPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == 't') {
      ++pos;
      return LaurentPoly::t_power(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        digits += s[pos++];
      if (pos < s.size() && s[pos] == '/') {
        // rational constant p/q (only when followed by digits)
        std::size_t save = pos;
        ++pos;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          std::string den;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            den += s[pos++];
          return LaurentPoly(BigRational(BigInt(digits), BigInt(den)));
        }
        pos = save;
      }
      return LaurentPoly(BigRational(BigInt(digits)));
    }
    fail("unexpected character");
  }
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text) { return LaurentParser(text).parse(); }

}  // namespace occ
