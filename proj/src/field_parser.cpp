#include "occert/field_parser.hpp"

#include <cctype>

#include "occert/errors.hpp"

namespace occ {
namespace {

struct FieldParser {
  const std::string& s;
  std::size_t pos = 0;
  const VarSetPtr& vars;

  FieldParser(const std::string& text, const VarSetPtr& v) : s(text), vars(v) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  FieldElem parse() {
    FieldElem e = expr();
    if (peek() != '\0') fail("trailing input");
    return e;
  }

  FieldElem expr() {
    FieldElem acc = term();
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  FieldElem term() {
    FieldElem acc = factor();
    for (;;) {
      if (eat('*')) acc = acc * factor();
      else if (eat('/')) acc = acc / factor();
      else return acc;
    }
  }

  FieldElem factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    FieldElem base = atom();
    if (eat('^')) {
      long e = integer();
      return base.pow(e);
    }
    return base;
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected integer exponent");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  }

  FieldElem atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      FieldElem e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        digits += s[pos++];
      return FieldElem::constant(QSqrt2(BigRational(BigInt(digits))), vars);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos < s.size() &&
             (std::islower(static_cast<unsigned char>(s[pos])) ||
              std::isdigit(static_cast<unsigned char>(s[pos]))))
        name += s[pos++];
      if (name == "r2") return FieldElem::sqrt2(vars);
      if (vars->index_of(name) < 0) fail("unknown variable '" + name + "'");
      return FieldElem::variable(name, vars);
    }
    fail("unexpected character");
  }
};

}  // namespace

FieldElem parse_field_elem(const std::string& text, const VarSetPtr& vars) {
  return FieldParser(text, vars).parse();
}

std::set<std::string> scan_field_variables(const std::string& text) {
  std::set<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::islower(static_cast<unsigned char>(text[i]))) {
      std::string name;
      while (i < text.size() &&
             (std::islower(static_cast<unsigned char>(text[i])) ||
              std::isdigit(static_cast<unsigned char>(text[i]))))
        name += text[i++];
      if (name != "r2") out.insert(name);
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace occ
