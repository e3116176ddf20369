#include "occert/word_parser.hpp"

#include <cctype>

#include "occert/errors.hpp"
#include "occert/field_parser.hpp"

namespace occ {
namespace {

struct WordParser {
  const std::string& s;
  std::size_t pos = 0;
  const VarSetPtr& vars;

  WordParser(const std::string& text, const VarSetPtr& v) : s(text), vars(v) {}

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

  Word parse() {
    Word w = product();
    if (peek() != '\0') fail("trailing input");
    return w;
  }

  Word product() {
    Word acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  Word power() {
    Word base = atom();
    if (eat('^')) return base.pow(integer());
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

  std::string ident() {
    skip_ws();
    std::string name;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      name += s[pos++];
    if (name.empty()) fail("expected identifier");
    return name;
  }

  // Consumes up to (not including) the matching close paren / comma at depth
  // zero, returning the raw text.
  std::string until_balanced(char stop) {
    std::string out;
    int depth = 0;
    while (pos < s.size()) {
      char c = s[pos];
      if (depth == 0 && (c == stop || (stop == ',' && c == ')'))) return out;
      if (c == '(') ++depth;
      if (c == ')') --depth;
      out += c;
      ++pos;
    }
    fail("unterminated argument");
  }

  Word atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Word w = product();
      if (!eat(')')) fail("expected ')'");
      return w;
    }
    if (c == '[') {
      ++pos;
      Word a = product();
      if (!eat(',')) fail("expected ',' in commutator");
      Word b = product();
      if (!eat(']')) fail("expected ']'");
      return comm(a, b);
    }
    if (c == '1') {
      ++pos;
      return Word::identity();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t save = pos;
      std::string name = ident();
      if (name == "conj" && peek() == '(') {
        ++pos;
        Word g = product();
        if (!eat(',')) fail("expected ',' in conj");
        Word w = product();
        if (!eat(')')) fail("expected ')'");
        return conj(g, w);
      }
      if (name == "x" && peek() == '(') {
        ++pos;
        long alpha = integer();
        if (alpha != 1 && alpha != -1) fail("alpha must be +1 or -1");
        if (!eat(',')) fail("expected ',' in x(...)");
        std::string param_text = until_balanced(',');
        if (!eat(')')) fail("expected ')'");
        FieldElem t = parse_field_elem(param_text, vars);
        return Word::letter(Generator::stein(static_cast<int>(alpha), t));
      }
      if (peek() == '(') {
        pos = save;
        fail("unknown call '" + name + "'");
      }
      return Word::letter(Generator::named(name));
    }
    fail("unexpected character");
  }
};

}  // namespace

Word parse_word(const std::string& text, const VarSetPtr& vars) {
  return WordParser(text, vars).parse();
}

std::set<std::string> scan_word_variables(const std::string& text) {
  // Field variables only appear inside x(alpha, param) argument positions;
  // scanning the whole string and dropping alpha digits is a safe
  // overapproximation because named generators are single identifiers that
  // scan_field_variables would also pick up. Restrict to x(...) arguments.
  std::set<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == 'x' && (i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1])))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && text[j] == '(') {
        // Find the matching close paren.
        int depth = 1;
        std::size_t k = j + 1;
        while (k < text.size() && depth > 0) {
          if (text[k] == '(') ++depth;
          if (text[k] == ')') --depth;
          ++k;
        }
        std::string inner = text.substr(j + 1, k - j - 2);
        auto comma = inner.find(',');
        if (comma != std::string::npos) {
          for (const auto& v : scan_field_variables(inner.substr(comma + 1))) out.insert(v);
        }
        i = k;
        continue;
      }
    }
    ++i;
  }
  return out;
}

}  // namespace occ
