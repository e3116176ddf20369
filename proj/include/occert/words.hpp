#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "occert/field.hpp"

namespace occ {

// Generator of the ambient free group: either a named symbol (finite
// presentations) or a Steinberg symbol x_alpha(t) with alpha = +1/-1 and an
// exact field parameter. Steinberg generators compare equal iff the alphas
// match and the parameters are fe_eq-equal; the cached canonical key makes
// the common case a string compare.
class Generator {
 public:
  static Generator named(std::string symbol);
  static Generator stein(int alpha, FieldElem param);

  bool is_stein() const { return param_ != nullptr; }
  int alpha() const { return alpha_; }
  const std::string& name() const { return name_; }
  const FieldElem& param() const { return *param_; }
  const std::string& key() const { return name_; }

  bool operator==(const Generator& o) const;
  bool operator!=(const Generator& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Generator() = default;
  // Named: the symbol itself. Stein: "x(<alpha>,<canonical param>)".
  std::string name_;
  int alpha_ = 0;
  std::shared_ptr<const FieldElem> param_;
};

struct Letter {
  Generator gen;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return Letter{gen, -sign}; }
  bool cancels(const Letter& o) const { return sign == -o.sign && gen == o.gen; }
  bool operator==(const Letter& o) const { return sign == o.sign && gen == o.gen; }
  std::string to_string() const;
};

// Freely reduced word; the empty sequence is the identity. All constructors
// and operations reduce eagerly, so adjacent inverse letters never survive.
class Word {
 public:
  Word() = default;
  static Word identity() { return Word(); }
  static Word letter(const Generator& g, int sign = 1);
  static Word from_letters(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word operator*(const Word& o) const;
  Word inverse() const;
  Word pow(long n) const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

// g w g^-1, freely reduced.
Word conj(const Word& g, const Word& w);
// a b a^-1 b^-1.
Word comm(const Word& a, const Word& b);

// Homomorphic extension of a letter-image assignment; throws
// unmapped_generator when the function does (it must be total on the
// generators that occur).
Word map_word(const Word& w, const std::function<Word(const Generator&)>& image);

}  // namespace occ
