#include "occert/words.hpp"

#include "occert/errors.hpp"

namespace occ {

Generator Generator::named(std::string symbol) {
  Generator g;
  g.name_ = std::move(symbol);
  return g;
}

Generator Generator::stein(int alpha, FieldElem param) {
  if (alpha != 1 && alpha != -1) throw domain_error("Steinberg alpha must be +1 or -1");
  Generator g;
  g.alpha_ = alpha;
  g.param_ = std::make_shared<const FieldElem>(std::move(param));
  g.name_ = "x(" + std::string(alpha > 0 ? "+1" : "-1") + "," + g.param_->key() + ")";
  return g;
}

bool Generator::operator==(const Generator& o) const {
  if (is_stein() != o.is_stein()) return false;
  if (!is_stein()) return name_ == o.name_;
  if (alpha_ != o.alpha_) return false;
  if (param_ == o.param_ || name_ == o.name_) return true;
  return param_->eq(*o.param_);
}

std::string Generator::to_string() const { return name_; }

std::string Letter::to_string() const {
  return sign > 0 ? gen.to_string() : gen.to_string() + "^-1";
}

Word Word::letter(const Generator& g, int sign) {
  Word w;
  w.letters_.push_back(Letter{g, sign});
  return w;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
  Word w;
  for (const Letter& l : letters) {
    if (!w.letters_.empty() && w.letters_.back().cancels(l)) w.letters_.pop_back();
    else w.letters_.push_back(l);
  }
  return w;
}

Word Word::operator*(const Word& o) const {
  Word r = *this;
  for (const Letter& l : o.letters_) {
    if (!r.letters_.empty() && r.letters_.back().cancels(l)) r.letters_.pop_back();
    else r.letters_.push_back(l);
  }
  return r;
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back(it->inverse());
  return r;
}

Word Word::pow(long n) const {
  Word base = n < 0 ? inverse() : *this;
  long k = n < 0 ? -n : n;
  Word r;
  for (long i = 0; i < k; ++i) r = r * base;
  return r;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += "*";
    out += l.to_string();
  }
  return out;
}

Word conj(const Word& g, const Word& w) { return g * w * g.inverse(); }

Word comm(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word map_word(const Word& w, const std::function<Word(const Generator&)>& image) {
  Word r;
  for (const Letter& l : w.letters()) {
    Word img = image(l.gen);
    r = r * (l.sign > 0 ? img : img.inverse());
  }
  return r;
}

}  // namespace occ
