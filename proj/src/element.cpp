#include "syk/element.hpp"

#include <algorithm>

namespace syk {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letters.
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= l;
    h *= 1099511628211ull;
  }
  return h ^ w.size();
}

Element::Element(const Rational& scalar) {
  if (scalar != 0) terms_.push_back({Word{}, scalar});
}

Element Element::from_word(Word word, const Rational& coeff) {
  Element e;
  if (coeff != 0) e.terms_.push_back({std::move(word), coeff});
  return e;
}

Rational Element::coefficient(const Word& word) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), word,
                             [](const Term& t, const Word& w) { return t.word < w; });
  if (it != terms_.end() && it->word == word) return it->coeff;
  return 0;
}

std::size_t Element::max_length() const {
  std::size_t n = 0;
  for (const auto& t : terms_) n = std::max(n, t.word.size());
  return n;
}

void Element::merge(const Element& other, int sign) {
  if (other.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->word < b->word)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->word < a->word) {
      out.push_back({b->word, sign > 0 ? b->coeff : Rational(-b->coeff)});
      ++b;
    } else {
      Rational c = sign > 0 ? Rational(a->coeff + b->coeff) : Rational(a->coeff - b->coeff);
      if (c != 0) out.push_back({std::move(a->word), c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Element& Element::operator+=(const Element& other) {
  merge(other, +1);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  merge(other, -1);
  return *this;
}

Element& Element::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
  } else if (scale != 1) {
    for (auto& t : terms_) t.coeff *= scale;
  }
  return *this;
}

void ElementBuilder::add(const Word& word, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = acc_.try_emplace(word, coeff);
  if (!inserted) it->second += coeff;
}

void ElementBuilder::add(const Element& e, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& t : e.terms()) {
    if (scale == 1) {
      add(t.word, t.coeff);
    } else {
      add(t.word, t.coeff * scale);
    }
  }
}

Element ElementBuilder::build() {
  Element e;
  e.terms_.reserve(acc_.size());
  for (auto& [w, c] : acc_) {
    if (c != 0) e.terms_.push_back({w, c});
  }
  acc_.clear();
  std::sort(e.terms_.begin(), e.terms_.end(),
            [](const Element::Term& x, const Element::Term& y) { return x.word < y.word; });
  return e;
}

}  // namespace syk
