#include "syk/superalgebra.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace syk {

bool SuperAlgebra::pair_in_order(Letter a, Letter b) const {
  if (a == b) return letter_parity(a) == 0;
  return letter_less(a, b);
}

bool SuperAlgebra::is_normal(const Word& w) const {
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (!pair_in_order(w[k - 1], w[k])) return false;
  }
  return true;
}

int SuperAlgebra::word_parity(const Word& w) const {
  int p = 0;
  for (Letter l : w) p ^= letter_parity(l);
  return p;
}

std::optional<int> SuperAlgebra::parity(const Element& x) const {
  std::optional<int> p;
  for (const auto& t : x.terms()) {
    int q = word_parity(t.word);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

std::pair<Element, Element> SuperAlgebra::homogeneous_parts(const Element& x) const {
  ElementBuilder even;
  ElementBuilder odd;
  for (const auto& t : x.terms()) {
    (word_parity(t.word) ? odd : even).add(t.word, t.coeff);
  }
  return {even.build(), odd.build()};
}

namespace {

struct PendingKey {
  int weight;
  int inversions;
  Word word;
  // Largest measure first, so like terms coalesce before they are expanded.
  bool operator<(const PendingKey& o) const {
    return std::tie(o.weight, o.inversions, word) < std::tie(weight, inversions, o.word);
  }
};

}  // namespace

Element SuperAlgebra::normal_form(const Element& x) const {
  auto key_of = [this](Word w) {
    int weight = 0;
    int inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a) {
      weight += letter_weight(w[a]);
      for (std::size_t b = a + 1; b < w.size(); ++b) {
        if (letter_less(w[b], w[a])) ++inv;
      }
    }
    return PendingKey{weight, inv, std::move(w)};
  };

  std::map<PendingKey, Rational> pending;
  auto push = [&](Word w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = pending.try_emplace(key_of(std::move(w)), c);
    if (!inserted) it->second += c;
  };
  for (const auto& t : x.terms()) push(t.word, t.coeff);

  ElementBuilder out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key().word;
    const Rational& c = node.mapped();
    if (c == 0) continue;

    std::size_t k = 1;
    while (k < w.size() && pair_in_order(w[k - 1], w[k])) ++k;
    if (k >= w.size()) {
      out.add(w, c);
      continue;
    }

    Letter a = w[k - 1];
    Letter b = w[k];
    auto splice = [&](const Word& middle) {
      Word r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k - 1));
      r.insert(r.end(), middle.begin(), middle.end());
      r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 1), w.end());
      return r;
    };

    if (a == b) {
      // Odd square: x x = [x, x] / 2.
      Rational half = c / 2;
      Element br = letter_bracket(a, a);
      for (const auto& t : br.terms()) push(splice(t.word), half * t.coeff);
    } else {
      // a b = s (b a - [b, a]) with s = (-1)^{|a||b|}.
      Rational sc = (letter_parity(a) & letter_parity(b)) ? Rational(-c) : c;
      push(splice({b, a}), sc);
      Element br = letter_bracket(b, a);
      for (const auto& t : br.terms()) push(splice(t.word), -sc * t.coeff);
    }
  }
  return out.build();
}

const Element& SuperAlgebra::word_times_letter(const Word& w, Letter g) const {
  Word key = w;
  key.push_back(g);
  {
    std::shared_lock lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  Element result;
  if (w.empty() || pair_in_order(w.back(), g)) {
    result = Element::from_word(key);
  } else {
    Letter x = w.back();
    Word prefix(w.begin(), w.end() - 1);
    if (x == g) {
      result = word_times_raw(prefix, letter_bracket(g, g)) * Rational(1, 2);
    } else {
      // prefix·x·g = s (prefix·g·x - prefix·[g, x]).
      Element moved = times_letter(word_times_letter(prefix, g), x);
      moved -= word_times_raw(prefix, letter_bracket(g, x));
      if (letter_parity(x) & letter_parity(g)) moved *= Rational(-1);
      result = std::move(moved);
    }
  }

  std::unique_lock lock(cache_mutex_);
  return cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

Element SuperAlgebra::times_letter(const Element& a, Letter g) const {
  ElementBuilder out;
  for (const auto& t : a.terms()) out.add(word_times_letter(t.word, g), t.coeff);
  return out.build();
}

Element SuperAlgebra::word_times_word(const Word& w, const Word& tail) const {
  if (tail.empty()) return Element::from_word(w);
  Element cur = word_times_letter(w, tail.front());
  for (std::size_t k = 1; k < tail.size(); ++k) cur = times_letter(cur, tail[k]);
  return cur;
}

Element SuperAlgebra::word_times_raw(const Word& w, const Element& raw) const {
  ElementBuilder out;
  for (const auto& t : raw.terms()) out.add(word_times_word(w, t.word), t.coeff);
  return out.build();
}

void SuperAlgebra::add_word_product(ElementBuilder& out, const Word& w, const Word& tail, const Rational& c) const {
  if (w.empty()) {
    out.add(tail, c);
  } else if (tail.empty()) {
    out.add(w, c);
  } else if (pair_in_order(w.back(), tail.front())) {
    Word cat;
    cat.reserve(w.size() + tail.size());
    cat.insert(cat.end(), w.begin(), w.end());
    cat.insert(cat.end(), tail.begin(), tail.end());
    out.add(cat, c);
  } else if (tail.size() == 1) {
    out.add(word_times_letter(w, tail.front()), c);
  } else {
    out.add(word_times_word(w, tail), c);
  }
}

void SuperAlgebra::multiply_into(ElementBuilder& out, const Element& a, const Element& b,
                                 const Rational& scale) const {
  if (scale == 0) return;
  for (const auto& ta : a.terms()) {
    Rational ca = ta.coeff * scale;
    for (const auto& tb : b.terms()) add_word_product(out, ta.word, tb.word, ca * tb.coeff);
  }
}

Element SuperAlgebra::multiply(const Element& a, const Element& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  ElementBuilder out;
  multiply_into(out, a, b);
  return out.build();
}

Element SuperAlgebra::super_commutator(const Element& a, const Element& b) const {
  auto [a0, a1] = homogeneous_parts(a);
  auto [b0, b1] = homogeneous_parts(b);
  Element r = multiply(a, b);
  r -= multiply(b0, a);
  r -= multiply(b1, a0);
  r += multiply(b1, a1);
  return r;
}

std::size_t SuperAlgebra::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return cache_.size();
}

}  // namespace syk
