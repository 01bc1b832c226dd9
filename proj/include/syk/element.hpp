#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "syk/rational.hpp"

namespace syk {

/// A generator of some superalgebra, packed into 32 bits by the owning algebra.
using Letter = std::uint32_t;

/// An ordered product of generators, read left to right.
using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Finite rational linear combination of words.
///
/// Terms are kept sorted by word with no zero coefficients, so two elements
/// are equal exactly when their term vectors are. Whether the words are in
/// normal form is the responsibility of the algebra that produced the element.
class Element {
 public:
  struct Term {
    Word word;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Element() = default;
  explicit Element(const Rational& scalar);

  static Element from_word(Word word, const Rational& coeff = 1);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Word& word) const;
  /// Coefficient of the empty word.
  Rational scalar_part() const { return coefficient({}); }
  std::size_t max_length() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& scale);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& s) { return a *= s; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  friend class ElementBuilder;
  void merge(const Element& other, int sign);

  std::vector<Term> terms_;
};

/// Accumulates terms in a hash map and emits a canonical Element.
class ElementBuilder {
 public:
  void add(const Word& word, const Rational& coeff);
  void add(const Element& e, const Rational& scale = 1);
  Element build();

 private:
  std::unordered_map<Word, Rational, WordHash> acc_;
};

}  // namespace syk
