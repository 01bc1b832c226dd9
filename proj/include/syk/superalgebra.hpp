#pragma once

#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "syk/element.hpp"

namespace syk {

/// An associative superalgebra presented by generators and quadratic-linear
/// supercommutator relations, with a PBW basis of ordered monomials.
///
/// Subclasses describe the generators (parity, a total order, a weight) and
/// the supercommutator of two generators. This class turns that data into a
/// terminating straightening algorithm. Every commutator term must have
/// strictly smaller total weight than the pair it replaces, which is what
/// makes the rewriting terminate.
///
/// Two independent routes to normal form exist:
///  - normal_form() rewrites the leftmost out-of-order adjacent pair of
///    arbitrary words until none remains;
///  - multiply() inserts letters one at a time into already-normal words,
///    memoizing each (word, letter) product.
/// They must agree, and the tests hold them to it.
class SuperAlgebra {
 public:
  SuperAlgebra() = default;
  SuperAlgebra(const SuperAlgebra&) = delete;
  SuperAlgebra& operator=(const SuperAlgebra&) = delete;
  virtual ~SuperAlgebra() = default;

  virtual int letter_parity(Letter x) const = 0;
  /// Strict PBW order on generators.
  virtual bool letter_less(Letter x, Letter y) const = 0;
  virtual int letter_weight(Letter x) const = 0;
  /// Supercommutator [x, y] for x <= y, as an unreduced combination of words.
  virtual Element letter_bracket(Letter x, Letter y) const = 0;
  virtual std::string letter_name(Letter x) const = 0;

  bool is_normal(const Word& w) const;
  int word_parity(const Word& w) const;
  /// Parity of a homogeneous element; nullopt when mixed. Zero counts as even.
  std::optional<int> parity(const Element& x) const;
  /// Splits into (even part, odd part).
  std::pair<Element, Element> homogeneous_parts(const Element& x) const;

  Element normal_form(const Element& x) const;
  /// Product of two elements whose words are already normal.
  Element multiply(const Element& a, const Element& b) const;
  /// out += scale * a * b.
  void multiply_into(ElementBuilder& out, const Element& a, const Element& b, const Rational& scale = 1) const;
  Element times_letter(const Element& a, Letter g) const;
  /// ab - (-1)^{|a||b|} ba, extended bilinearly over homogeneous parts.
  Element super_commutator(const Element& a, const Element& b) const;

  std::size_t cache_size() const;

 private:
  const Element& word_times_letter(const Word& w, Letter g) const;
  Element word_times_word(const Word& w, const Word& tail) const;
  void add_word_product(ElementBuilder& out, const Word& w, const Word& tail, const Rational& c) const;
  Element word_times_raw(const Word& w, const Element& raw) const;
  bool pair_in_order(Letter a, Letter b) const;

  mutable std::shared_mutex cache_mutex_;
  // Key is the concatenation w·g of a normal word w and one letter g.
  mutable std::unordered_map<Word, Element, WordHash> cache_;
};

}  // namespace syk
