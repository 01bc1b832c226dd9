#pragma once

#include <memory>
#include <string>

#include "syk/superalgebra.hpp"

namespace syk {

struct Signature {
  int M = 0;
  int N = 0;

  int size() const noexcept { return M + N; }
  /// 0 for 1..M, 1 for M+1..M+N.
  int index_parity(int i) const noexcept { return i > M ? 1 : 0; }
  std::string str() const;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// t_ij^(r) with r >= 1.
struct Generator {
  int i = 0;
  int j = 0;
  int r = 0;

  Letter pack() const noexcept {
    return (static_cast<Letter>(r) << 16) | (static_cast<Letter>(i) << 8) | static_cast<Letter>(j);
  }
  static Generator unpack(Letter l) noexcept {
    return {static_cast<int>((l >> 8) & 0xff), static_cast<int>(l & 0xff), static_cast<int>(l >> 16)};
  }
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

enum class GeneratorOrder {
  kRIJ,  // (r, i, j) lexicographic, the default
  kIJR,  // (i, j, r) lexicographic
};

/// Y(gl_{M|N}) with the PBW basis attached to a generator order.
class Yangian final : public SuperAlgebra {
 public:
  Yangian(Signature sig, GeneratorOrder order);

  const Signature& signature() const noexcept { return sig_; }
  GeneratorOrder order() const noexcept { return order_; }

  /// The element t_ij^(r); for r == 0 this is the scalar delta_ij.
  Element t(int i, int j, int r) const;
  /// Throws IndexOutOfRange.
  int parity_of(int i, int j) const;
  /// Right-hand side of the defining relation for [t_ij^(r), t_hk^(s)], normal-ordered.
  Element defining_bracket(const Generator& x, const Generator& y) const;

  int letter_parity(Letter x) const override;
  bool letter_less(Letter x, Letter y) const override;
  int letter_weight(Letter x) const override;
  Element letter_bracket(Letter x, Letter y) const override;
  std::string letter_name(Letter x) const override;

  /// Sum of (r - 1) over the letters.
  static int loop_degree(const Word& w);
  /// Largest loop degree of any term; 0 for the zero element.
  static int loop_degree(const Element& x);
  /// Sum of r over the letters.
  static int total_order(const Word& w);

 private:
  Element raw_bracket(const Generator& x, const Generator& y) const;

  Signature sig_;
  GeneratorOrder order_;
};

/// Shared instance per (signature, order); the product cache lives as long as the process.
std::shared_ptr<const Yangian> yangian(Signature sig, GeneratorOrder order = GeneratorOrder::kRIJ);

}  // namespace syk
