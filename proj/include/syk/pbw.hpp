#pragma once

#include <memory>
#include <string>
#include <vector>

#include "syk/gauss.hpp"
#include "syk/report.hpp"
#include "syk/yangian.hpp"

namespace syk {

/// U(gl_{M|N}[t]) with PBW basis in (s, i, j)-lex order. Letters reuse the
/// Generator packing with r holding the power s of t.
class LoopAlgebra final : public SuperAlgebra {
 public:
  explicit LoopAlgebra(Signature sig);

  const Signature& signature() const noexcept { return sig_; }
  /// E_ij t^s.
  Element e(int i, int j, int s) const;

  int letter_parity(Letter x) const override;
  bool letter_less(Letter x, Letter y) const override;
  int letter_weight(Letter x) const override;
  Element letter_bracket(Letter x, Letter y) const override;
  std::string letter_name(Letter x) const override;

 private:
  Signature sig_;
};

std::shared_ptr<const LoopAlgebra> loop_algebra(Signature sig);

/// Loop-degree-k component of x mapped to U(gl_{M|N}[t]) by
/// t_ij^(r) -> (-1)^{p(i)} E_ij t^{r-1}. Throws DegreeExceeded above k.
Element gr_image(const Yangian& y, const LoopAlgebra& loop, const Element& x, int k);

/// gr of every generator supercommutator with (r-1)+(s-1) <= k_max against the
/// loop bracket, then gr_block_check for every composition of sig.
VerifyReport gr_bracket_check(Signature sig, int k_max);
/// Graded images of the parabolic generators, and the graded bracket of two
/// E blocks, for orders with r+s-2 <= k_max.
VerifyReport gr_block_check(const Composition& mu, int k_max);

enum class PbwFamily { kFull, kD, kE, kF, kT };
/// "full", "D-only", "E-only", "F-only", "t-gens".
std::string family_name(PbwFamily f);
/// Throws ParseError.
PbwFamily parse_family(const std::string& name);

struct PbwSymbol {
  char kind = 'D';  // 'D', 'E', 'F' or 't'
  int a = 0;        // block of D; row block of E and F; unused for t
  int b = 0;        // column block of E and F
  int i = 0;
  int j = 0;
  int r = 0;

  std::string str() const;
  friend bool operator==(const PbwSymbol&, const PbwSymbol&) = default;
};

using PbwMonomial = std::vector<PbwSymbol>;

/// Ordered symbols of a family: F < D < E, (block, entry, r)-lex inside each;
/// t-generators in (r, i, j)-lex. Orders 1..max_r.
std::vector<PbwSymbol> pbw_symbols(const Composition& mu, int max_r, PbwFamily family);
/// Ordered monomials of length 1..L and loop degree <= k, odd symbols unrepeated.
std::vector<PbwMonomial> enumerate_pbw(const Composition& mu, int k, int L, PbwFamily family);
/// Ordered monomials with total order (sum of r) <= n, any length.
std::vector<PbwMonomial> enumerate_pbw_by_order(const Composition& mu, int n, PbwFamily family);

/// Normal-form expansion in Y(gl_{M|N}). Throws DegreeExceeded if a symbol's
/// order exceeds g.K.
Element expand(const PbwMonomial& m, const GaussData& g);

struct RankReport {
  std::size_t count = 0;
  std::size_t rank = 0;
  bool full() const { return rank == count; }
};

/// Exact rank of the coefficient matrix of the expansions.
RankReport independence_check(const std::vector<PbwMonomial>& monomials, const Composition& mu, int K,
                              int workers = 1);

struct SpanReport {
  std::size_t targets = 0;
  std::size_t failures = 0;
  /// Number of parabolic monomials spanning the window.
  std::size_t basis = 0;
};

/// Every ordered t-monomial of loop degree <= k and length <= L lies in the span
/// of parabolic monomials with total order <= k + L. Throws DegreeExceeded
/// unless K >= k + L.
SpanReport spanning_check(const Composition& mu, int k, int L, int K, int workers = 1);

/// Exact rank over Q by fraction-free elimination.
std::size_t exact_rank(const std::vector<Element>& rows);

}  // namespace syk
