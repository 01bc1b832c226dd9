#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "syk/report.hpp"
#include "syk/series.hpp"
#include "syk/yangian.hpp"

namespace syk {

/// Block sizes (mu_1..mu_m | mu_{m+1}..mu_{m+n}).
class Composition {
 public:
  Composition() = default;
  Composition(std::vector<int> even_parts, std::vector<int> odd_parts);

  /// "2,1|1", "|2", "3|". Throws ParseError.
  static Composition parse(const std::string& text);
  std::string str() const;

  int m() const { return m_; }
  int n() const { return static_cast<int>(parts_.size()) - m_; }
  int blocks() const { return static_cast<int>(parts_.size()); }
  /// Block size, 1-based.
  int size(int a) const { return parts_.at(a - 1); }
  /// mu_1 + ... + mu_a.
  int offset(int a) const;
  /// 0 for even blocks (a <= m), 1 otherwise.
  int block_parity(int a) const { return a > m_ ? 1 : 0; }
  Signature signature() const;
  /// (mu_{m+n}, ..., mu_{m+1} | mu_m, ..., mu_1), a composition of (N|M).
  Composition reversed() const;
  const std::vector<int>& parts() const { return parts_; }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int m_ = 0;
};

/// All compositions of (M|N).
std::vector<Composition> all_compositions(Signature sig);

/// Dense matrix of single- or multi-variable series.
class MatrixSeries {
 public:
  MatrixSeries() = default;
  MatrixSeries(int rows, int cols, const MultiSeries& fill = {});

  static MatrixSeries identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  MultiSeries& at(int i, int j) { return entries_.at(static_cast<std::size_t>(i * cols_ + j)); }
  const MultiSeries& at(int i, int j) const { return entries_.at(static_cast<std::size_t>(i * cols_ + j)); }
  /// 0-based half-open ranges.
  MatrixSeries sub(int r0, int r1, int c0, int c1) const;
  void put(int r0, int c0, const MatrixSeries& m);

  MatrixSeries& operator+=(const MatrixSeries& o);
  MatrixSeries& operator-=(const MatrixSeries& o);
  friend MatrixSeries operator+(MatrixSeries a, const MatrixSeries& b) { return a += b; }
  friend MatrixSeries operator-(MatrixSeries a, const MatrixSeries& b) { return a -= b; }
  friend bool operator==(const MatrixSeries&, const MatrixSeries&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<MultiSeries> entries_;
};

/// T(u) truncated at K.
MatrixSeries build_T(const Yangian& y, int K);
MatrixSeries matrix_mul(const SuperAlgebra& alg, const MatrixSeries& a, const MatrixSeries& b);
/// Throws NotUnitriangularConstantTerm unless the constant term is the identity.
MatrixSeries matrix_invert(const SuperAlgebra& alg, const MatrixSeries& a);
/// d - c a^{-1} b.
MatrixSeries quasidet(const SuperAlgebra& alg, const MatrixSeries& a, const MatrixSeries& b,
                      const MatrixSeries& c, const MatrixSeries& d);
/// u -> -u entrywise.
MatrixSeries negate_var(const MatrixSeries& a, Var var);

/// D_a, D'_a, E_{a,b}, F_{b,a} for a composition, all in the variable u.
struct GaussData {
  std::shared_ptr<const Yangian> alg;
  Composition mu;
  int K = 0;
  std::vector<MatrixSeries> D;   // D[a-1]
  std::vector<MatrixSeries> Dp;  // Dp[a-1]
  std::map<std::pair<int, int>, MatrixSeries> E;  // key (a, b), a < b
  std::map<std::pair<int, int>, MatrixSeries> F;  // key (b, a), a < b

  const MatrixSeries& Dm(int a) const { return D.at(a - 1); }
  const MatrixSeries& Dpm(int a) const { return Dp.at(a - 1); }
  const MatrixSeries& Em(int a, int b) const { return E.at({a, b}); }
  const MatrixSeries& Fm(int b, int a) const { return F.at({b, a}); }

  /// Coefficient accessors with 1-based entry indices; r = 0 gives the constant term.
  Element d(int a, int i, int j, int r) const { return Dm(a).at(i - 1, j - 1).coeff(Var::u, r); }
  Element dp(int a, int i, int j, int r) const { return Dpm(a).at(i - 1, j - 1).coeff(Var::u, r); }
  Element e(int a, int b, int i, int j, int r) const { return Em(a, b).at(i - 1, j - 1).coeff(Var::u, r); }
  Element f(int b, int a, int i, int j, int r) const { return Fm(b, a).at(i - 1, j - 1).coeff(Var::u, r); }
};

/// Quasideterminant formulas; E and F normalized by D'_a.
GaussData gauss_blocks(std::shared_ptr<const Yangian> alg, const Composition& mu, int K);
/// Block LDU elimination: clear block column 1, recurse on the Schur complement.
GaussData gauss_blocks_ldu(std::shared_ptr<const Yangian> alg, const Composition& mu, int K);

/// Full block matrices F (lower unitriangular), D (block diagonal), E (upper unitriangular).
MatrixSeries assemble_F(const GaussData& g);
MatrixSeries assemble_D(const GaussData& g);
MatrixSeries assemble_E(const GaussData& g);

/// Alternating path sums over a = i_0 < ... < i_s = b; ẽ(a, a) = I.
MatrixSeries tilde_E(const GaussData& g, int a, int b);
MatrixSeries tilde_F(const GaussData& g, int b, int a);

/// FDE = T, the blockwise expansions of T and T^{-1}, D D' = I, agreement with LDU,
/// constant terms, parities.
VerifyReport check_gauss(std::shared_ptr<const Yangian> alg, const Composition& mu, int K);
/// E_{a,b} and F_{b,a} for b > a + 1 as nested brackets with the adjacent
/// first-order generators, for every choice of the auxiliary index.
VerifyReport check_higher_EF(const GaussData& g);

}  // namespace syk
