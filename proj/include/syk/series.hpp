#pragma once

#include <array>
#include <climits>
#include <map>
#include <string>

#include "syk/superalgebra.hpp"

namespace syk {

enum class Var { u = 0, v = 1, w = 2 };
inline constexpr int kNumVars = 3;

/// Exponent triple; entry r stands for var^{-r}. Negative entries are positive powers.
using Exp = std::array<int, kNumVars>;

/// Truncated series in u^{-1}, v^{-1}, w^{-1} with algebra coefficients.
///
/// Each active variable carries a known order K: coefficients with exponent
/// above K in that variable were truncated away and are unknown, not zero.
/// Inactive variables do not occur; the series is constant in them and every
/// coefficient in that direction is known.
class MultiSeries {
 public:
  static constexpr int kUnbounded = INT_MAX / 4;

  MultiSeries() { known_.fill(kUnbounded); }

  /// Constant series; known everywhere.
  static MultiSeries constant(const Element& c);
  /// Zero series in `var` known to order K.
  static MultiSeries zero(Var var, int K);

  bool is_active(Var var) const { return known_[idx(var)] != kUnbounded; }
  int known(Var var) const { return known_[idx(var)]; }
  const std::array<int, kNumVars>& known_orders() const { return known_; }
  const std::map<Exp, Element>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Throws OutOfKnownRange when e exceeds the known order of an active variable.
  Element coeff(const Exp& e) const;
  /// Single-variable accessor.
  Element coeff(Var var, int r) const;

  /// Adds c at exponent e; silently ignored beyond the known range.
  void add_term(const Exp& e, const Element& c);
  /// Makes `var` active with known order K, dropping terms above it. Lowering only.
  void truncate(Var var, int K);

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const Rational& s);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator-(MultiSeries a) { return a *= Rational(-1); }
  friend MultiSeries operator*(MultiSeries a, const Rational& s) { return a *= s; }
  friend bool operator==(const MultiSeries&, const MultiSeries&) = default;

  static int idx(Var var) { return static_cast<int>(var); }

 private:
  void merge(const MultiSeries& o, const Rational& scale);

  std::map<Exp, Element> coeffs_;
  std::array<int, kNumVars> known_;
};

/// Sums of products of series, reduced once at the end.
class SeriesAccumulator {
 public:
  SeriesAccumulator() { known_.fill(MultiSeries::kUnbounded); }
  /// += scale * a * b.
  void add_product(const SuperAlgebra& alg, const MultiSeries& a, const MultiSeries& b, const Rational& scale = 1);
  void add(const MultiSeries& a, const Rational& scale = 1);
  MultiSeries build();

 private:
  std::array<int, kNumVars> known_;
  std::map<Exp, ElementBuilder> acc_;
};

/// Cauchy product; a's coefficients multiply from the left.
MultiSeries series_mul(const SuperAlgebra& alg, const MultiSeries& a, const MultiSeries& b);
/// Coefficient-wise supercommutator of the two series.
MultiSeries series_supercomm(const SuperAlgebra& alg, const MultiSeries& a, const MultiSeries& b);
/// Multiplication by var^by.
MultiSeries series_shift(const MultiSeries& a, Var var, int by);
/// (x - y) * a.
MultiSeries series_times_difference(const MultiSeries& a, Var x, Var y);
/// Substitutes `to` for `from`; `to` must be inactive.
MultiSeries rename_var(const MultiSeries& a, Var from, Var to);
/// Substitutes -var for var.
MultiSeries negate_var(const MultiSeries& a, Var var);
/// Applies f to each coefficient; the result keeps a's known orders.
template <class F>
MultiSeries map_coeffs(const MultiSeries& a, F&& f) {
  MultiSeries out = a * Rational(0);
  for (const auto& [e, c] : a.coeffs()) out.add_term(e, f(c));
  return out;
}

std::string var_name(Var var);

}  // namespace syk
