#include "syk/series.hpp"

#include <algorithm>

#include "syk/errors.hpp"

namespace syk {

namespace {

int sat_add(int a, int b) {
  if (a >= MultiSeries::kUnbounded || b >= MultiSeries::kUnbounded) return MultiSeries::kUnbounded;
  return std::min(a + b, MultiSeries::kUnbounded - 1);
}

bool within(const Exp& e, const std::array<int, kNumVars>& known) {
  for (int x = 0; x < kNumVars; ++x) {
    if (e[x] > known[x]) return false;
  }
  return true;
}

// Smallest exponent in variable x that could carry a nonzero coefficient.
int valuation(const MultiSeries& s, int x) {
  int v = s.known_orders()[x] == MultiSeries::kUnbounded ? MultiSeries::kUnbounded : s.known_orders()[x] + 1;
  for (const auto& [e, c] : s.coeffs()) v = std::min(v, e[x]);
  return v;
}

std::array<int, kNumVars> product_known(const MultiSeries& a, const MultiSeries& b) {
  std::array<int, kNumVars> k{};
  for (int x = 0; x < kNumVars; ++x) {
    k[x] = std::min(sat_add(a.known_orders()[x], valuation(b, x)), sat_add(b.known_orders()[x], valuation(a, x)));
  }
  return k;
}

Exp add_exp(const Exp& a, const Exp& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

template <class Op>
MultiSeries convolve(const MultiSeries& a, const MultiSeries& b, Op op) {
  const auto known = product_known(a, b);
  std::map<Exp, ElementBuilder> acc;
  for (const auto& [ea, ca] : a.coeffs()) {
    for (const auto& [eb, cb] : b.coeffs()) {
      Exp e = add_exp(ea, eb);
      if (!within(e, known)) continue;
      acc[e].add(op(ca, cb));
    }
  }
  MultiSeries out;
  for (int x = 0; x < kNumVars; ++x) {
    if (known[x] != MultiSeries::kUnbounded) out.truncate(static_cast<Var>(x), known[x]);
  }
  for (auto& [e, builder] : acc) out.add_term(e, builder.build());
  return out;
}

}  // namespace

std::string var_name(Var var) {
  static const char* names[] = {"u", "v", "w"};
  return names[MultiSeries::idx(var)];
}

MultiSeries MultiSeries::constant(const Element& c) {
  MultiSeries s;
  s.add_term({0, 0, 0}, c);
  return s;
}

MultiSeries MultiSeries::zero(Var var, int K) {
  MultiSeries s;
  s.truncate(var, K);
  return s;
}

Element MultiSeries::coeff(const Exp& e) const {
  for (int x = 0; x < kNumVars; ++x) {
    if (e[x] > known_[x]) {
      throw OutOfKnownRange("coefficient " + var_name(static_cast<Var>(x)) + "^-" + std::to_string(e[x]) +
                            " beyond known order " + std::to_string(known_[x]));
    }
  }
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Element() : it->second;
}

Element MultiSeries::coeff(Var var, int r) const {
  Exp e{0, 0, 0};
  e[idx(var)] = r;
  return coeff(e);
}

void MultiSeries::add_term(const Exp& e, const Element& c) {
  if (c.is_zero() || !within(e, known_)) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void MultiSeries::truncate(Var var, int K) {
  int& k = known_[idx(var)];
  k = std::min(k, K);
  std::erase_if(coeffs_, [&](const auto& kv) { return kv.first[idx(var)] > k; });
}

void MultiSeries::merge(const MultiSeries& o, const Rational& scale) {
  for (int x = 0; x < kNumVars; ++x) {
    if (o.known_[x] < known_[x]) truncate(static_cast<Var>(x), o.known_[x]);
  }
  for (const auto& [e, c] : o.coeffs_) add_term(e, c * scale);
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  merge(o, 1);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
  merge(o, -1);
  return *this;
}

MultiSeries& MultiSeries::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
  } else {
    for (auto& [e, c] : coeffs_) c *= s;
  }
  return *this;
}

void SeriesAccumulator::add_product(const SuperAlgebra& alg, const MultiSeries& a, const MultiSeries& b,
                                    const Rational& scale) {
  const auto known = product_known(a, b);
  for (int x = 0; x < kNumVars; ++x) known_[x] = std::min(known_[x], known[x]);
  for (const auto& [ea, ca] : a.coeffs()) {
    for (const auto& [eb, cb] : b.coeffs()) {
      Exp e = add_exp(ea, eb);
      if (!within(e, known_)) continue;
      alg.multiply_into(acc_[e], ca, cb, scale);
    }
  }
}

void SeriesAccumulator::add(const MultiSeries& a, const Rational& scale) {
  for (int x = 0; x < kNumVars; ++x) known_[x] = std::min(known_[x], a.known_orders()[x]);
  for (const auto& [e, c] : a.coeffs()) {
    if (within(e, known_)) acc_[e].add(c, scale);
  }
}

MultiSeries SeriesAccumulator::build() {
  MultiSeries out;
  for (int x = 0; x < kNumVars; ++x) {
    if (known_[x] != MultiSeries::kUnbounded) out.truncate(static_cast<Var>(x), known_[x]);
  }
  for (auto& [e, builder] : acc_) out.add_term(e, builder.build());
  acc_.clear();
  known_.fill(MultiSeries::kUnbounded);
  return out;
}

MultiSeries series_mul(const SuperAlgebra& alg, const MultiSeries& a, const MultiSeries& b) {
  SeriesAccumulator acc;
  acc.add_product(alg, a, b);
  return acc.build();
}

MultiSeries series_supercomm(const SuperAlgebra& alg, const MultiSeries& a, const MultiSeries& b) {
  return convolve(a, b, [&](const Element& x, const Element& y) { return alg.super_commutator(x, y); });
}

MultiSeries series_shift(const MultiSeries& a, Var var, int by) {
  const int x = MultiSeries::idx(var);
  MultiSeries out;
  for (int y = 0; y < kNumVars; ++y) {
    int k = a.known_orders()[y];
    if (k == MultiSeries::kUnbounded) continue;
    out.truncate(static_cast<Var>(y), y == x ? k - by : k);
  }
  if (!a.is_active(var) && by != 0) out.truncate(var, MultiSeries::kUnbounded - 1);
  for (const auto& [e, c] : a.coeffs()) {
    Exp f = e;
    f[x] -= by;
    out.add_term(f, c);
  }
  return out;
}

MultiSeries series_times_difference(const MultiSeries& a, Var x, Var y) {
  return series_shift(a, x, 1) - series_shift(a, y, 1);
}

MultiSeries rename_var(const MultiSeries& a, Var from, Var to) {
  if (from == to) return a;
  if (a.is_active(to)) throw DimensionMismatch("rename target variable " + var_name(to) + " is in use");
  const int f = MultiSeries::idx(from), t = MultiSeries::idx(to);
  MultiSeries out;
  for (int y = 0; y < kNumVars; ++y) {
    int k = a.known_orders()[y];
    if (k == MultiSeries::kUnbounded || y == f) continue;
    out.truncate(static_cast<Var>(y), k);
  }
  if (a.is_active(from)) out.truncate(to, a.known(from));
  for (const auto& [e, c] : a.coeffs()) {
    Exp g = e;
    g[t] = e[f];
    g[f] = 0;
    out.add_term(g, c);
  }
  return out;
}

MultiSeries negate_var(const MultiSeries& a, Var var) {
  const int x = MultiSeries::idx(var);
  MultiSeries out = a * Rational(0);
  for (const auto& [e, c] : a.coeffs()) out.add_term(e, (e[x] & 1) ? -c : c);
  return out;
}

}  // namespace syk
