#include "syk/gauss.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "syk/errors.hpp"

namespace syk {

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<int> even_parts, std::vector<int> odd_parts)
    : parts_(std::move(even_parts)), m_(static_cast<int>(parts_.size())) {
  parts_.insert(parts_.end(), odd_parts.begin(), odd_parts.end());
  for (int p : parts_) {
    if (p <= 0) throw ParseError("composition parts must be positive");
  }
  if (parts_.empty()) throw ParseError("empty composition");
}

Composition Composition::parse(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos) {
    throw ParseError("composition '" + text + "' needs exactly one '|'");
  }
  auto parse_side = [&](const std::string& side) {
    std::vector<int> out;
    if (side.empty()) return out;
    std::stringstream ss(side);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 3) {
        throw ParseError("bad composition part '" + item + "' in '" + text + "'");
      }
      out.push_back(std::stoi(item));
    }
    if (side.back() == ',') throw ParseError("trailing comma in '" + text + "'");
    return out;
  };
  return Composition(parse_side(text.substr(0, bar)), parse_side(text.substr(bar + 1)));
}

std::string Composition::str() const {
  std::string s;
  for (int a = 0; a < blocks(); ++a) {
    if (a == m_) s += "|";
    else if (a > 0) s += ",";
    s += std::to_string(parts_[a]);
  }
  if (m_ == blocks()) s += "|";
  return s;
}

int Composition::offset(int a) const {
  return std::accumulate(parts_.begin(), parts_.begin() + a, 0);
}

Signature Composition::signature() const {
  return {offset(m_), offset(blocks()) - offset(m_)};
}

Composition Composition::reversed() const {
  std::vector<int> even(parts_.rbegin(), parts_.rbegin() + n());
  std::vector<int> odd(parts_.rbegin() + n(), parts_.rend());
  return Composition(even, odd);
}

namespace {

void compositions_of(int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = 1; p <= total; ++p) {
    cur.push_back(p);
    compositions_of(total - p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> all_compositions(Signature sig) {
  std::vector<std::vector<int>> evens, odds;
  std::vector<int> cur;
  compositions_of(sig.M, cur, evens);
  compositions_of(sig.N, cur, odds);
  std::vector<Composition> out;
  for (const auto& e : evens)
    for (const auto& o : odds) out.emplace_back(e, o);
  return out;
}

// ---------------------------------------------------------------------------
// MatrixSeries

MatrixSeries::MatrixSeries(int rows, int cols, const MultiSeries& fill)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols), fill) {}

MatrixSeries MatrixSeries::identity(int n) {
  MatrixSeries m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = MultiSeries::constant(Element(Rational(1)));
  return m;
}

MatrixSeries MatrixSeries::sub(int r0, int r1, int c0, int c1) const {
  MatrixSeries m(r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) m.at(i - r0, j - c0) = at(i, j);
  return m;
}

void MatrixSeries::put(int r0, int c0, const MatrixSeries& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) at(r0 + i, c0 + j) = m.at(i, j);
}

MatrixSeries& MatrixSeries::operator+=(const MatrixSeries& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

MatrixSeries& MatrixSeries::operator-=(const MatrixSeries& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

MatrixSeries build_T(const Yangian& y, int K) {
  const int d = y.signature().size();
  MatrixSeries T(d, d);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      MultiSeries s = MultiSeries::zero(Var::u, K);
      for (int r = 0; r <= K; ++r) s.add_term({r, 0, 0}, y.t(i, j, r));
      T.at(i - 1, j - 1) = std::move(s);
    }
  }
  return T;
}

MatrixSeries matrix_mul(const SuperAlgebra& alg, const MatrixSeries& a, const MatrixSeries& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  MatrixSeries c(a.rows(), b.cols());
  SeriesAccumulator acc;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      for (int k = 0; k < a.cols(); ++k) acc.add_product(alg, a.at(i, k), b.at(k, j));
      c.at(i, j) = acc.build();
    }
  }
  return c;
}

namespace {

// The single variable the entries depend on, if there is exactly one.
std::optional<Var> sole_variable(const MatrixSeries& a) {
  std::optional<Var> found;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      for (int x = 0; x < kNumVars; ++x) {
        Var v = static_cast<Var>(x);
        if (!a.at(i, j).is_active(v)) continue;
        if (found && *found != v) return std::nullopt;
        found = v;
      }
    }
  }
  return found;
}

// A^{-1} coefficientwise: X_0 = I, X_r = -sum_{s=1..r} A_s X_{r-s}.
MatrixSeries invert_one_variable(const SuperAlgebra& alg, const MatrixSeries& a, Var var) {
  const int n = a.rows();
  int K = MultiSeries::kUnbounded;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) K = std::min(K, a.at(i, j).known(var));

  auto coeff = [&](const MultiSeries& s, int r) {
    Exp e{0, 0, 0};
    e[MultiSeries::idx(var)] = r;
    auto it = s.coeffs().find(e);
    return it == s.coeffs().end() ? nullptr : &it->second;
  };
  // X[r] is the n x n grid of coefficients of var^{-r}.
  std::vector<std::vector<Element>> X(static_cast<std::size_t>(K + 1),
                                      std::vector<Element>(static_cast<std::size_t>(n * n)));
  for (int i = 0; i < n; ++i) X[0][static_cast<std::size_t>(i * n + i)] = Element(Rational(1));
  for (int r = 1; r <= K; ++r) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        ElementBuilder out;
        for (int s = 1; s <= r; ++s) {
          for (int k = 0; k < n; ++k) {
            const Element* as = coeff(a.at(i, k), s);
            const Element& x = X[static_cast<std::size_t>(r - s)][static_cast<std::size_t>(k * n + j)];
            if (as && !x.is_zero()) alg.multiply_into(out, *as, x, Rational(-1));
          }
        }
        X[static_cast<std::size_t>(r)][static_cast<std::size_t>(i * n + j)] = out.build();
      }
    }
  }
  MatrixSeries inv(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      MultiSeries s = MultiSeries::zero(var, K);
      for (int r = 0; r <= K; ++r) {
        Exp e{0, 0, 0};
        e[MultiSeries::idx(var)] = r;
        s.add_term(e, X[static_cast<std::size_t>(r)][static_cast<std::size_t>(i * n + j)]);
      }
      inv.at(i, j) = std::move(s);
    }
  }
  return inv;
}

}  // namespace

MatrixSeries matrix_invert(const SuperAlgebra& alg, const MatrixSeries& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("cannot invert a non-square matrix");
  const int n = a.rows();
  int depth = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const MultiSeries& s = a.at(i, j);
      for (int x = 0; x < kNumVars; ++x) {
        if (s.is_active(static_cast<Var>(x))) depth += s.known(static_cast<Var>(x));
      }
      for (const auto& [e, c] : s.coeffs()) {
        bool constant = e == Exp{0, 0, 0};
        bool negative = e[0] < 0 || e[1] < 0 || e[2] < 0;
        if (negative || (constant && c != Element(Rational(i == j ? 1 : 0)))) {
          throw NotUnitriangularConstantTerm("constant term of entry (" + std::to_string(i + 1) + "," +
                                             std::to_string(j + 1) + ") is not the identity");
        }
      }
      if (i == j && s.coeffs().count(Exp{0, 0, 0}) == 0) {
        throw NotUnitriangularConstantTerm("zero constant term on the diagonal");
      }
    }
  }
  if (auto var = sole_variable(a)) return invert_one_variable(alg, a, *var);

  // Several variables: a = I - X with X of positive valuation; a^{-1} = sum_k X^k.
  MatrixSeries x = MatrixSeries::identity(n) - a;
  MatrixSeries sum = MatrixSeries::identity(n);
  MatrixSeries term = MatrixSeries::identity(n);
  for (int k = 1; k <= depth; ++k) {
    term = matrix_mul(alg, term, x);
    bool all_zero = true;
    for (int i = 0; i < n && all_zero; ++i)
      for (int j = 0; j < n && all_zero; ++j) all_zero = term.at(i, j).is_zero();
    sum += term;
    if (all_zero) break;
  }
  return sum;
}

MatrixSeries quasidet(const SuperAlgebra& alg, const MatrixSeries& a, const MatrixSeries& b,
                      const MatrixSeries& c, const MatrixSeries& d) {
  if (a.rows() == 0) return d;
  return d - matrix_mul(alg, c, matrix_mul(alg, matrix_invert(alg, a), b));
}

MatrixSeries negate_var(const MatrixSeries& a, Var var) {
  MatrixSeries out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = negate_var(a.at(i, j), var);
  return out;
}

// ---------------------------------------------------------------------------
// Gauss decomposition

namespace {

MatrixSeries block_of(const MatrixSeries& T, const Composition& mu, int a, int b) {
  return T.sub(mu.offset(a - 1), mu.offset(a), mu.offset(b - 1), mu.offset(b));
}

GaussData empty_data(std::shared_ptr<const Yangian> alg, const Composition& mu, int K) {
  if (alg->signature() != mu.signature()) {
    throw DimensionMismatch("composition " + mu.str() + " does not match " + alg->signature().str());
  }
  GaussData g;
  g.alg = std::move(alg);
  g.mu = mu;
  g.K = K;
  return g;
}

}  // namespace

GaussData gauss_blocks(std::shared_ptr<const Yangian> alg, const Composition& mu, int K) {
  GaussData g = empty_data(std::move(alg), mu, K);
  const SuperAlgebra& A = *g.alg;
  const MatrixSeries T = build_T(*g.alg, K);
  const int B = mu.blocks();
  const int d = T.rows();

  for (int a = 1; a <= B; ++a) {
    const int o = mu.offset(a - 1);
    const int lo = o, hi = mu.offset(a);
    // row_strip = T_{a,<a} L^{-1}; the correction to column block X is row_strip * T_{<a,X}.
    MatrixSeries row_strip, linv;
    if (o > 0) {
      linv = matrix_invert(A, T.sub(0, o, 0, o));
      row_strip = matrix_mul(A, T.sub(lo, hi, 0, o), linv);
    }
    auto corrected_row = [&](int c0, int c1) {
      MatrixSeries m = T.sub(lo, hi, c0, c1);
      if (o > 0) m -= matrix_mul(A, row_strip, T.sub(0, o, c0, c1));
      return m;
    };

    MatrixSeries Da = corrected_row(lo, hi);
    MatrixSeries Dpa = matrix_invert(A, Da);

    if (a < B) {
      // E_{a,b} for all b > a at once from the corrected row strip.
      MatrixSeries upper = matrix_mul(A, Dpa, corrected_row(hi, d));
      // F_{b,a}: (T_{>a,a} - T_{>a,<a} L^{-1} T_{<a,a}) D'_a.
      MatrixSeries lower = T.sub(hi, d, lo, hi);
      if (o > 0) lower -= matrix_mul(A, T.sub(hi, d, 0, o), matrix_mul(A, linv, T.sub(0, o, lo, hi)));
      lower = matrix_mul(A, lower, Dpa);
      for (int b = a + 1; b <= B; ++b) {
        const int c0 = mu.offset(b - 1) - hi, c1 = mu.offset(b) - hi;
        g.E[{a, b}] = upper.sub(0, hi - lo, c0, c1);
        g.F[{b, a}] = lower.sub(c0, c1, 0, hi - lo);
      }
    }
    g.D.push_back(std::move(Da));
    g.Dp.push_back(std::move(Dpa));
  }
  return g;
}

GaussData gauss_blocks_ldu(std::shared_ptr<const Yangian> alg, const Composition& mu, int K) {
  GaussData g = empty_data(std::move(alg), mu, K);
  const SuperAlgebra& A = *g.alg;
  MatrixSeries S = build_T(*g.alg, K);
  const int B = mu.blocks();
  for (int a = 1; a <= B; ++a) {
    const int s = mu.size(a);
    const int rest = S.rows() - s;
    MatrixSeries Da = S.sub(0, s, 0, s);
    MatrixSeries Dpa = matrix_invert(A, Da);
    if (rest > 0) {
      MatrixSeries top = matrix_mul(A, Dpa, S.sub(0, s, s, s + rest));
      MatrixSeries left = matrix_mul(A, S.sub(s, s + rest, 0, s), Dpa);
      for (int b = a + 1; b <= B; ++b) {
        const int c0 = mu.offset(b - 1) - mu.offset(a), c1 = mu.offset(b) - mu.offset(a);
        g.E[{a, b}] = top.sub(0, s, c0, c1);
        g.F[{b, a}] = left.sub(c0, c1, 0, s);
      }
      S = S.sub(s, s + rest, s, s + rest) - matrix_mul(A, S.sub(s, s + rest, 0, s), top);
    }
    g.D.push_back(std::move(Da));
    g.Dp.push_back(std::move(Dpa));
  }
  return g;
}

MatrixSeries assemble_D(const GaussData& g) {
  const int d = g.mu.signature().size();
  MatrixSeries m(d, d);
  for (int a = 1; a <= g.mu.blocks(); ++a) m.put(g.mu.offset(a - 1), g.mu.offset(a - 1), g.Dm(a));
  return m;
}

MatrixSeries assemble_E(const GaussData& g) {
  const int d = g.mu.signature().size();
  MatrixSeries m = MatrixSeries::identity(d);
  for (const auto& [ab, e] : g.E) m.put(g.mu.offset(ab.first - 1), g.mu.offset(ab.second - 1), e);
  return m;
}

MatrixSeries assemble_F(const GaussData& g) {
  const int d = g.mu.signature().size();
  MatrixSeries m = MatrixSeries::identity(d);
  for (const auto& [ba, f] : g.F) m.put(g.mu.offset(ba.first - 1), g.mu.offset(ba.second - 1), f);
  return m;
}

MatrixSeries tilde_E(const GaussData& g, int a, int b) {
  if (a == b) return MatrixSeries::identity(g.mu.size(a));
  MatrixSeries sum(g.mu.size(a), g.mu.size(b));
  for (int c = a + 1; c <= b; ++c) sum -= matrix_mul(*g.alg, g.Em(a, c), tilde_E(g, c, b));
  return sum;
}

MatrixSeries tilde_F(const GaussData& g, int b, int a) {
  if (a == b) return MatrixSeries::identity(g.mu.size(a));
  MatrixSeries sum(g.mu.size(b), g.mu.size(a));
  for (int c = a; c < b; ++c) sum -= matrix_mul(*g.alg, g.Fm(b, c), tilde_F(g, c, a));
  return sum;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

// Records every u-coefficient 0..K of every entry of `diff`.
void record_matrix(VerifyReport& rep, const std::string& rel, std::vector<int> idx, const MatrixSeries& diff, int K) {
  for (int i = 0; i < diff.rows(); ++i) {
    for (int j = 0; j < diff.cols(); ++j) {
      for (int r = 0; r <= K; ++r) {
        std::vector<int> full = idx;
        full.insert(full.end(), {i + 1, j + 1, r});
        rep.record(rel, std::move(full), diff.at(i, j).coeff(Var::u, r));
      }
    }
  }
}

}  // namespace

VerifyReport check_gauss(std::shared_ptr<const Yangian> alg, const Composition& mu, int K) {
  VerifyReport rep;
  const GaussData g = gauss_blocks(alg, mu, K);
  const GaussData l = gauss_blocks_ldu(alg, mu, K);
  const SuperAlgebra& A = *alg;
  const int B = mu.blocks();
  const MatrixSeries T = build_T(*alg, K);
  const MatrixSeries Tinv = matrix_invert(A, T);

  for (int a = 1; a <= B; ++a) {
    record_matrix(rep, "gauss.ldu.D", {a}, g.Dm(a) - l.Dm(a), K);
    for (int b = a + 1; b <= B; ++b) {
      record_matrix(rep, "gauss.ldu.E", {a, b}, g.Em(a, b) - l.Em(a, b), K);
      record_matrix(rep, "gauss.ldu.F", {b, a}, g.Fm(b, a) - l.Fm(b, a), K);
    }
  }

  MatrixSeries fde = matrix_mul(A, matrix_mul(A, assemble_F(g), assemble_D(g)), assemble_E(g));
  record_matrix(rep, "gauss.fde", {}, fde - T, K);

  auto prod3 = [&](const MatrixSeries& x, const MatrixSeries& y, const MatrixSeries& z) {
    return matrix_mul(A, matrix_mul(A, x, y), z);
  };
  auto Tb = [&](const MatrixSeries& M, int a, int b) { return block_of(M, mu, a, b); };

  for (int a = 1; a <= B; ++a) {
    MatrixSeries diag = g.Dm(a);
    for (int c = 1; c < a; ++c) diag += prod3(g.Fm(a, c), g.Dm(c), g.Em(c, a));
    record_matrix(rep, "gauss.block.t-diag", {a}, diag - Tb(T, a, a), K);

    MatrixSeries idiag = g.Dpm(a);
    for (int c = a + 1; c <= B; ++c) idiag += prod3(tilde_E(g, a, c), g.Dpm(c), tilde_F(g, c, a));
    record_matrix(rep, "gauss.block.tinv-diag", {a}, idiag - Tb(Tinv, a, a), K);

    MatrixSeries one = MatrixSeries::identity(mu.size(a));
    record_matrix(rep, "gauss.ddp", {a, 0}, matrix_mul(A, g.Dm(a), g.Dpm(a)) - one, K);
    record_matrix(rep, "gauss.ddp", {a, 1}, matrix_mul(A, g.Dpm(a), g.Dm(a)) - one, K);

    for (int b = a + 1; b <= B; ++b) {
      MatrixSeries up = matrix_mul(A, g.Dm(a), g.Em(a, b));
      MatrixSeries down = matrix_mul(A, g.Fm(b, a), g.Dm(a));
      for (int c = 1; c < a; ++c) {
        up += prod3(g.Fm(a, c), g.Dm(c), g.Em(c, b));
        down += prod3(g.Fm(b, c), g.Dm(c), g.Em(c, a));
      }
      record_matrix(rep, "gauss.block.t-upper", {a, b}, up - Tb(T, a, b), K);
      record_matrix(rep, "gauss.block.t-lower", {b, a}, down - Tb(T, b, a), K);

      MatrixSeries iup = matrix_mul(A, tilde_E(g, a, b), g.Dpm(b));
      MatrixSeries idown = matrix_mul(A, g.Dpm(b), tilde_F(g, b, a));
      for (int c = b + 1; c <= B; ++c) {
        iup += prod3(tilde_E(g, a, c), g.Dpm(c), tilde_F(g, c, b));
        idown += prod3(tilde_E(g, b, c), g.Dpm(c), tilde_F(g, c, a));
      }
      record_matrix(rep, "gauss.block.tinv-upper", {a, b}, iup - Tb(Tinv, a, b), K);
      record_matrix(rep, "gauss.block.tinv-lower", {b, a}, idown - Tb(Tinv, b, a), K);
    }
  }

  // Constant terms and parities of every coefficient.
  auto check_coeffs = [&](const std::string& rel, std::vector<int> idx, const MatrixSeries& m, bool unit,
                          int parity) {
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        Element c0 = m.at(i, j).coeff(Var::u, 0);
        if (unit && i == j) c0 -= Element(Rational(1));
        std::vector<int> full = idx;
        full.insert(full.end(), {i + 1, j + 1});
        rep.record(rel + ".const", full, c0);
        for (int r = 1; r <= K; ++r) {
          Element c = m.at(i, j).coeff(Var::u, r);
          auto p = A.parity(c);
          std::vector<int> at = full;
          at.push_back(r);
          rep.record(rel + ".parity", at, (p && *p == parity) || c.is_zero() ? Element() : c);
        }
      }
    }
  };
  for (int a = 1; a <= B; ++a) {
    check_coeffs("gauss.D", {a}, g.Dm(a), true, 0);
    for (int b = a + 1; b <= B; ++b) {
      int p = mu.block_parity(a) ^ mu.block_parity(b);
      check_coeffs("gauss.E", {a, b}, g.Em(a, b), false, p);
      check_coeffs("gauss.F", {b, a}, g.Fm(b, a), false, p);
    }
  }
  return rep;
}

VerifyReport check_higher_EF(const GaussData& g) {
  VerifyReport rep;
  const auto& A = *g.alg;
  const auto& mu = g.mu;
  for (int a = 1; a <= mu.blocks(); ++a) {
    for (int b = a + 2; b <= mu.blocks(); ++b) {
      const Rational sign = mu.block_parity(b - 1) ? -1 : 1;
      for (int r = 1; r <= g.K; ++r) {
        for (int k = 1; k <= mu.size(b - 1); ++k) {
          for (int i = 1; i <= mu.size(a); ++i) {
            for (int j = 1; j <= mu.size(b); ++j) {
              Element e = A.super_commutator(g.e(a, b - 1, i, k, r), g.e(b - 1, b, k, j, 1)) * sign;
              rep.record("higher.E", {a, b, i, j, k, r}, g.e(a, b, i, j, r) - e);
            }
          }
          for (int i = 1; i <= mu.size(b); ++i) {
            for (int j = 1; j <= mu.size(a); ++j) {
              Element f = A.super_commutator(g.f(b, b - 1, i, k, 1), g.f(b - 1, a, k, j, r)) * sign;
              rep.record("higher.F", {b, a, i, j, k, r}, g.f(b, a, i, j, r) - f);
            }
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace syk
