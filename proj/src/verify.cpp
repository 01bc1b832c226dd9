#include "syk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <utility>

#include "syk/errors.hpp"
#include "syk/morphisms.hpp"
#include "syk/series.hpp"

namespace syk {

namespace {

constexpr Var U = Var::u;
constexpr Var V = Var::v;
constexpr Var W = Var::w;

using Task = std::function<void(VerifyReport&)>;

VerifyReport run_tasks(const std::vector<Task>& tasks, int workers) {
  std::vector<VerifyReport> parts(tasks.size());
  if (workers <= 1 || tasks.size() <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) tasks[t](parts[t]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
      for (;;) {
        std::size_t t = next++;
        if (t >= tasks.size()) return;
        try {
          tasks[t](parts[t]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(workers, static_cast<int>(tasks.size()));
    for (int w = 0; w < n; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  VerifyReport out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

int resolve_workers(const VerifyOptions& opts) { return opts.workers > 0 ? opts.workers : default_workers(); }

Rational sgn(int parity) { return parity ? Rational(-1) : Rational(1); }
int delta(int x, int y) { return x == y ? 1 : 0; }

/// Gauss blocks viewed through a block numbering, possibly after a morphism.
struct Blocks {
  std::shared_ptr<const Yangian> alg;
  Composition mu;
  int K = 0;
  std::vector<MatrixSeries> D, Dp;
  std::map<std::pair<int, int>, MatrixSeries> E, F;

  int nb() const { return mu.blocks(); }
  int m() const { return mu.m(); }
  int sz(int a) const { return mu.size(a); }
  int pa(int a) const { return mu.block_parity(a); }

  static MultiSeries at(const MultiSeries& s, Var x) { return x == U ? s : rename_var(s, U, x); }
  MultiSeries Ds(int a, int i, int j, Var x) const { return at(D.at(a - 1).at(i - 1, j - 1), x); }
  MultiSeries Dps(int a, int i, int j, Var x) const { return at(Dp.at(a - 1).at(i - 1, j - 1), x); }
  MultiSeries Es(int a, int b, int i, int j, Var x) const { return at(E.at({a, b}).at(i - 1, j - 1), x); }
  MultiSeries Fs(int b, int a, int i, int j, Var x) const { return at(F.at({b, a}).at(i - 1, j - 1), x); }

  Element d(int a, int i, int j, int r) const { return D.at(a - 1).at(i - 1, j - 1).coeff(U, r); }
  Element dp(int a, int i, int j, int r) const { return Dp.at(a - 1).at(i - 1, j - 1).coeff(U, r); }
  Element e(int a, int b, int i, int j, int r) const { return E.at({a, b}).at(i - 1, j - 1).coeff(U, r); }
  Element f(int b, int a, int i, int j, int r) const { return F.at({b, a}).at(i - 1, j - 1).coeff(U, r); }
};

using BlocksPtr = std::shared_ptr<const Blocks>;

BlocksPtr blocks_from(const GaussData& g) {
  auto b = std::make_shared<Blocks>();
  b->alg = g.alg;
  b->mu = g.mu;
  b->K = g.K;
  b->D = g.D;
  b->Dp = g.Dp;
  b->E = g.E;
  b->F = g.F;
  return b;
}

/// Images of the Gauss blocks of g under phi, keeping g's block numbering.
BlocksPtr blocks_through(const GaussData& g, const Morphism& phi) {
  auto b = std::make_shared<Blocks>();
  b->alg = phi.target();
  b->mu = g.mu;
  b->K = g.K;
  for (const auto& x : g.D) b->D.push_back(phi.apply(x));
  for (const auto& x : g.Dp) b->Dp.push_back(phi.apply(x));
  for (const auto& [key, x] : g.E) b->E.emplace(key, phi.apply(x));
  for (const auto& [key, x] : g.F) b->F.emplace(key, phi.apply(x));
  return b;
}

/// The swap map carries the Gauss blocks of the reversed composition into Y(M|N).
BlocksPtr swapped_blocks(const Composition& mu, int K, GeneratorOrder order) {
  Composition rev = mu.reversed();
  Signature src = rev.signature();
  GaussData g = gauss_blocks(yangian(src, order), rev, K);
  Morphism zeta = make_morphism({MapKind::kZeta, src, 0, order}, K);
  return blocks_through(g, zeta);
}

// Series helpers.

MultiSeries sbr(const Yangian& A, const MultiSeries& x, const MultiSeries& y) { return series_supercomm(A, x, y); }
MultiSeries smul(const Yangian& A, const MultiSeries& x, const MultiSeries& y) { return series_mul(A, x, y); }
MultiSeries uv(const MultiSeries& x) { return series_times_difference(x, U, V); }

/// Records every coefficient of lhs - rhs in its known window, positive powers included.
void record_series(VerifyReport& rep, const std::string& id, const std::vector<int>& idx, const MultiSeries& lhs,
                   const MultiSeries& rhs) {
  MultiSeries diff = lhs - rhs;
  Exp lo{0, 0, 0}, hi{0, 0, 0};
  for (int x = 0; x < kNumVars; ++x) {
    if (!diff.is_active(static_cast<Var>(x))) continue;
    lo[x] = -1;
    hi[x] = diff.known(static_cast<Var>(x));
  }
  for (const auto& [e, c] : diff.coeffs())
    for (int x = 0; x < kNumVars; ++x) lo[x] = std::min(lo[x], e[x]);
  Exp e;
  for (e[0] = lo[0]; e[0] <= hi[0]; ++e[0])
    for (e[1] = lo[1]; e[1] <= hi[1]; ++e[1])
      for (e[2] = lo[2]; e[2] <= hi[2]; ++e[2]) {
        std::vector<int> ix = idx;
        for (int x = 0; x < kNumVars; ++x)
          if (diff.is_active(static_cast<Var>(x))) ix.push_back(e[x]);
        rep.record(id, std::move(ix), diff.coeff(e));
      }
}

std::vector<int> cat(std::vector<int> a, std::initializer_list<int> b) {
  a.insert(a.end(), b);
  return a;
}

// ---------------------------------------------------------------------------
// Binary relations. Each has a generating-series right side and a coefficient
// right side; `super` selects the graded signs, otherwise the non-super ones.

struct Signs {
  Rational first = 1, second = 1;
};

Signs de_signs(const Blocks& B, int b, bool super) {
  if (!super) return {1, -1};
  if (b == B.m()) return {1, 1};
  Rational s = sgn(B.pa(b));
  return {s, -s};
}

Signs df_signs(const Blocks& B, int b, bool super) {
  if (!super) return {-1, 1};
  if (b == B.m()) return {-1, -1};
  Rational s = sgn(B.pa(b));
  return {-s, s};
}

Rational ee_sign(const Blocks& B, int a, bool super) {
  if (!super) return 1;
  return a == B.m() ? Rational(-1) : sgn(B.pa(a));
}

Rational ff_sign(const Blocks& B, int a, bool super) {
  if (!super) return -1;
  return a == B.m() ? Rational(-1) : Rational(-sgn(B.pa(a)));
}

Rational ef_sign(const Blocks& B, int b, bool super) { return super ? sgn(B.pa(b + 1)) : Rational(1); }
Rational adj_sign(const Blocks& B, int a, bool super) { return super ? sgn(B.pa(a + 1)) : Rational(1); }

// (u-v)[D_a(u), E_b(v)]
MultiSeries de_series(const Blocks& B, int a, int b, int i, int j, int h, int k, bool super) {
  const Yangian& A = *B.alg;
  Signs s = de_signs(B, b, super);
  SeriesAccumulator acc;
  if (a == b && h == j)
    for (int p = 1; p <= B.sz(a); ++p)
      acc.add_product(A, B.Ds(a, i, p, U), B.Es(a, a + 1, p, k, V) - B.Es(a, a + 1, p, k, U), s.first);
  if (a == b + 1) acc.add_product(A, B.Ds(a, i, k, U), B.Es(b, b + 1, h, j, V) - B.Es(b, b + 1, h, j, U), s.second);
  return acc.build();
}

Element de_coef(const Blocks& B, int a, int b, int i, int j, int h, int k, int r, int s, bool super) {
  const Yangian& A = *B.alg;
  Signs sg = de_signs(B, b, super);
  ElementBuilder out;
  for (int t = 0; t < r; ++t) {
    if (a == b && h == j)
      for (int p = 1; p <= B.sz(a); ++p)
        A.multiply_into(out, B.d(a, i, p, t), B.e(a, a + 1, p, k, r + s - 1 - t), sg.first);
    if (a == b + 1) A.multiply_into(out, B.d(a, i, k, t), B.e(b, b + 1, h, j, r + s - 1 - t), sg.second);
  }
  return out.build();
}

// (u-v)[D_a(u), F_b(v)]
MultiSeries df_series(const Blocks& B, int a, int b, int i, int j, int h, int k, bool super) {
  const Yangian& A = *B.alg;
  Signs s = df_signs(B, b, super);
  SeriesAccumulator acc;
  if (a == b && k == i)
    for (int p = 1; p <= B.sz(a); ++p)
      acc.add_product(A, B.Fs(b + 1, b, h, p, V) - B.Fs(b + 1, b, h, p, U), B.Ds(a, p, j, U), s.first);
  if (a == b + 1) acc.add_product(A, B.Fs(b + 1, b, i, k, V) - B.Fs(b + 1, b, i, k, U), B.Ds(a, h, j, U), s.second);
  return acc.build();
}

Element df_coef(const Blocks& B, int a, int b, int i, int j, int h, int k, int r, int s, bool super) {
  const Yangian& A = *B.alg;
  Signs sg = df_signs(B, b, super);
  ElementBuilder out;
  for (int t = 0; t < r; ++t) {
    if (a == b && k == i)
      for (int p = 1; p <= B.sz(a); ++p)
        A.multiply_into(out, B.f(b + 1, b, h, p, r + s - 1 - t), B.d(a, p, j, t), sg.first);
    if (a == b + 1) A.multiply_into(out, B.f(b + 1, b, i, k, r + s - 1 - t), B.d(a, h, j, t), sg.second);
  }
  return out.build();
}

// (u-v)[E_a(u), E_a(v)]
MultiSeries ee_series(const Blocks& B, int a, int i, int j, int h, int k, bool super) {
  const Yangian& A = *B.alg;
  SeriesAccumulator acc;
  acc.add_product(A, B.Es(a, a + 1, i, k, U) - B.Es(a, a + 1, i, k, V),
                  B.Es(a, a + 1, h, j, U) - B.Es(a, a + 1, h, j, V), ee_sign(B, a, super));
  return acc.build();
}

Element ee_coef(const Blocks& B, int a, int i, int j, int h, int k, int r, int s, bool super) {
  const Yangian& A = *B.alg;
  Rational g = ee_sign(B, a, super);
  ElementBuilder out;
  for (int t = 1; t < s; ++t) A.multiply_into(out, B.e(a, a + 1, i, k, t), B.e(a, a + 1, h, j, r + s - 1 - t), g);
  for (int t = 1; t < r; ++t) A.multiply_into(out, B.e(a, a + 1, i, k, t), B.e(a, a + 1, h, j, r + s - 1 - t), -g);
  return out.build();
}

// (u-v)[F_a(u), F_a(v)]
MultiSeries ff_series(const Blocks& B, int a, int i, int j, int h, int k, bool super) {
  const Yangian& A = *B.alg;
  SeriesAccumulator acc;
  acc.add_product(A, B.Fs(a + 1, a, i, k, U) - B.Fs(a + 1, a, i, k, V),
                  B.Fs(a + 1, a, h, j, U) - B.Fs(a + 1, a, h, j, V), ff_sign(B, a, super));
  return acc.build();
}

Element ff_coef(const Blocks& B, int a, int i, int j, int h, int k, int r, int s, bool super) {
  const Yangian& A = *B.alg;
  Rational g = ff_sign(B, a, super);
  ElementBuilder out;
  for (int t = 1; t < s; ++t) A.multiply_into(out, B.f(a + 1, a, i, k, r + s - 1 - t), B.f(a + 1, a, h, j, t), g);
  for (int t = 1; t < r; ++t) A.multiply_into(out, B.f(a + 1, a, i, k, r + s - 1 - t), B.f(a + 1, a, h, j, t), -g);
  return out.build();
}

// (u-v)[E_a(u), F_b(v)]
MultiSeries ef_series(const Blocks& B, int a, int b, int i, int j, int h, int k, bool super) {
  const Yangian& A = *B.alg;
  SeriesAccumulator acc;
  if (a == b) {
    Rational s = ef_sign(B, b, super);
    acc.add_product(A, B.Dps(a, i, k, U), B.Ds(a + 1, h, j, U), s);
    acc.add_product(A, B.Ds(a + 1, h, j, V), B.Dps(a, i, k, V), -s);
  }
  return acc.build();
}

Element ef_coef(const Blocks& B, int a, int b, int i, int j, int h, int k, int r, int s, bool super) {
  if (a != b) return {};
  const Yangian& A = *B.alg;
  ElementBuilder out;
  for (int t = 0; t <= r + s - 1; ++t)
    A.multiply_into(out, B.d(a + 1, h, j, r + s - 1 - t), B.dp(a, i, k, t), -ef_sign(B, b, super));
  return out.build();
}

// (u-v)[E_a(u), E_{a+1}(v)]
MultiSeries ee1_series(const Blocks& B, int a, int i, int j, int h, int k, bool super) {
  const Yangian& A = *B.alg;
  SeriesAccumulator acc;
  if (h != j) return acc.build();
  Rational s = adj_sign(B, a, super);
  for (int q = 1; q <= B.sz(a + 1); ++q)
    acc.add_product(A, B.Es(a, a + 1, i, q, U) - B.Es(a, a + 1, i, q, V), B.Es(a + 1, a + 2, q, k, V), s);
  acc.add(B.Es(a, a + 2, i, k, V) - B.Es(a, a + 2, i, k, U), s);
  return acc.build();
}

// (u-v)[F_a(u), F_{a+1}(v)]
MultiSeries ff1_series(const Blocks& B, int a, int i, int j, int h, int k, bool super) {
  const Yangian& A = *B.alg;
  SeriesAccumulator acc;
  if (i != k) return acc.build();
  Rational s = adj_sign(B, a, super);
  for (int q = 1; q <= B.sz(a + 1); ++q)
    acc.add_product(A, B.Fs(a + 2, a + 1, h, q, V), B.Fs(a + 1, a, q, j, V) - B.Fs(a + 1, a, q, j, U), s);
  acc.add(B.Fs(a + 2, a, h, j, U) - B.Fs(a + 2, a, h, j, V), s);
  return acc.build();
}

/// Kernel agreement: (u-v) times the series with coefficients coef(r, s) must
/// reproduce the series right side wherever both are determined.
template <class Coef>
void record_kernel(VerifyReport& rep, const std::string& id, const std::vector<int>& idx, const MultiSeries& series,
                   int K, Coef&& coef) {
  auto c = [&](int r, int s) { return (r >= 1 && s >= 1) ? coef(r, s) : Element(); };
  for (int r = -1; r <= K + 1; ++r)
    for (int s = -1; r + s <= K; ++s) {
      if ((series.is_active(U) && r > series.known(U)) || (series.is_active(V) && s > series.known(V))) continue;
      Element lhs = c(r + 1, s) - c(r, s + 1);
      rep.record(id, cat(idx, {r, s}), lhs - series.coeff(Exp{r, s, 0}));
    }
}

/// Series forms of the binary relations over blocks 1..top. With `kernel`
/// the coefficient right sides are also matched against the series ones.
void add_series_relations(std::vector<Task>& tasks, const BlocksPtr& Bp, const std::string& prefix, int top,
                          bool super, bool kernel) {
  const Blocks& B = *Bp;
  const int K = B.K;

  for (int a = 1; a <= top; ++a)
    for (int b = 1; b + 1 <= top; ++b)
      for (int i = 1; i <= B.sz(a); ++i)
        for (int j = 1; j <= B.sz(a); ++j)
          for (int h = 1; h <= B.sz(b); ++h)
            for (int k = 1; k <= B.sz(b + 1); ++k) {
              tasks.push_back([=](VerifyReport& rep) {
                const Yangian& A = *Bp->alg;
                std::vector<int> idx{a, b, i, j, h, k};
                MultiSeries rhs = de_series(*Bp, a, b, i, j, h, k, super);
                record_series(rep, prefix + "DE", idx, uv(sbr(A, Bp->Ds(a, i, j, U), Bp->Es(b, b + 1, h, k, V))), rhs);
                if (kernel)
                  record_kernel(rep, "kernel.DE", idx, rhs, K,
                                [&](int r, int s) { return de_coef(*Bp, a, b, i, j, h, k, r, s, super); });
              });
              tasks.push_back([=](VerifyReport& rep) {
                const Yangian& A = *Bp->alg;
                // F_b has shape sz(b+1) x sz(b); reuse (k, h) as its entry pair.
                std::vector<int> idx{a, b, i, j, k, h};
                MultiSeries rhs = df_series(*Bp, a, b, i, j, k, h, super);
                record_series(rep, prefix + "DF", idx, uv(sbr(A, Bp->Ds(a, i, j, U), Bp->Fs(b + 1, b, k, h, V))), rhs);
                if (kernel)
                  record_kernel(rep, "kernel.DF", idx, rhs, K,
                                [&](int r, int s) { return df_coef(*Bp, a, b, i, j, k, h, r, s, super); });
              });
            }

  for (int a = 1; a + 1 <= top; ++a) {
    const int ea = B.sz(a), eb = B.sz(a + 1);
    for (int i = 1; i <= ea; ++i)
      for (int j = 1; j <= eb; ++j)
        for (int h = 1; h <= ea; ++h)
          for (int k = 1; k <= eb; ++k)
            tasks.push_back([=](VerifyReport& rep) {
              const Yangian& A = *Bp->alg;
              std::vector<int> idx{a, i, j, h, k};
              MultiSeries rhs = ee_series(*Bp, a, i, j, h, k, super);
              record_series(rep, prefix + "EE", idx,
                            uv(sbr(A, Bp->Es(a, a + 1, i, j, U), Bp->Es(a, a + 1, h, k, V))), rhs);
              if (kernel)
                record_kernel(rep, "kernel.EE", idx, rhs, K,
                              [&](int r, int s) { return ee_coef(*Bp, a, i, j, h, k, r, s, super); });
            });
    for (int i = 1; i <= eb; ++i)
      for (int j = 1; j <= ea; ++j)
        for (int h = 1; h <= eb; ++h)
          for (int k = 1; k <= ea; ++k)
            tasks.push_back([=](VerifyReport& rep) {
              const Yangian& A = *Bp->alg;
              std::vector<int> idx{a, i, j, h, k};
              MultiSeries rhs = ff_series(*Bp, a, i, j, h, k, super);
              record_series(rep, prefix + "FF", idx,
                            uv(sbr(A, Bp->Fs(a + 1, a, i, j, U), Bp->Fs(a + 1, a, h, k, V))), rhs);
              if (kernel)
                record_kernel(rep, "kernel.FF", idx, rhs, K,
                              [&](int r, int s) { return ff_coef(*Bp, a, i, j, h, k, r, s, super); });
            });
  }

  for (int a = 1; a + 1 <= top; ++a)
    for (int b = 1; b + 1 <= top; ++b)
      for (int i = 1; i <= B.sz(a); ++i)
        for (int j = 1; j <= B.sz(a + 1); ++j)
          for (int h = 1; h <= B.sz(b + 1); ++h)
            for (int k = 1; k <= B.sz(b); ++k)
              tasks.push_back([=](VerifyReport& rep) {
                const Yangian& A = *Bp->alg;
                std::vector<int> idx{a, b, i, j, h, k};
                MultiSeries rhs = ef_series(*Bp, a, b, i, j, h, k, super);
                record_series(rep, prefix + "EF", idx,
                              uv(sbr(A, Bp->Es(a, a + 1, i, j, U), Bp->Fs(b + 1, b, h, k, V))), rhs);
                if (kernel)
                  record_kernel(rep, "kernel.EF", idx, rhs, K,
                                [&](int r, int s) { return ef_coef(*Bp, a, b, i, j, h, k, r, s, super); });
              });

  for (int a = 1; a + 2 <= top; ++a) {
    for (int i = 1; i <= B.sz(a); ++i)
      for (int j = 1; j <= B.sz(a + 1); ++j)
        for (int h = 1; h <= B.sz(a + 1); ++h)
          for (int k = 1; k <= B.sz(a + 2); ++k)
            tasks.push_back([=](VerifyReport& rep) {
              const Yangian& A = *Bp->alg;
              record_series(rep, prefix + "EE+1", {a, i, j, h, k},
                            uv(sbr(A, Bp->Es(a, a + 1, i, j, U), Bp->Es(a + 1, a + 2, h, k, V))),
                            ee1_series(*Bp, a, i, j, h, k, super));
            });
    for (int i = 1; i <= B.sz(a + 1); ++i)
      for (int j = 1; j <= B.sz(a); ++j)
        for (int h = 1; h <= B.sz(a + 2); ++h)
          for (int k = 1; k <= B.sz(a + 1); ++k)
            tasks.push_back([=](VerifyReport& rep) {
              const Yangian& A = *Bp->alg;
              record_series(rep, prefix + "FF+1", {a, i, j, h, k},
                            uv(sbr(A, Bp->Fs(a + 1, a, i, j, U), Bp->Fs(a + 2, a + 1, h, k, V))),
                            ff1_series(*Bp, a, i, j, h, k, super));
            });
  }

  // Vanishing brackets between non-adjacent E (or F) blocks, and adjacent ones
  // whose shared entry indices differ.
  for (int a = 1; a + 1 <= top; ++a)
    for (int b = a + 1; b + 1 <= top; ++b)
      for (int i = 1; i <= B.sz(a); ++i)
        for (int j = 1; j <= B.sz(a + 1); ++j)
          for (int h = 1; h <= B.sz(b); ++h)
            for (int k = 1; k <= B.sz(b + 1); ++k) {
              if (b == a + 1 && h == j) continue;
              tasks.push_back([=](VerifyReport& rep) {
                const Yangian& A = *Bp->alg;
                record_series(rep, prefix + "EE.far", {a, b, i, j, h, k},
                              sbr(A, Bp->Es(a, a + 1, i, j, U), Bp->Es(b, b + 1, h, k, V)), MultiSeries());
              });
            }
  for (int a = 1; a + 1 <= top; ++a)
    for (int b = a + 1; b + 1 <= top; ++b)
      for (int i = 1; i <= B.sz(a + 1); ++i)
        for (int j = 1; j <= B.sz(a); ++j)
          for (int h = 1; h <= B.sz(b + 1); ++h)
            for (int k = 1; k <= B.sz(b); ++k) {
              if (b == a + 1 && i == k) continue;
              tasks.push_back([=](VerifyReport& rep) {
                const Yangian& A = *Bp->alg;
                record_series(rep, prefix + "FF.far", {a, b, i, j, h, k},
                              sbr(A, Bp->Fs(a + 1, a, i, j, U), Bp->Fs(b + 1, b, h, k, V)), MultiSeries());
              });
            }
}

// ---------------------------------------------------------------------------
// Cubic relations between an E (or F) block a and a neighbour b, in the four
// forms: two bivariate and two symmetrized trivariate ones.

void add_cubic_forms(std::vector<Task>& tasks, const BlocksPtr& Bp, const std::string& prefix, int a, int b) {
  const Blocks& B = *Bp;
  const int ar = B.sz(a), ac = B.sz(a + 1), br = B.sz(b), bc = B.sz(b + 1);
  auto Ea = [Bp, a](int i, int j, Var x) { return Bp->Es(a, a + 1, i, j, x); };
  auto Eb = [Bp, b](int i, int j, Var x) { return Bp->Es(b, b + 1, i, j, x); };
  auto Fa = [Bp, a](int i, int j, Var x) { return Bp->Fs(a + 1, a, i, j, x); };
  auto Fb = [Bp, b](int i, int j, Var x) { return Bp->Fs(b + 1, b, i, j, x); };

  // [[X_a(u), X_b(v)], X_b(v')] with v' = v or w, and [X_a(u'), [X_a(v'), X_b(w')]].
  auto add_family = [&](const std::string& name, auto xa, auto xb, int xar, int xac, int xbr, int xbc) {
    for (int i = 1; i <= xar; ++i)
      for (int j = 1; j <= xac; ++j)
        for (int h = 1; h <= xbr; ++h)
          for (int k = 1; k <= xbc; ++k)
            for (int f = 1; f <= xbr; ++f)
              for (int g = 1; g <= xbc; ++g)
                tasks.push_back([=](VerifyReport& rep) {
                  const Yangian& A = *Bp->alg;
                  std::vector<int> idx{a, b, i, j, h, k, f, g};
                  MultiSeries inner = sbr(A, xa(i, j, U), xb(h, k, V));
                  record_series(rep, prefix + name + ".a", idx, sbr(A, inner, xb(f, g, V)), MultiSeries());
                  MultiSeries c = sbr(A, inner, xb(f, g, W)) + sbr(A, sbr(A, xa(i, j, U), xb(h, k, W)), xb(f, g, V));
                  record_series(rep, prefix + name + ".c", idx, c, MultiSeries());
                });
    for (int i = 1; i <= xar; ++i)
      for (int j = 1; j <= xac; ++j)
        for (int h = 1; h <= xar; ++h)
          for (int k = 1; k <= xac; ++k)
            for (int f = 1; f <= xbr; ++f)
              for (int g = 1; g <= xbc; ++g)
                tasks.push_back([=](VerifyReport& rep) {
                  const Yangian& A = *Bp->alg;
                  std::vector<int> idx{a, b, i, j, h, k, f, g};
                  record_series(rep, prefix + name + ".b", idx,
                                sbr(A, xa(i, j, U), sbr(A, xa(h, k, U), xb(f, g, V))), MultiSeries());
                  MultiSeries d = sbr(A, xa(i, j, U), sbr(A, xa(h, k, V), xb(f, g, W))) +
                                  sbr(A, xa(i, j, V), sbr(A, xa(h, k, U), xb(f, g, W)));
                  record_series(rep, prefix + name + ".d", idx, d, MultiSeries());
                });
  };
  add_family("EEE", Ea, Eb, ar, ac, br, bc);
  add_family("FFF", Fa, Fb, ac, ar, bc, br);
}

// ---------------------------------------------------------------------------
// Coefficient relations.

void add_levi_relations(std::vector<Task>& tasks, const BlocksPtr& Bp, const std::string& prefix) {
  const Blocks& B = *Bp;
  const int K = B.K;
  for (int a = 1; a <= B.nb(); ++a) {
    tasks.push_back([=](VerifyReport& rep) {
      const Blocks& B = *Bp;
      const Yangian& A = *B.alg;
      for (int i = 1; i <= B.sz(a); ++i)
        for (int j = 1; j <= B.sz(a); ++j) {
          rep.record(prefix + "D0", {a, i, j}, B.d(a, i, j, 0) - Element(Rational(delta(i, j))));
          for (int r = 0; r <= K; ++r) {
            ElementBuilder sum;
            for (int t = 0; t <= r; ++t)
              for (int p = 1; p <= B.sz(a); ++p) A.multiply_into(sum, B.d(a, i, p, t), B.dp(a, p, j, r - t));
            rep.record(prefix + "DDp", {a, i, j, r}, sum.build() - Element(Rational(delta(r, 0) * delta(i, j))));
          }
        }
    });
    for (int b = 1; b <= B.nb(); ++b)
      tasks.push_back([=](VerifyReport& rep) {
        const Blocks& B = *Bp;
        const Yangian& A = *B.alg;
        for (int i = 1; i <= B.sz(a); ++i)
          for (int j = 1; j <= B.sz(a); ++j)
            for (int h = 1; h <= B.sz(b); ++h)
              for (int k = 1; k <= B.sz(b); ++k)
                for (int r = 1; r <= K; ++r)
                  for (int s = 1; s <= K; ++s) {
                    if (a == b && r + s - 1 > K) continue;
                    Element lhs = A.super_commutator(B.d(a, i, j, r), B.d(b, h, k, s));
                    ElementBuilder rhs;
                    // Odd blocks carry the sign of the odd-odd defining bracket.
                    const Rational sa = sgn(B.pa(a));
                    if (a == b)
                      for (int t = 0; t < std::min(r, s); ++t) {
                        A.multiply_into(rhs, B.d(a, h, j, t), B.d(a, i, k, r + s - 1 - t), sa);
                        A.multiply_into(rhs, B.d(a, h, j, r + s - 1 - t), B.d(a, i, k, t), -sa);
                      }
                    rep.record(prefix + "DD", {a, b, i, j, h, k, r, s}, lhs - rhs.build());
                  }
      });
  }
}

void add_coefficient_relations(std::vector<Task>& tasks, const BlocksPtr& Bp) {
  const Blocks& B = *Bp;
  const int K = B.K, nb = B.nb(), m = B.m();
  add_levi_relations(tasks, Bp, "");

  for (int a = 1; a <= nb; ++a)
    for (int b = 1; b < nb; ++b)
      tasks.push_back([=](VerifyReport& rep) {
        const Blocks& B = *Bp;
        const Yangian& A = *B.alg;
        for (int i = 1; i <= B.sz(a); ++i)
          for (int j = 1; j <= B.sz(a); ++j)
            for (int h = 1; h <= B.sz(b); ++h)
              for (int k = 1; k <= B.sz(b + 1); ++k)
                for (int r = 1; r <= K; ++r)
                  for (int s = 1; r + s - 1 <= K; ++s) {
                    rep.record("DE", {a, b, i, j, h, k, r, s},
                               A.super_commutator(B.d(a, i, j, r), B.e(b, b + 1, h, k, s)) -
                                   de_coef(B, a, b, i, j, h, k, r, s, true));
                    rep.record("DF", {a, b, i, j, k, h, r, s},
                               A.super_commutator(B.d(a, i, j, r), B.f(b + 1, b, k, h, s)) -
                                   df_coef(B, a, b, i, j, k, h, r, s, true));
                  }
      });

  for (int a = 1; a < nb; ++a) {
    tasks.push_back([=](VerifyReport& rep) {
      const Blocks& B = *Bp;
      const Yangian& A = *B.alg;
      const int ea = B.sz(a), eb = B.sz(a + 1);
      bool all_ones = std::all_of(B.mu.parts().begin(), B.mu.parts().end(), [](int p) { return p == 1; });
      for (int i = 1; i <= ea; ++i)
        for (int j = 1; j <= eb; ++j)
          for (int h = 1; h <= ea; ++h)
            for (int k = 1; k <= eb; ++k)
              for (int r = 1; r <= K; ++r)
                for (int s = 1; r + s - 1 <= K; ++s) {
                  Element lhs = A.super_commutator(B.e(a, a + 1, i, j, r), B.e(a, a + 1, h, k, s));
                  rep.record("EE", {a, i, j, h, k, r, s}, lhs - ee_coef(B, a, i, j, h, k, r, s, true));
                  if (all_ones && a == m) rep.record("EE.degenerate", {a, r, s}, lhs);
                }
      for (int i = 1; i <= eb; ++i)
        for (int j = 1; j <= ea; ++j)
          for (int h = 1; h <= eb; ++h)
            for (int k = 1; k <= ea; ++k)
              for (int r = 1; r <= K; ++r)
                for (int s = 1; r + s - 1 <= K; ++s) {
                  Element lhs = A.super_commutator(B.f(a + 1, a, i, j, r), B.f(a + 1, a, h, k, s));
                  rep.record("FF", {a, i, j, h, k, r, s}, lhs - ff_coef(B, a, i, j, h, k, r, s, true));
                  if (all_ones && a == m) rep.record("FF.degenerate", {a, r, s}, lhs);
                }
    });
    for (int b = 1; b < nb; ++b)
      tasks.push_back([=](VerifyReport& rep) {
        const Blocks& B = *Bp;
        const Yangian& A = *B.alg;
        for (int i = 1; i <= B.sz(a); ++i)
          for (int j = 1; j <= B.sz(a + 1); ++j)
            for (int h = 1; h <= B.sz(b + 1); ++h)
              for (int k = 1; k <= B.sz(b); ++k)
                for (int r = 1; r <= K; ++r)
                  for (int s = 1; r + s - 1 <= K; ++s)
                    rep.record("EF", {a, b, i, j, h, k, r, s},
                               A.super_commutator(B.e(a, a + 1, i, j, r), B.f(b + 1, b, h, k, s)) -
                                   ef_coef(B, a, b, i, j, h, k, r, s, true));
      });
  }

  for (int a = 1; a + 2 <= nb; ++a)
    tasks.push_back([=](VerifyReport& rep) {
      const Blocks& B = *Bp;
      const Yangian& A = *B.alg;
      Rational s1 = sgn(B.pa(a + 1));
      for (int i = 1; i <= B.sz(a); ++i)
        for (int j = 1; j <= B.sz(a + 1); ++j)
          for (int h = 1; h <= B.sz(a + 1); ++h)
            for (int k = 1; k <= B.sz(a + 2); ++k)
              for (int r = 1; r <= K; ++r)
                for (int s = 1; r + s <= K; ++s) {
                  Element lhs = A.super_commutator(B.e(a, a + 1, i, j, r + 1), B.e(a + 1, a + 2, h, k, s)) -
                                A.super_commutator(B.e(a, a + 1, i, j, r), B.e(a + 1, a + 2, h, k, s + 1));
                  ElementBuilder rhs;
                  if (h == j)
                    for (int q = 1; q <= B.sz(a + 1); ++q)
                      A.multiply_into(rhs, B.e(a, a + 1, i, q, r), B.e(a + 1, a + 2, q, k, s), s1);
                  rep.record("EE+1", {a, i, j, h, k, r, s}, lhs - rhs.build());
                }
      for (int i = 1; i <= B.sz(a + 1); ++i)
        for (int j = 1; j <= B.sz(a); ++j)
          for (int h = 1; h <= B.sz(a + 2); ++h)
            for (int k = 1; k <= B.sz(a + 1); ++k)
              for (int r = 1; r <= K; ++r)
                for (int s = 1; r + s <= K; ++s) {
                  Element lhs = A.super_commutator(B.f(a + 1, a, i, j, r + 1), B.f(a + 2, a + 1, h, k, s)) -
                                A.super_commutator(B.f(a + 1, a, i, j, r), B.f(a + 2, a + 1, h, k, s + 1));
                  ElementBuilder rhs;
                  if (i == k)
                    for (int q = 1; q <= B.sz(a + 1); ++q)
                      A.multiply_into(rhs, B.f(a + 2, a + 1, h, q, s), B.f(a + 1, a, q, j, r), -s1);
                  rep.record("FF+1", {a, i, j, h, k, r, s}, lhs - rhs.build());
                }
    });

  for (int a = 1; a < nb; ++a)
    for (int b = a + 1; b < nb; ++b)
      tasks.push_back([=](VerifyReport& rep) {
        const Blocks& B = *Bp;
        const Yangian& A = *B.alg;
        for (int i = 1; i <= B.sz(a); ++i)
          for (int j = 1; j <= B.sz(a + 1); ++j)
            for (int h = 1; h <= B.sz(b); ++h)
              for (int k = 1; k <= B.sz(b + 1); ++k) {
                if (b == a + 1 && h == j) continue;
                for (int r = 1; r <= K; ++r)
                  for (int s = 1; s <= K; ++s)
                    rep.record("EE.far", {a, b, i, j, h, k, r, s},
                               A.super_commutator(B.e(a, a + 1, i, j, r), B.e(b, b + 1, h, k, s)));
              }
        for (int i = 1; i <= B.sz(a + 1); ++i)
          for (int j = 1; j <= B.sz(a); ++j)
            for (int h = 1; h <= B.sz(b + 1); ++h)
              for (int k = 1; k <= B.sz(b); ++k) {
                if (b == a + 1 && i == k) continue;
                for (int r = 1; r <= K; ++r)
                  for (int s = 1; s <= K; ++s)
                    rep.record("FF.far", {a, b, i, j, h, k, r, s},
                               A.super_commutator(B.f(a + 1, a, i, j, r), B.f(b + 1, b, h, k, s)));
              }
      });

  // Symmetrized cubic relations, |a - b| >= 1.
  for (int a = 1; a < nb; ++a)
    for (int b = 1; b < nb; ++b) {
      if (a == b) continue;
      tasks.push_back([=](VerifyReport& rep) {
        const Blocks& B = *Bp;
        const Yangian& A = *B.alg;
        auto serre = [&](const std::string& id, auto x, int ar, int ac, auto y, int yr, int yc) {
          for (int i = 1; i <= ar; ++i)
            for (int j = 1; j <= ac; ++j)
              for (int h = 1; h <= ar; ++h)
                for (int k = 1; k <= ac; ++k)
                  for (int f = 1; f <= yr; ++f)
                    for (int g = 1; g <= yc; ++g)
                      for (int r = 1; r <= K; ++r)
                        for (int s = r; s <= K; ++s)
                          for (int l = 1; l <= K; ++l) {
                            Element lhs =
                                A.super_commutator(x(i, j, r), A.super_commutator(x(h, k, s), y(f, g, l))) +
                                A.super_commutator(x(i, j, s), A.super_commutator(x(h, k, r), y(f, g, l)));
                            rep.record(id, {a, b, i, j, h, k, f, g, r, s, l}, lhs);
                          }
        };
        serre(
            "EEE.serre", [&](int i, int j, int r) { return B.e(a, a + 1, i, j, r); }, B.sz(a), B.sz(a + 1),
            [&](int i, int j, int r) { return B.e(b, b + 1, i, j, r); }, B.sz(b), B.sz(b + 1));
        serre(
            "FFF.serre", [&](int i, int j, int r) { return B.f(a + 1, a, i, j, r); }, B.sz(a + 1), B.sz(a),
            [&](int i, int j, int r) { return B.f(b + 1, b, i, j, r); }, B.sz(b + 1), B.sz(b));
      });
    }
}

/// [[X_{m-1}^(r), X_m^(1)], [X_m^(1), X_{m+1}^(s)]] = 0 for X = E, F, orders
/// accepted by `keep`.
template <class Keep>
void add_quaternary(std::vector<Task>& tasks, const BlocksPtr& Bp, const std::string& prefix, Keep keep) {
  const Blocks& B = *Bp;
  const int m = B.m(), K = B.K;
  if (m < 2 || B.nb() - m < 2) return;
  tasks.push_back([=](VerifyReport& rep) {
    const Blocks& B = *Bp;
    const Yangian& A = *B.alg;
    auto quart = [&](const std::string& id, auto x, auto sz) {
      // x(c, i, j, r) is block c's generator; sz(c) gives its (rows, cols).
      auto [r1, c1] = sz(m - 1);
      auto [r2, c2] = sz(m);
      auto [r3, c3] = sz(m + 1);
      for (int i = 1; i <= r1; ++i)
        for (int j = 1; j <= c1; ++j)
          for (int h = 1; h <= r2; ++h)
            for (int k = 1; k <= c2; ++k)
              for (int h0 = 1; h0 <= r2; ++h0)
                for (int k0 = 1; k0 <= c2; ++k0)
                  for (int f = 1; f <= r3; ++f)
                    for (int g = 1; g <= c3; ++g)
                      for (int r = 1; r <= K; ++r)
                        for (int s = 1; s <= K; ++s) {
                          if (!keep(r, s)) continue;
                          Element lhs = A.super_commutator(A.super_commutator(x(m - 1, i, j, r), x(m, h, k, 1)),
                                                           A.super_commutator(x(m, h0, k0, 1), x(m + 1, f, g, s)));
                          rep.record(prefix + id, {i, j, h, k, h0, k0, f, g, r, s}, lhs);
                        }
    };
    quart(
        "EEEE", [&](int c, int i, int j, int r) { return B.e(c, c + 1, i, j, r); },
        [&](int c) { return std::pair{B.sz(c), B.sz(c + 1)}; });
    quart(
        "FFFF", [&](int c, int i, int j, int r) { return B.f(c + 1, c, i, j, r); },
        [&](int c) { return std::pair{B.sz(c + 1), B.sz(c)}; });
  });
}

// ---------------------------------------------------------------------------
// Two even blocks and one odd block.

void add_m2n1_relations(std::vector<Task>& tasks, const BlocksPtr& Bp, const std::string& prefix) {
  const Blocks& B = *Bp;
  const int m1 = B.sz(1), m2 = B.sz(2), m3 = B.sz(3);
  auto E1 = [Bp](int i, int j, Var x) { return Bp->Es(1, 2, i, j, x); };
  auto E2 = [Bp](int i, int j, Var x) { return Bp->Es(2, 3, i, j, x); };
  auto E13 = [Bp](int i, int j, Var x) { return Bp->Es(1, 3, i, j, x); };
  auto F1 = [Bp](int i, int j, Var x) { return Bp->Fs(2, 1, i, j, x); };
  auto F2 = [Bp](int i, int j, Var x) { return Bp->Fs(3, 2, i, j, x); };
  auto F31 = [Bp](int i, int j, Var x) { return Bp->Fs(3, 1, i, j, x); };

  // E_1 against F_2 and F_1 against E_2.
  for (int i = 1; i <= m1; ++i)
    for (int j = 1; j <= m2; ++j)
      for (int h = 1; h <= m3; ++h)
        for (int k = 1; k <= m2; ++k)
          tasks.push_back([=](VerifyReport& rep) {
            const Yangian& A = *Bp->alg;
            record_series(rep, prefix + "EF.cross", {i, j, h, k}, sbr(A, E1(i, j, U), F2(h, k, V)), MultiSeries());
            record_series(rep, prefix + "FE.cross", {j, i, k, h}, sbr(A, F1(j, i, U), E2(k, h, V)), MultiSeries());
          });

  // (u-v)[E_1(u), E_2(v)] and (u-v)[F_1(u), F_2(v)].
  for (int i = 1; i <= m1; ++i)
    for (int j = 1; j <= m2; ++j)
      for (int h = 1; h <= m2; ++h)
        for (int k = 1; k <= m3; ++k)
          tasks.push_back([=](VerifyReport& rep) {
            const Yangian& A = *Bp->alg;
            SeriesAccumulator acc;
            if (h == j) {
              for (int q = 1; q <= m2; ++q) acc.add_product(A, E1(i, q, U) - E1(i, q, V), E2(q, k, V));
              acc.add(E13(i, k, V) - E13(i, k, U));
            }
            record_series(rep, prefix + "EE.12", {i, j, h, k}, uv(sbr(A, E1(i, j, U), E2(h, k, V))), acc.build());
          });
  for (int i = 1; i <= m2; ++i)
    for (int j = 1; j <= m1; ++j)
      for (int h = 1; h <= m3; ++h)
        for (int k = 1; k <= m2; ++k)
          tasks.push_back([=](VerifyReport& rep) {
            const Yangian& A = *Bp->alg;
            SeriesAccumulator acc;
            if (i == k) {
              for (int q = 1; q <= m2; ++q) acc.add_product(A, F2(h, q, V), F1(q, j, V) - F1(q, j, U));
              acc.add(F31(h, j, U) - F31(h, j, V));
            }
            record_series(rep, prefix + "FF.12", {i, j, h, k}, uv(sbr(A, F1(i, j, U), F2(h, k, V))), acc.build());
          });

  // [E_13(u), E_2(v)] = E_2(v) [E_1(u), E_2(v)] for any middle index g.
  for (int i = 1; i <= m1; ++i)
    for (int j = 1; j <= m3; ++j)
      for (int h = 1; h <= m2; ++h)
        for (int k = 1; k <= m3; ++k)
          for (int g = 1; g <= m2; ++g)
            tasks.push_back([=](VerifyReport& rep) {
              const Yangian& A = *Bp->alg;
              record_series(rep, prefix + "E13.E2", {i, j, h, k, g}, sbr(A, E13(i, j, U), E2(h, k, V)),
                            smul(A, E2(h, j, V), sbr(A, E1(i, g, U), E2(g, k, V))));
            });
  // [E_1(u), E_13(v) - E_1(v)E_2(v)] = -[E_1(u), E_2(v)] E_1(u).
  for (int i = 1; i <= m1; ++i)
    for (int j = 1; j <= m2; ++j)
      for (int h = 1; h <= m1; ++h)
        for (int k = 1; k <= m3; ++k)
          for (int g = 1; g <= m2; ++g)
            tasks.push_back([=](VerifyReport& rep) {
              const Yangian& A = *Bp->alg;
              SeriesAccumulator acc;
              acc.add(E13(h, k, V));
              for (int q = 1; q <= m2; ++q) acc.add_product(A, E1(h, q, V), E2(q, k, V), -1);
              record_series(rep, prefix + "E1.E13", {i, j, h, k, g}, sbr(A, E1(i, j, U), acc.build()),
                            -smul(A, sbr(A, E1(i, g, U), E2(g, k, V)), E1(h, j, U)));
            });
  // [F_31(u), F_2(v)] = [F_2(v), F_1(u)] F_2(v).
  for (int i = 1; i <= m3; ++i)
    for (int j = 1; j <= m1; ++j)
      for (int h = 1; h <= m3; ++h)
        for (int k = 1; k <= m2; ++k)
          for (int g = 1; g <= m2; ++g)
            tasks.push_back([=](VerifyReport& rep) {
              const Yangian& A = *Bp->alg;
              record_series(rep, prefix + "F31.F2", {i, j, h, k, g}, sbr(A, F31(i, j, U), F2(h, k, V)),
                            smul(A, sbr(A, F2(h, g, V), F1(g, j, U)), F2(i, k, V)));
            });
  // [F_1(u), F_2(v)F_1(v) - F_31(v)] = F_1(u) [F_1(u), F_2(v)].
  for (int i = 1; i <= m2; ++i)
    for (int j = 1; j <= m1; ++j)
      for (int h = 1; h <= m3; ++h)
        for (int k = 1; k <= m1; ++k)
          for (int g = 1; g <= m2; ++g)
            tasks.push_back([=](VerifyReport& rep) {
              const Yangian& A = *Bp->alg;
              SeriesAccumulator acc;
              acc.add(F31(h, k, V), -1);
              for (int q = 1; q <= m2; ++q) acc.add_product(A, F2(h, q, V), F1(q, k, V));
              record_series(rep, prefix + "F1.F31", {i, j, h, k, g}, sbr(A, F1(i, j, U), acc.build()),
                            smul(A, F1(i, k, U), sbr(A, F1(g, j, U), F2(h, g, V))));
            });

  add_cubic_forms(tasks, Bp, prefix, 1, 2);
}

// ---------------------------------------------------------------------------
// One even and one odd block.

void add_mn11_relations(std::vector<Task>& tasks, const BlocksPtr& Bp) {
  const Blocks& B = *Bp;
  const int M = B.sz(1), N = B.sz(2);
  auto E = [Bp](int i, int j, Var x) { return Bp->Es(1, 2, i, j, x); };
  auto F = [Bp](int i, int j, Var x) { return Bp->Fs(2, 1, i, j, x); };

  for (int a = 1; a <= 2; ++a)
    for (int i = 1; i <= B.sz(a); ++i)
      for (int j = 1; j <= B.sz(a); ++j) {
        for (int h = 1; h <= M; ++h)
          for (int k = 1; k <= N; ++k)
            tasks.push_back([=](VerifyReport& rep) {
              const Yangian& A = *Bp->alg;
              SeriesAccumulator acc;
              if (a == 1 && h == j)
                for (int p = 1; p <= M; ++p) acc.add_product(A, Bp->Ds(1, i, p, U), E(p, k, V) - E(p, k, U));
              if (a == 2) acc.add_product(A, Bp->Ds(2, i, k, U), E(h, j, V) - E(h, j, U));
              record_series(rep, "mn11.DE", {a, i, j, h, k}, uv(sbr(A, Bp->Ds(a, i, j, U), E(h, k, V))),
                            acc.build());
            });
        for (int h = 1; h <= N; ++h)
          for (int k = 1; k <= M; ++k)
            tasks.push_back([=](VerifyReport& rep) {
              const Yangian& A = *Bp->alg;
              SeriesAccumulator acc;
              if (a == 1 && k == i)
                for (int p = 1; p <= M; ++p) acc.add_product(A, F(h, p, U) - F(h, p, V), Bp->Ds(1, p, j, U));
              if (a == 2) acc.add_product(A, F(i, k, U) - F(i, k, V), Bp->Ds(2, h, j, U));
              record_series(rep, "mn11.DF", {a, i, j, h, k}, uv(sbr(A, Bp->Ds(a, i, j, U), F(h, k, V))),
                            acc.build());
            });
      }

  for (int i = 1; i <= M; ++i)
    for (int j = 1; j <= N; ++j)
      for (int h = 1; h <= N; ++h)
        for (int k = 1; k <= M; ++k)
          tasks.push_back([=](VerifyReport& rep) {
            const Yangian& A = *Bp->alg;
            SeriesAccumulator acc;
            acc.add_product(A, Bp->Dps(1, i, k, V), Bp->Ds(2, h, j, V));
            acc.add_product(A, Bp->Ds(2, h, j, U), Bp->Dps(1, i, k, U), -1);
            record_series(rep, "mn11.EF", {i, j, h, k}, uv(sbr(A, E(i, j, U), F(h, k, V))), acc.build());
          });

  for (int i = 1; i <= M; ++i)
    for (int j = 1; j <= N; ++j)
      for (int h = 1; h <= M; ++h)
        for (int k = 1; k <= N; ++k)
          tasks.push_back([=](VerifyReport& rep) {
            const Yangian& A = *Bp->alg;
            record_series(rep, "mn11.EE", {i, j, h, k}, uv(sbr(A, E(i, j, U), E(h, k, V))),
                          smul(A, E(i, k, U) - E(i, k, V), E(h, j, V) - E(h, j, U)));
          });
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= M; ++j)
      for (int h = 1; h <= N; ++h)
        for (int k = 1; k <= M; ++k)
          tasks.push_back([=](VerifyReport& rep) {
            const Yangian& A = *Bp->alg;
            record_series(rep, "mn11.FF", {i, j, h, k}, uv(sbr(A, F(i, j, U), F(h, k, V))),
                          smul(A, F(i, k, U) - F(i, k, V), F(h, j, V) - F(h, j, U)));
          });
}

BlocksPtr gauss_for(const Composition& mu, int K, const VerifyOptions& opts) {
  return blocks_from(gauss_blocks(yangian(mu.signature(), opts.order), mu, K));
}

bool shape_mn11(const Composition& mu) { return mu.m() == 1 && mu.n() == 1; }
bool shape_m2n1(const Composition& mu) {
  return (mu.m() == 2 && mu.n() == 1) || (mu.m() == 1 && mu.n() == 2);
}
bool shape_quaternary(const Composition& mu) { return mu.m() > 1 && mu.n() > 1; }

}  // namespace

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::kLevi: return "levi";
    case Suite::kEven: return "even";
    case Suite::kMn11: return "mn11";
    case Suite::kM2n1: return "m2n1";
    case Suite::kPresentation: return "thm73";
    case Suite::kQuaternary: return "lemma72";
    case Suite::kAll: return "all";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::kLevi, Suite::kEven, Suite::kMn11, Suite::kM2n1, Suite::kPresentation, Suite::kQuaternary, Suite::kAll})
    if (suite_name(s) == name) return s;
  throw ParseError("unknown suite '" + name + "'");
}

int default_workers() {
  const char* env = std::getenv("SYK_WORKERS");
  if (!env) return 1;
  char* end = nullptr;
  long n = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || n < 1) return 1;
  return static_cast<int>(std::min<long>(n, 256));
}

VerifyReport verify_levi(const Composition& mu, int K, const VerifyOptions& opts) {
  std::vector<Task> tasks;
  add_levi_relations(tasks, gauss_for(mu, K, opts), "levi.");
  return run_tasks(tasks, resolve_workers(opts));
}

VerifyReport verify_block_even(const Composition& mu, int K, const VerifyOptions& opts) {
  std::vector<Task> tasks;
  auto add = [&](const BlocksPtr& B, const std::string& prefix) {
    const int top = B->m();
    add_series_relations(tasks, B, prefix, top, false, false);
    for (int a = 1; a + 1 <= top; ++a)
      for (int b = 1; b + 1 <= top; ++b)
        if (a != b) add_cubic_forms(tasks, B, prefix, a, b);
  };
  if (mu.m() >= 2) add(gauss_for(mu, K, opts), "even.");
  if (mu.n() >= 2) add(swapped_blocks(mu, K, opts.order), "even.odd.");
  return run_tasks(tasks, resolve_workers(opts));
}

VerifyReport verify_mn11(const Composition& mu, int K, const VerifyOptions& opts) {
  if (!shape_mn11(mu)) throw WrongShape("mn11 needs one even and one odd block, got " + mu.str());
  std::vector<Task> tasks;
  add_mn11_relations(tasks, gauss_for(mu, K, opts));
  return run_tasks(tasks, resolve_workers(opts));
}

VerifyReport verify_m2n1(const Composition& mu, int K, const VerifyOptions& opts) {
  if (!shape_m2n1(mu)) throw WrongShape("m2n1 needs blocks (2|1) or (1|2), got " + mu.str());
  std::vector<Task> tasks;
  if (mu.m() == 2)
    add_m2n1_relations(tasks, gauss_for(mu, K, opts), "m2n1.");
  else
    add_m2n1_relations(tasks, swapped_blocks(mu, K, opts.order), "m2n1.swap.");
  return run_tasks(tasks, resolve_workers(opts));
}

VerifyReport verify_presentation(const Composition& mu, int K, const VerifyOptions& opts) {
  BlocksPtr B = gauss_for(mu, K, opts);
  std::vector<Task> tasks;
  add_coefficient_relations(tasks, B);
  add_quaternary(tasks, B, "", [](int, int) { return true; });
  add_series_relations(tasks, B, "series.", B->nb(), true, true);
  return run_tasks(tasks, resolve_workers(opts));
}

VerifyReport verify_quaternary(const Composition& mu, int K, const VerifyOptions& opts) {
  if (!shape_quaternary(mu)) throw WrongShape("lemma72 needs m > 1 and n > 1, got " + mu.str());
  BlocksPtr Bp = gauss_for(mu, K, opts);
  std::vector<Task> tasks;
  add_quaternary(tasks, Bp, "quaternary.", [K](int r, int s) { return r + s <= K; });
  if (mu.m() == 2 && mu.n() == 2) {
    const Blocks& B = *Bp;
    for (int i = 1; i <= B.sz(1); ++i)
      for (int j = 1; j <= B.sz(3); ++j)
        for (int h = 1; h <= B.sz(2); ++h)
          for (int k = 1; k <= B.sz(4); ++k)
            tasks.push_back([=](VerifyReport& rep) {
              const Yangian& A = *Bp->alg;
              SeriesAccumulator acc;
              for (int q = 1; q <= Bp->sz(3); ++q) acc.add_product(A, Bp->Es(2, 3, h, q, V), Bp->Es(3, 4, q, k, V));
              acc.add(Bp->Es(2, 4, h, k, V), -1);
              record_series(rep, "quaternary.E13.E24", {i, j, h, k}, sbr(A, Bp->Es(1, 3, i, j, U), acc.build()),
                            MultiSeries());
            });
  }
  return run_tasks(tasks, resolve_workers(opts));
}

VerifyReport verify_suite(Suite s, const Composition& mu, int K, const VerifyOptions& opts) {
  switch (s) {
    case Suite::kLevi: return verify_levi(mu, K, opts);
    case Suite::kEven: return verify_block_even(mu, K, opts);
    case Suite::kMn11: return verify_mn11(mu, K, opts);
    case Suite::kM2n1: return verify_m2n1(mu, K, opts);
    case Suite::kPresentation: return verify_presentation(mu, K, opts);
    case Suite::kQuaternary: return verify_quaternary(mu, K, opts);
    case Suite::kAll: {
      VerifyReport rep = verify_levi(mu, K, opts);
      rep.merge(verify_block_even(mu, K, opts));
      if (shape_mn11(mu)) rep.merge(verify_mn11(mu, K, opts));
      if (shape_m2n1(mu)) rep.merge(verify_m2n1(mu, K, opts));
      rep.merge(verify_presentation(mu, K, opts));
      if (shape_quaternary(mu)) rep.merge(verify_quaternary(mu, K, opts));
      return rep;
    }
  }
  throw Error("unknown suite");
}

}  // namespace syk
