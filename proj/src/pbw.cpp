#include "syk/pbw.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include <gmpxx.h>

#include "syk/errors.hpp"

namespace syk {

LoopAlgebra::LoopAlgebra(Signature sig) : sig_(sig) {
  if (sig.M < 0 || sig.N < 0 || sig.size() < 1 || sig.size() > 255) {
    throw DimensionMismatch("invalid signature " + sig.str());
  }
}

Element LoopAlgebra::e(int i, int j, int s) const {
  if (i < 1 || j < 1 || i > sig_.size() || j > sig_.size() || s < 0) {
    throw IndexOutOfRange("loop generator (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(s) + ") outside " + sig_.str());
  }
  return Element::from_word({Generator{i, j, s}.pack()});
}

int LoopAlgebra::letter_parity(Letter x) const {
  auto g = Generator::unpack(x);
  return sig_.index_parity(g.i) ^ sig_.index_parity(g.j);
}

// Packing puts the power of t in the high bits, so (s, i, j)-lex is integer order.
bool LoopAlgebra::letter_less(Letter x, Letter y) const { return x < y; }

int LoopAlgebra::letter_weight(Letter x) const { return Generator::unpack(x).r + 1; }

Element LoopAlgebra::letter_bracket(Letter x, Letter y) const {
  auto a = Generator::unpack(x);
  auto b = Generator::unpack(y);
  const int s = a.r + b.r;
  ElementBuilder out;
  if (b.i == a.j) out.add(Word{Generator{a.i, b.j, s}.pack()}, 1);
  if (a.i == b.j) out.add(Word{Generator{b.i, a.j, s}.pack()}, (letter_parity(x) & letter_parity(y)) ? 1 : -1);
  return out.build();
}

std::string LoopAlgebra::letter_name(Letter x) const {
  auto g = Generator::unpack(x);
  return "E" + std::to_string(g.i) + std::to_string(g.j) + "t^" + std::to_string(g.r);
}

std::shared_ptr<const LoopAlgebra> loop_algebra(Signature sig) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const LoopAlgebra>> instances;
  std::lock_guard lock(mutex);
  auto& slot = instances[{sig.M, sig.N}];
  if (!slot) slot = std::make_shared<const LoopAlgebra>(sig);
  return slot;
}

Element gr_image(const Yangian& y, const LoopAlgebra& loop, const Element& x, int k) {
  if (Yangian::loop_degree(x) > k) {
    throw DegreeExceeded("element has loop degree " + std::to_string(Yangian::loop_degree(x)) + " > " +
                         std::to_string(k));
  }
  const Signature& sig = y.signature();
  ElementBuilder out;
  for (const auto& term : x.terms()) {
    if (Yangian::loop_degree(term.word) != k) continue;
    Word w;
    w.reserve(term.word.size());
    Rational c = term.coeff;
    for (Letter l : term.word) {
      auto g = Generator::unpack(l);
      if (sig.index_parity(g.i)) c = -c;
      w.push_back(Generator{g.i, g.j, g.r - 1}.pack());
    }
    out.add(w, c);
  }
  return loop.normal_form(out.build());
}

namespace {

Rational sgn(int parity) { return parity ? Rational(-1) : Rational(1); }

// Start of block a in the global index range, 0-based.
int start(const Composition& mu, int a) { return mu.offset(a) - mu.size(a); }

}  // namespace

VerifyReport gr_block_check(const Composition& mu, int k_max) {
  const Signature sig = mu.signature();
  auto y = yangian(sig);
  auto loop = loop_algebra(sig);
  const int K = k_max + 1;
  GaussData g = gauss_blocks(y, mu, K);
  VerifyReport rep;

  auto image = [&](int row, int col, int r) { return sgn(sig.index_parity(row)) * loop->e(row, col, r - 1); };

  for (int a = 1; a <= mu.blocks(); ++a)
    for (int i = 1; i <= mu.size(a); ++i)
      for (int j = 1; j <= mu.size(a); ++j)
        for (int r = 1; r <= K; ++r) {
          const int n = start(mu, a);
          rep.record("gr.parabolic.D", {a, i, j, r},
                     gr_image(*y, *loop, g.d(a, i, j, r), r - 1) - image(n + i, n + j, r));
        }

  std::map<std::tuple<int, int, int, int, int>, Element> ebar;
  for (const auto& [key, _] : g.E) {
    auto [a, b] = key;
    for (int i = 1; i <= mu.size(a); ++i)
      for (int j = 1; j <= mu.size(b); ++j)
        for (int r = 1; r <= K; ++r) {
          Element gr = gr_image(*y, *loop, g.e(a, b, i, j, r), r - 1);
          rep.record("gr.parabolic.E", {a, b, i, j, r}, gr - image(start(mu, a) + i, start(mu, b) + j, r));
          ebar[{a, b, i, j, r}] = std::move(gr);
          Element grf = gr_image(*y, *loop, g.f(b, a, j, i, r), r - 1);
          rep.record("gr.parabolic.F", {b, a, j, i, r}, grf - image(start(mu, b) + j, start(mu, a) + i, r));
        }
  }

  for (const auto& [k1, x] : ebar) {
    auto [a, b, i, j, r] = k1;
    for (const auto& [k2, z] : ebar) {
      auto [c, d, h, k, s] = k2;
      if (r + s - 2 > k_max) continue;
      Element rhs;
      if (b == c && h == j) rhs += sgn(mu.block_parity(b)) * ebar.at({a, d, i, k, r + s - 1});
      if (a == d && i == k) {
        const int pa = mu.block_parity(a), pb = mu.block_parity(b), pc = mu.block_parity(c);
        rhs -= sgn(pa * pb + pa * pc + pb * pc) * ebar.at({c, b, h, j, r + s - 1});
      }
      rep.record("gr.E-bracket", {a, b, i, j, r, c, d, h, k, s}, loop->super_commutator(x, z) - rhs);
    }
  }
  return rep;
}

VerifyReport gr_bracket_check(Signature sig, int k_max) {
  auto y = yangian(sig);
  auto loop = loop_algebra(sig);
  const int n = sig.size();
  VerifyReport rep;
  std::vector<Generator> gens;
  for (int r = 1; r <= k_max + 1; ++r)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) gens.push_back({i, j, r});
  for (const auto& x : gens)
    for (const auto& z : gens) {
      if (x.r + z.r - 2 > k_max) continue;
      Element tx = y->t(x.i, x.j, x.r), tz = y->t(z.i, z.j, z.r);
      Element lhs = gr_image(*y, *loop, y->super_commutator(tx, tz), x.r + z.r - 2);
      Element rhs = loop->super_commutator(gr_image(*y, *loop, tx, x.r - 1), gr_image(*y, *loop, tz, z.r - 1));
      rep.record("gr.bracket", {x.i, x.j, x.r, z.i, z.j, z.r}, lhs - rhs);
    }
  for (const auto& mu : all_compositions(sig)) rep.merge(gr_block_check(mu, k_max));
  return rep;
}

std::string family_name(PbwFamily f) {
  switch (f) {
    case PbwFamily::kFull: return "full";
    case PbwFamily::kD: return "D-only";
    case PbwFamily::kE: return "E-only";
    case PbwFamily::kF: return "F-only";
    case PbwFamily::kT: return "t-gens";
  }
  return "full";
}

PbwFamily parse_family(const std::string& name) {
  for (auto f : {PbwFamily::kFull, PbwFamily::kD, PbwFamily::kE, PbwFamily::kF, PbwFamily::kT})
    if (family_name(f) == name) return f;
  throw ParseError("unknown PBW family '" + name + "'");
}

std::string PbwSymbol::str() const {
  auto idx = [](int x, int y) { return std::to_string(x) + "," + std::to_string(y); };
  const std::string order = "^(" + std::to_string(r) + ")";
  if (kind == 't') return "t" + idx(i, j) + order;
  if (kind == 'D') return "D" + std::to_string(a) + ";" + idx(i, j) + order;
  return std::string(1, kind) + idx(a, b) + ";" + idx(i, j) + order;
}

std::vector<PbwSymbol> pbw_symbols(const Composition& mu, int max_r, PbwFamily family) {
  std::vector<PbwSymbol> out;
  const int B = mu.blocks();
  auto add_block = [&](char kind, int a, int b, int rows, int cols) {
    for (int i = 1; i <= rows; ++i)
      for (int j = 1; j <= cols; ++j)
        for (int r = 1; r <= max_r; ++r) out.push_back({kind, a, b, i, j, r});
  };
  const bool full = family == PbwFamily::kFull;
  if (full || family == PbwFamily::kF)
    for (int b = 2; b <= B; ++b)
      for (int a = 1; a < b; ++a) add_block('F', b, a, mu.size(b), mu.size(a));
  if (full || family == PbwFamily::kD)
    for (int a = 1; a <= B; ++a) add_block('D', a, a, mu.size(a), mu.size(a));
  if (full || family == PbwFamily::kE)
    for (int a = 1; a < B; ++a)
      for (int b = a + 1; b <= B; ++b) add_block('E', a, b, mu.size(a), mu.size(b));
  if (family == PbwFamily::kT) {
    const int n = mu.signature().size();
    for (int r = 1; r <= max_r; ++r)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.push_back({'t', 0, 0, i, j, r});
  }
  return out;
}

namespace {

int symbol_parity(const Composition& mu, const PbwSymbol& s) {
  if (s.kind == 't') {
    const Signature sig = mu.signature();
    return sig.index_parity(s.i) ^ sig.index_parity(s.j);
  }
  return mu.block_parity(s.a) ^ mu.block_parity(s.b);
}

// Depth-first over non-decreasing index sequences; emits every nonempty word
// accepted by `fits` (which must be monotone under extension).
std::vector<PbwMonomial> enumerate_words(const Composition& mu, const std::vector<PbwSymbol>& symbols,
                                         const std::function<bool(int len, int deg, int total)>& fits) {
  std::vector<int> parity;
  for (const auto& s : symbols) parity.push_back(symbol_parity(mu, s));
  std::vector<PbwMonomial> out;
  PbwMonomial word;
  std::function<void(std::size_t, int, int)> grow = [&](std::size_t from, int deg, int total) {
    for (std::size_t k = from; k < symbols.size(); ++k) {
      const auto& s = symbols[k];
      const int len = static_cast<int>(word.size()) + 1;
      if (!fits(len, deg + s.r - 1, total + s.r)) continue;
      word.push_back(s);
      out.push_back(word);
      grow(parity[k] ? k + 1 : k, deg + s.r - 1, total + s.r);
      word.pop_back();
    }
  };
  grow(0, 0, 0);
  return out;
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& body) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min<std::size_t>(workers, n); ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Element> expand_all(const std::vector<PbwMonomial>& monomials, const GaussData& g, int workers) {
  std::vector<Element> rows(monomials.size());
  parallel_for(monomials.size(), workers, [&](std::size_t i) { rows[i] = expand(monomials[i], g); });
  return rows;
}

using SparseRow = std::map<std::size_t, mpz_class>;

// Incremental fraction-free row echelon form over Z, rows kept primitive.
class Echelon {
 public:
  /// Reduces v against the stored rows; true if the remainder is nonzero.
  bool reduce(SparseRow& v) const {
    while (!v.empty()) {
      auto it = pivots_.find(v.begin()->first);
      if (it == pivots_.end()) return true;
      const SparseRow& p = it->second;
      const mpz_class a = p.begin()->second;
      const mpz_class b = v.begin()->second;
      for (auto& [c, x] : v) x *= a;
      for (const auto& [c, x] : p) {
        mpz_class& slot = v[c];
        slot -= b * x;
      }
      std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
      make_primitive(v);
    }
    return false;
  }
  bool insert(SparseRow v) {
    if (!reduce(v)) return false;
    const std::size_t c = v.begin()->first;
    pivots_.emplace(c, std::move(v));
    return true;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  static void make_primitive(SparseRow& v) {
    if (v.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, x] : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g != 1)
      for (auto& [c, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }

  std::map<std::size_t, SparseRow> pivots_;
};

class ColumnIndex {
 public:
  SparseRow row(const Element& x) {
    mpz_class den = 1;
    for (const auto& t : x.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    SparseRow out;
    for (const auto& t : x.terms()) {
      auto [it, _] = columns_.try_emplace(t.word, columns_.size());
      mpq_class scaled = t.coeff * den;
      out[it->second] = scaled.get_num();
    }
    return out;
  }

 private:
  std::map<Word, std::size_t> columns_;
};

}  // namespace

std::vector<PbwMonomial> enumerate_pbw(const Composition& mu, int k, int L, PbwFamily family) {
  if (k < 0 || L < 1) return {};
  return enumerate_words(mu, pbw_symbols(mu, k + 1, family),
                         [&](int len, int deg, int) { return len <= L && deg <= k; });
}

std::vector<PbwMonomial> enumerate_pbw_by_order(const Composition& mu, int n, PbwFamily family) {
  if (n < 1) return {};
  return enumerate_words(mu, pbw_symbols(mu, n, family), [&](int, int, int total) { return total <= n; });
}

Element expand(const PbwMonomial& m, const GaussData& g) {
  const Yangian& y = *g.alg;
  Element out(Rational(1));
  for (const auto& s : m) {
    if (s.r > g.K) {
      throw DegreeExceeded("symbol " + s.str() + " needs truncation order " + std::to_string(s.r) + " > " +
                           std::to_string(g.K));
    }
    Element x;
    switch (s.kind) {
      case 'D': x = g.d(s.a, s.i, s.j, s.r); break;
      case 'E': x = g.e(s.a, s.b, s.i, s.j, s.r); break;
      case 'F': x = g.f(s.a, s.b, s.i, s.j, s.r); break;
      default: x = y.t(s.i, s.j, s.r); break;
    }
    out = y.multiply(out, x);
  }
  return out;
}

std::size_t exact_rank(const std::vector<Element>& rows) {
  ColumnIndex cols;
  Echelon ech;
  for (const auto& x : rows) ech.insert(cols.row(x));
  return ech.rank();
}

RankReport independence_check(const std::vector<PbwMonomial>& monomials, const Composition& mu, int K,
                              int workers) {
  GaussData g = gauss_blocks(yangian(mu.signature()), mu, K);
  return {monomials.size(), exact_rank(expand_all(monomials, g, workers))};
}

SpanReport spanning_check(const Composition& mu, int k, int L, int K, int workers) {
  if (K < k + L) {
    throw DegreeExceeded("spanning window needs K >= " + std::to_string(k + L) + ", got " + std::to_string(K));
  }
  GaussData g = gauss_blocks(yangian(mu.signature()), mu, K);
  std::vector<PbwMonomial> basis = enumerate_pbw_by_order(mu, k + L, PbwFamily::kFull);
  std::vector<PbwMonomial> targets = enumerate_pbw(mu, k, L, PbwFamily::kT);

  ColumnIndex cols;
  Echelon ech;
  for (const auto& x : expand_all(basis, g, workers)) ech.insert(cols.row(x));
  SpanReport rep{targets.size(), 0, basis.size()};
  for (const auto& x : expand_all(targets, g, workers)) {
    SparseRow v = cols.row(x);
    if (ech.reduce(v)) ++rep.failures;
  }
  return rep;
}

}  // namespace syk
