#include "syk/yangian.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "syk/errors.hpp"

namespace syk {

std::string Signature::str() const { return "(" + std::to_string(M) + "|" + std::to_string(N) + ")"; }

Yangian::Yangian(Signature sig, GeneratorOrder order) : sig_(sig), order_(order) {
  if (sig.M < 0 || sig.N < 0 || sig.size() < 1 || sig.size() > 255) {
    throw DimensionMismatch("invalid signature " + sig.str());
  }
}

int Yangian::parity_of(int i, int j) const {
  if (i < 1 || j < 1 || i > sig_.size() || j > sig_.size()) {
    throw IndexOutOfRange("generator index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside " + sig_.str());
  }
  return sig_.index_parity(i) ^ sig_.index_parity(j);
}

Element Yangian::t(int i, int j, int r) const {
  parity_of(i, j);
  if (r < 0) throw IndexOutOfRange("negative order");
  if (r == 0) return Element(Rational(i == j ? 1 : 0));
  return Element::from_word({Generator{i, j, r}.pack()});
}

int Yangian::letter_parity(Letter x) const {
  auto g = Generator::unpack(x);
  return sig_.index_parity(g.i) ^ sig_.index_parity(g.j);
}

bool Yangian::letter_less(Letter x, Letter y) const {
  if (order_ == GeneratorOrder::kRIJ) return x < y;
  auto a = Generator::unpack(x);
  auto b = Generator::unpack(y);
  return std::tie(a.i, a.j, a.r) < std::tie(b.i, b.j, b.r);
}

int Yangian::letter_weight(Letter x) const { return Generator::unpack(x).r; }

std::string Yangian::letter_name(Letter x) const {
  auto g = Generator::unpack(x);
  return "t" + std::to_string(g.i) + std::to_string(g.j) + "^(" + std::to_string(g.r) + ")";
}

Element Yangian::raw_bracket(const Generator& x, const Generator& y) const {
  const int i = x.i, j = x.j, h = y.i, k = y.j;
  const int r = x.r, s = y.r;
  const int pi = sig_.index_parity(i), pj = sig_.index_parity(j), ph = sig_.index_parity(h);
  const Rational sign = ((pi * pj + pi * ph + pj * ph) & 1) ? -1 : 1;

  // Product t_ab^(p) t_cd^(q) with t^(0) = delta; p + q >= 1 here.
  auto product = [](int a, int b, int p, int c, int d, int q) -> std::pair<Word, bool> {
    if (p == 0) return {{Generator{c, d, q}.pack()}, a == b};
    if (q == 0) return {{Generator{a, b, p}.pack()}, c == d};
    return {{Generator{a, b, p}.pack(), Generator{c, d, q}.pack()}, true};
  };

  ElementBuilder out;
  for (int t = 0; t < std::min(r, s); ++t) {
    const int hi = r + s - 1 - t;
    if (auto [w, live] = product(h, j, t, i, k, hi); live) out.add(w, sign);
    if (auto [w, live] = product(h, j, hi, i, k, t); live) out.add(w, -sign);
  }
  return out.build();
}

Element Yangian::letter_bracket(Letter x, Letter y) const {
  return raw_bracket(Generator::unpack(x), Generator::unpack(y));
}

Element Yangian::defining_bracket(const Generator& x, const Generator& y) const {
  parity_of(x.i, x.j);
  parity_of(y.i, y.j);
  return normal_form(raw_bracket(x, y));
}

int Yangian::loop_degree(const Word& w) {
  int d = 0;
  for (Letter l : w) d += Generator::unpack(l).r - 1;
  return d;
}

int Yangian::loop_degree(const Element& x) {
  int d = 0;
  for (const auto& t : x.terms()) d = std::max(d, loop_degree(t.word));
  return d;
}

int Yangian::total_order(const Word& w) {
  int d = 0;
  for (Letter l : w) d += Generator::unpack(l).r;
  return d;
}

std::shared_ptr<const Yangian> yangian(Signature sig, GeneratorOrder order) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const Yangian>> instances;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(sig.M, sig.N, static_cast<int>(order));
  auto it = instances.find(key);
  if (it == instances.end()) it = instances.emplace(key, std::make_shared<Yangian>(sig, order)).first;
  return it->second;
}

}  // namespace syk
