// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "eval_oracle.hpp"
#include "syk/cli.hpp"
#include "syk/gauss.hpp"
#include "syk/morphisms.hpp"
#include "syk/pbw.hpp"
#include "syk/verify.hpp"

namespace {

using namespace syk;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail.clear();
    ok = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

std::string summary(const VerifyReport& r) {
  return std::to_string(r.passed()) + "/" + std::to_string(r.total());
}

void absorb(Outcome& o, const std::string& what, const VerifyReport& r, std::size_t& checks) {
  checks += r.total();
  if (r.ok() && r.total() > 0) return;
  std::string why = what + " " + summary(r);
  for (const auto& [rel, counts] : r.per_relation())
    if (counts.second) why += " " + rel + ":" + std::to_string(counts.second);
  if (r.total() == 0) why += " (empty)";
  o.fail(why);
}

Element random_raw(std::mt19937& rng, Signature sig, int max_r) {
  std::uniform_int_distribution<int> idx(1, sig.size()), ord(1, max_r), len(0, 2), terms(1, 3), coeff(-4, 4);
  ElementBuilder b;
  for (int t = terms(rng); t > 0; --t) {
    Word w;
    for (int n = len(rng); n > 0; --n) w.push_back(Generator{idx(rng), idx(rng), ord(rng)}.pack());
    Rational c(coeff(rng), 1 + std::abs(coeff(rng)));
    c.canonicalize();
    b.add(w, c);
  }
  return b.build();
}

Element raw_product(const Element& a, const Element& b) {
  ElementBuilder out;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) {
      Word w = x.word;
      w.insert(w.end(), y.word.begin(), y.word.end());
      out.add(w, x.coeff * y.coeff);
    }
  return out.build();
}

const std::vector<Signature> kSmall = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};

Outcome closure() {
  Outcome o;
  std::size_t pairs = 0, quads = 0;
  std::mt19937 rng(20261018);
  for (Signature sig : kSmall) {
    auto y = yangian(sig);
    for (int n = 0; n < 1000; ++n) {
      Element a = random_raw(rng, sig, 4), b = random_raw(rng, sig, 4);
      ++pairs;
      if (y->normal_form(raw_product(a, b)) != y->multiply(y->normal_form(a), y->normal_form(b))) {
        o.fail("NF(ab) mismatch in " + sig.str());
        break;
      }
    }
    oracle::EvalOracle rep(sig, Rational(3, 2), 2);
    const int d = sig.size();
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        for (int h = 1; h <= d; ++h)
          for (int k = 1; k <= d; ++k)
            for (int r = 1; r <= 3; ++r)
              for (int s = 1; s <= 3; ++s) {
                ++quads;
                Element x = y->t(i, j, r), z = y->t(h, k, s);
                Element rhs = y->defining_bracket({i, j, r}, {h, k, s});
                const int sign = (y->parity_of(i, j) & y->parity_of(h, k)) ? -1 : 1;
                Element raw = raw_product(x, z) - raw_product(z, x) * Rational(sign);
                if (y->super_commutator(x, z) != rhs || rep.image(raw) != rep.image(rhs)) {
                  o.fail("bracket (" + std::to_string(i) + std::to_string(j) + std::to_string(h) +
                         std::to_string(k) + ") r=" + std::to_string(r) + " s=" + std::to_string(s) + " in " +
                         sig.str());
                }
              }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " random pairs, " + std::to_string(quads) + " generator brackets";
  return o;
}

Outcome gauss_consistency() {
  Outcome o;
  std::size_t comps = 0, checks = 0;
  for (int total = 1; total <= 4; ++total)
    for (int M = 0; M <= total; ++M) {
      Signature sig{M, total - M};
      auto y = yangian(sig);
      for (const auto& mu : all_compositions(sig)) {
        ++comps;
        absorb(o, "mu=" + mu.str(), check_gauss(y, mu, 3), checks);
      }
    }
  if (o.ok) o.detail = std::to_string(comps) + " compositions, " + std::to_string(checks) + " identities";
  return o;
}

Outcome theorem_presentation() {
  Outcome o;
  std::size_t checks = 0;
  bool quaternary = false, boundary = false;
  for (const char* text : {"1|1", "2|1", "1,1|1", "1|1,1", "2,1|1", "1,1|1,1", "2|2", "1,1|2"}) {
    VerifyReport r = verify_presentation(Composition::parse(text), 3);
    absorb(o, text, r, checks);
    const auto& rel = r.per_relation();
    if (std::string(text) == "1,1|1,1") quaternary = rel.count("EEEE") && rel.count("FFFF");
    if (rel.count("DE") && rel.count("EE+1")) boundary = true;
  }
  if (!quaternary) o.fail("quaternary relations not exercised");
  if (!boundary) o.fail("boundary sign cases not exercised");
  if (o.ok) o.detail = "8 compositions, " + std::to_string(checks) + " instances";
  return o;
}

Outcome special_lemmas() {
  Outcome o;
  std::size_t checks = 0;
  for (const char* text : {"1|1", "2|1", "2|2"}) absorb(o, std::string("mn11 ") + text,
                                                      verify_mn11(Composition::parse(text), 3), checks);
  for (const char* text : {"1,1|1", "2,1|1"}) {
    VerifyReport r = verify_m2n1(Composition::parse(text), 3);
    absorb(o, std::string("m2n1 ") + text, r, checks);
    for (const char* rel : {"m2n1.EEE.a", "m2n1.EEE.d", "m2n1.FFF.a", "m2n1.FFF.d"})
      if (!r.per_relation().count(rel)) o.fail(std::string(rel) + " missing on " + text);
  }
  if (o.ok) o.detail = std::to_string(checks) + " instances";
  return o;
}

Outcome morphism_suite() {
  Outcome o;
  std::size_t checks = 0, specs = 0;
  auto run = [&](MorphismSpec spec) {
    ++specs;
    absorb(o, map_name(spec.kind) + std::to_string(spec.shift) + " " + spec.source.str(), verify_morphism(spec, 3),
           checks);
  };
  for (Signature sig : {Signature{1, 1}, Signature{2, 1}})
    for (MapKind kind : {MapKind::kRho, MapKind::kOmega, MapKind::kZeta}) run({kind, sig});
  for (int k = 1; k <= 2; ++k)
    for (int total = 1; total + k <= 4; ++total)
      for (int M = 0; M <= total; ++M) run({MapKind::kPsi, {M, total - M}, k});
  if (o.ok) o.detail = std::to_string(specs) + " maps, " + std::to_string(checks) + " identities";
  return o;
}

Outcome graded_pbw() {
  Outcome o;
  std::size_t checks = 0;
  for (Signature sig : {Signature{1, 1}, Signature{2, 1}})
    absorb(o, "gr " + sig.str(), gr_bracket_check(sig, 2), checks);
  std::string windows;
  for (const char* text : {"1|1", "1,1|1"}) {
    Composition mu = Composition::parse(text);
    RankReport rank = independence_check(enumerate_pbw(mu, 1, 2, PbwFamily::kFull), mu, 4);
    SpanReport span = spanning_check(mu, 1, 2, 4);
    if (!rank.full())
      o.fail(std::string(text) + " rank " + std::to_string(rank.rank) + "/" + std::to_string(rank.count));
    if (span.failures) o.fail(std::string(text) + " " + std::to_string(span.failures) + " unspanned");
    windows += std::string(windows.empty() ? "" : ", ") + text + " rank " + std::to_string(rank.rank) + "/" +
               std::to_string(rank.count) + " span " + std::to_string(span.targets);
  }
  if (o.ok) o.detail = std::to_string(checks) + " graded identities; " + windows;
  return o;
}

Outcome determinism() {
  Outcome o;
  std::size_t bytes = 0;
  for (const char* text : {"1,1|1", "2|1", "1|1,1", "1,1|1,1"}) {
    std::string first;
    for (const char* workers : {"1", "4"}) {
      std::ostringstream out, err;
      int code = run_cli({"verify", "--suite", "all", "--mu", text, "-K", "3", "--workers", workers}, out, err);
      if (code != kExitOk) o.fail(std::string(text) + " exit " + std::to_string(code));
      if (first.empty()) {
        first = out.str();
        bytes += first.size();
      } else if (out.str() != first) {
        o.fail(std::string(text) + " differs between worker counts");
      }
    }
  }
  if (o.ok) o.detail = "4 compositions, " + std::to_string(bytes) + " report bytes identical for 1 and 4 workers";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"defining-relation closure", closure},     {"Gauss consistency", gauss_consistency},
      {"presentation relations", theorem_presentation}, {"special-case lemmas", special_lemmas},
      {"morphism suite", morphism_suite},         {"graded and PBW windows", graded_pbw},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s: %s (%.1f s)\n", o.ok ? "PASS" : "FAIL", n + 1, criteria[n].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
