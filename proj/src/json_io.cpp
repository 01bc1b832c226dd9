#include "syk/json_io.hpp"

#include "syk/errors.hpp"

namespace syk {

Json element_to_json(const Element& x) {
  Json terms = Json::array();
  for (const auto& t : x.terms()) {
    Json word = Json::array();
    for (Letter l : t.word) {
      auto g = Generator::unpack(l);
      word.push_back({g.i, g.j, g.r});
    }
    terms.push_back({{"coeff", to_fraction_string(t.coeff)}, {"word", std::move(word)}});
  }
  return {{"terms", std::move(terms)}};
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

Rational read_coeff(const Json& c, const std::string& where) {
  if (c.is_number_integer()) return Rational(mpz_class(std::to_string(c.get<long long>())));
  if (!c.is_string()) fail(where, "coefficient must be a \"p/q\" string or an integer");
  try {
    return parse_rational(c.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

}  // namespace

Element element_from_json(const Json& j, Signature sig) {
  const Json& terms = field(j, "terms", "");
  if (!terms.is_array()) fail("/terms", "expected an array");
  ElementBuilder out;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const std::string at = "/terms/" + std::to_string(n);
    const Json& term = terms[n];
    Rational c = read_coeff(field(term, "coeff", at), at + "/coeff");
    const Json& word = field(term, "word", at);
    if (!word.is_array()) fail(at + "/word", "expected an array");
    Word w;
    for (std::size_t k = 0; k < word.size(); ++k) {
      const std::string lat = at + "/word/" + std::to_string(k);
      const Json& g = word[k];
      if (!g.is_array() || g.size() != 3 || !g[0].is_number_integer() || !g[1].is_number_integer() ||
          !g[2].is_number_integer()) {
        fail(lat, "expected [i, j, r] with integer entries");
      }
      const long long i = g[0], jj = g[1], r = g[2];
      if (i < 1 || jj < 1 || i > sig.size() || jj > sig.size()) fail(lat, "index outside " + sig.str());
      if (r < 1 || r > 0xffff) fail(lat, "order must lie in 1..65535");
      w.push_back(Generator{static_cast<int>(i), static_cast<int>(jj), static_cast<int>(r)}.pack());
    }
    out.add(w, c);
  }
  return out.build();
}

Json series_to_json(const MultiSeries& s) {
  Json vars = Json::array(), known = Json::array();
  for (Var v : {Var::u, Var::v, Var::w}) {
    if (!s.is_active(v)) continue;
    vars.push_back(var_name(v));
    known.push_back(s.known(v));
  }
  Json coeffs = Json::array();
  for (const auto& [e, c] : s.coeffs()) coeffs.push_back({{"exp", {e[0], e[1], e[2]}}, {"elt", element_to_json(c)}});
  return {{"vars", std::move(vars)}, {"known", std::move(known)}, {"coeffs", std::move(coeffs)}};
}

Json matrix_to_json(const MatrixSeries& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(series_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json gauss_to_json(const GaussData& g) {
  Json blocks = Json::object();
  const int B = g.mu.blocks();
  for (int a = 1; a <= B; ++a) {
    const std::string s = std::to_string(a);
    blocks["D/" + s] = matrix_to_json(g.Dm(a));
    blocks["Dp/" + s] = matrix_to_json(g.Dpm(a));
  }
  for (int a = 1; a <= B; ++a)
    for (int b = a + 1; b <= B; ++b) {
      blocks["E/" + std::to_string(a) + "/" + std::to_string(b)] = matrix_to_json(g.Em(a, b));
      blocks["F/" + std::to_string(b) + "/" + std::to_string(a)] = matrix_to_json(g.Fm(b, a));
    }
  const Signature sig = g.mu.signature();
  return {{"mu", g.mu.str()}, {"M", sig.M}, {"N", sig.N}, {"K", g.K}, {"blocks", std::move(blocks)}};
}

Json report_to_json(const VerifyReport& r) {
  Json relations = Json::object();
  for (const auto& [rel, counts] : r.per_relation())
    relations[rel] = {{"total", counts.first}, {"failed", counts.second}};
  Json failures = Json::array();
  for (const auto& f : r.failures())
    failures.push_back({{"relation", f.relation}, {"indices", f.indices}, {"residual", element_to_json(f.residual)}});
  return {{"total", r.total()},
          {"passed", r.passed()},
          {"failed", r.failed()},
          {"relations", std::move(relations)},
          {"failures", std::move(failures)}};
}

Json pbw_symbol_to_json(const PbwSymbol& s) {
  Json out = {{"kind", std::string(1, s.kind)}};
  if (s.kind == 'D') out["block"] = s.a;
  if (s.kind == 'E' || s.kind == 'F') out["blocks"] = {s.a, s.b};
  out["entry"] = {s.i, s.j};
  out["r"] = s.r;
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace syk
