#include "syk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "syk/errors.hpp"
#include "syk/json_io.hpp"
#include "syk/morphisms.hpp"
#include "syk/pbw.hpp"
#include "syk/verify.hpp"

namespace syk {

namespace {

Signature parse_signature(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected M,N but got '" + text + "'");
  try {
    std::size_t used = 0;
    const int M = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("M");
    const std::string rest = text.substr(comma + 1);
    const int N = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("N");
    return {M, N};
  } catch (const std::logic_error&) {
    throw ParseError("expected M,N but got '" + text + "'");
  }
}

GeneratorOrder parse_order(const std::string& text) {
  if (text == "rij") return GeneratorOrder::kRIJ;
  if (text == "ijr") return GeneratorOrder::kIJR;
  throw ParseError("unknown generator order '" + text + "'");
}

// Inline JSON if it starts with '{', "-" for stdin, otherwise a file path.
std::string read_input(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::stringstream buf;
  if (arg == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot read '" + arg + "'");
  buf << in.rdbuf();
  return buf.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int resolve(int workers) { return workers > 0 ? workers : default_workers(); }

struct Options {
  std::string mn, mu, order = "rij", input, name, expr, suite, json_path, family = "full", check = "both",
                      out_dir;
  int K = -1, shift = 0, deg = 0, len = 1, workers = 0;
  bool composed = false, list = false;
};

void check_K(int K) {
  if (K < 0) throw ParseError("-K must be >= 0");
}

int cmd_nf(const Options& o, std::ostream& out) {
  auto y = yangian(parse_signature(o.mn), parse_order(o.order));
  Element x = element_from_json(parse_json(read_input(o.input)), y->signature());
  emit(out, element_to_json(y->normal_form(x)));
  return kExitOk;
}

int cmd_gauss(const Options& o, std::ostream& out) {
  check_K(o.K);
  Composition mu = Composition::parse(o.mu);
  emit(out, gauss_to_json(gauss_blocks(yangian(mu.signature(), parse_order(o.order)), mu, o.K)));
  return kExitOk;
}

// "t12" or "t1,2": the generating series t_ij(u).
bool parse_series_name(const std::string& text, int& i, int& j) {
  if (text.size() < 3 || text[0] != 't') return false;
  std::string body = text.substr(1);
  auto comma = body.find(',');
  try {
    if (comma != std::string::npos) {
      i = std::stoi(body.substr(0, comma));
      j = std::stoi(body.substr(comma + 1));
      return true;
    }
    if (body.size() == 2 && std::isdigit(body[0]) && std::isdigit(body[1])) {
      i = body[0] - '0';
      j = body[1] - '0';
      return true;
    }
  } catch (const std::logic_error&) {
  }
  throw ParseError("cannot read generator series '" + text + "'");
}

int cmd_map(const Options& o, std::ostream& out) {
  check_K(o.K);
  MorphismSpec spec{parse_map_name(o.name), parse_signature(o.mn), o.shift, parse_order(o.order)};
  Morphism f = o.composed ? make_morphism_composed(spec, o.K) : make_morphism(spec, o.K);
  int i = 0, j = 0;
  if (parse_series_name(o.expr, i, j)) {
    f.source()->parity_of(i, j);
    MultiSeries s = MultiSeries::zero(Var::u, o.K);
    for (int r = 0; r <= o.K; ++r) s.add_term({r, 0, 0}, f.image(i, j, r));
    emit(out, series_to_json(s));
  } else {
    Element x = element_from_json(parse_json(read_input(o.expr)), spec.source);
    emit(out, element_to_json(f.apply(f.source()->normal_form(x))));
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  check_K(o.K);
  const Suite suite = parse_suite(o.suite);
  Composition mu = Composition::parse(o.mu);
  VerifyOptions opts{resolve(o.workers), parse_order(o.order)};
  auto start = std::chrono::steady_clock::now();
  VerifyReport rep = verify_suite(suite, mu, o.K, opts);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  Json j = {{"suite", suite_name(suite)}, {"mu", mu.str()}, {"K", o.K}, {"order", o.order}};
  j.update(report_to_json(rep));
  if (o.json_path.empty()) {
    emit(out, j);
  } else {
    std::ofstream file(o.json_path);
    if (!file) throw ParseError("cannot write '" + o.json_path + "'");
    emit(file, j);
  }
  err << "verify " << suite_name(suite) << " " << mu.str() << " K=" << o.K << ": " << rep.passed() << "/"
      << rep.total() << " passed in " << ms.count() << " ms\n";
  return rep.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_pbw(const Options& o, std::ostream& out) {
  check_K(o.K);
  Composition mu = Composition::parse(o.mu);
  const PbwFamily family = parse_family(o.family);
  if (o.check != "rank" && o.check != "span" && o.check != "both") {
    throw ParseError("--check must be rank, span or both");
  }
  const int workers = resolve(o.workers);
  std::vector<PbwMonomial> monomials = enumerate_pbw(mu, o.deg, o.len, family);
  Json j = {{"mu", mu.str()}, {"family", family_name(family)}, {"deg", o.deg}, {"len", o.len}, {"K", o.K},
            {"count", monomials.size()}, {"rank", nullptr}, {"span_targets", nullptr}, {"span_failures", nullptr}};
  bool ok = true;
  if (o.check != "span") {
    RankReport r = independence_check(monomials, mu, o.K, workers);
    j["rank"] = r.rank;
    ok = ok && r.full();
  }
  if (o.check != "rank") {
    SpanReport s = spanning_check(mu, o.deg, o.len, o.K, workers);
    j["span_targets"] = s.targets;
    j["span_failures"] = s.failures;
    ok = ok && s.failures == 0;
  }
  if (o.list) {
    Json list = Json::array();
    for (const auto& m : monomials) {
      Json word = Json::array();
      for (const auto& s : m) word.push_back(s.str());
      list.push_back(std::move(word));
    }
    j["monomials"] = std::move(list);
  }
  emit(out, j);
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_fixtures(const Options& o, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  fs::create_directories(o.out_dir);
  int worst = kExitOk;
  for (const auto& fx : fixture_corpus()) {
    std::ostringstream body, diag;
    const int code = run_cli(fx.args, body, diag);
    if (code != kExitOk) {
      err << fx.name << ": exit " << code << "\n" << diag.str();
      worst = std::max(worst, code);
      continue;
    }
    std::ofstream file(fs::path(o.out_dir) / (fx.name + ".json"), std::ios::binary);
    file << body.str();
    out << fx.name << ".json\n";
  }
  return worst;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the super Yangian Y(gl(M|N))", "syk"};
  app.require_subcommand(1);
  Options o;

  auto add_order = [&](CLI::App* c) { c->add_option("--order", o.order, "Generator order: rij or ijr"); };
  auto add_workers = [&](CLI::App* c) {
    c->add_option("--workers", o.workers, "Worker threads (default: SYK_WORKERS, else 1)");
  };

  auto* nf = app.add_subcommand("nf", "Normal form of an element");
  nf->add_option("--mn", o.mn, "Signature M,N")->required();
  nf->add_option("input", o.input, "Element JSON: inline, a file, or - for stdin")->required();
  add_order(nf);

  auto* gauss = app.add_subcommand("gauss", "Gauss blocks D, D', E, F");
  gauss->add_option("--mu", o.mu, "Composition, e.g. 2,1|1")->required();
  gauss->add_option("-K", o.K, "Truncation order")->required();
  add_order(gauss);

  auto* map = app.add_subcommand("map", "Apply rho, omega, psi, zeta or phi");
  map->add_option("--name", o.name, "rho, omega, psi, zeta or phi")->required();
  map->add_option("--shift", o.shift, "Shift k for psi and phi");
  map->add_option("--mn", o.mn, "Source signature M,N")->required();
  map->add_option("-K", o.K, "Truncation order")->required();
  map->add_option("--expr", o.expr, "tij for the series t_ij(u), or element JSON")->required();
  map->add_flag("--composed", o.composed, "Build psi and zeta as compositions of simpler maps");
  add_order(map);

  auto* verify = app.add_subcommand("verify", "Check a relation suite");
  verify->add_option("--suite", o.suite, "levi, even, mn11, m2n1, thm73, lemma72 or all")->required();
  verify->add_option("--mu", o.mu, "Composition")->required();
  verify->add_option("-K", o.K, "Truncation order")->required();
  verify->add_option("--json", o.json_path, "Write the report here instead of stdout");
  add_workers(verify);
  add_order(verify);

  auto* pbw = app.add_subcommand("pbw", "PBW rank and spanning on a finite window");
  pbw->add_option("--mu", o.mu, "Composition")->required();
  pbw->add_option("--deg", o.deg, "Loop degree cap")->required();
  pbw->add_option("--len", o.len, "Word length cap")->required();
  pbw->add_option("-K", o.K, "Truncation order")->required();
  pbw->add_option("--family", o.family, "full, D-only, E-only, F-only or t-gens");
  pbw->add_option("--check", o.check, "rank, span or both");
  pbw->add_flag("--list", o.list, "Include the monomials");
  add_workers(pbw);

  auto* fixtures = app.add_subcommand("fixtures", "Regenerate the golden JSON corpus");
  fixtures->add_option("--out", o.out_dir, "Output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*nf) return cmd_nf(o, out);
    if (*gauss) return cmd_gauss(o, out);
    if (*map) return cmd_map(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*pbw) return cmd_pbw(o, out);
    if (*fixtures) return cmd_fixtures(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

const std::vector<Fixture>& fixture_corpus() {
  static const std::vector<Fixture> corpus = {
      {"nf_odd_pair_1_1", {"nf", "--mn", "1,1", R"({"terms":[{"coeff":"1","word":[[2,1,1],[1,2,1]]}]})"}},
      {"nf_empty", {"nf", "--mn", "1,1", R"({"terms":[]})"}},
      {"nf_odd_square_1_1", {"nf", "--mn", "1,1", R"({"terms":[{"coeff":"1","word":[[1,2,2],[1,2,2]]}]})"}},
      {"gauss_1_1_K2", {"gauss", "--mu", "1|1", "-K", "2"}},
      {"gauss_1_1_1_K1", {"gauss", "--mu", "1,1|1", "-K", "1"}},
      {"map_zeta_t11_K2", {"map", "--name", "zeta", "--mn", "1,1", "-K", "2", "--expr", "t11"}},
      {"map_rho_t11_K1", {"map", "--name", "rho", "--mn", "1,1", "-K", "1", "--expr", "t11"}},
      {"map_rho_t12_order2",
       {"map", "--name", "rho", "--mn", "1,1", "-K", "2", "--expr", R"({"terms":[{"coeff":"1","word":[[1,2,2]]}]})"}},
      {"map_psi1_t11_K2", {"map", "--name", "psi", "--shift", "1", "--mn", "1,1", "-K", "2", "--expr", "t11"}},
      {"map_omega_t12_K2", {"map", "--name", "omega", "--mn", "1,1", "-K", "2", "--expr", "t12"}},
      {"verify_presentation_1_1_K3", {"verify", "--suite", "thm73", "--mu", "1|1", "-K", "3"}},
      {"verify_all_1_1_1_K3", {"verify", "--suite", "all", "--mu", "1,1|1", "-K", "3"}},
      {"verify_mn11_2_1_K2", {"verify", "--suite", "mn11", "--mu", "2|1", "-K", "2"}},
      {"pbw_1_1_deg0_len1_K1", {"pbw", "--mu", "1|1", "--deg", "0", "--len", "1", "-K", "1", "--list"}},
      {"pbw_1_1_deg1_len2_K4", {"pbw", "--mu", "1|1", "--deg", "1", "--len", "2", "-K", "4"}},
      {"pbw_1_1_1_E_only", {"pbw", "--mu", "1,1|1", "--deg", "0", "--len", "1", "-K", "1", "--family", "E-only",
                            "--check", "rank", "--list"}},
      {"pbw_1_1_t_gens", {"pbw", "--mu", "1|1", "--deg", "1", "--len", "1", "-K", "2", "--family", "t-gens",
                          "--check", "rank", "--list"}},
  };
  return corpus;
}

}  // namespace syk
