#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "syk/cli.hpp"
#include "syk/json_io.hpp"

namespace syk {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

void PrintTo(const Fixture& f, std::ostream* os) { *os << f.name; }

namespace {

class Golden : public ::testing::TestWithParam<Fixture> {};

TEST_P(Golden, MatchesCorpus) {
  const Fixture& fx = GetParam();
  auto path = std::filesystem::path(SYK_GOLDEN_DIR) / (fx.name + ".json");
  ASSERT_TRUE(std::filesystem::exists(path)) << path;
  CliRun r = run(fx.args);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, slurp(path));
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(fixture_corpus()),
                         [](const auto& info) { return info.param.name; });

TEST(Cli, SpecPbwExample) {
  CliRun r = run({"pbw", "--mu", "1|1", "--deg", "0", "--len", "1", "-K", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = parse_json(r.out);
  EXPECT_EQ(j["count"], 4);
  EXPECT_EQ(j["rank"], 4);
  EXPECT_EQ(j["span_failures"], 0);
}

TEST(Cli, NormalFormIsIdempotent) {
  CliRun once = run({"nf", "--mn", "2,1", R"({"terms":[{"coeff":"3/2","word":[[3,1,2],[1,3,1],[2,2,1]]}]})"});
  ASSERT_EQ(once.code, kExitOk) << once.err;
  CliRun twice = run({"nf", "--mn", "2,1", once.out});
  EXPECT_EQ(once.out, twice.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"verify", "--suite", "lemma72", "--mu", "1|1", "-K", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "nope", "--mu", "1|1", "-K", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"nf", "--mn", "1,1", "{\"terms\": ["}).code, kExitUsage);
  EXPECT_EQ(run({"nf", "--mn", "1,1", R"({"terms":[{"coeff":"1","word":[[3,1,1]]}]})"}).code, kExitUsage);
  EXPECT_EQ(run({"nf", "--mn", "1,1", R"({"terms":[{"coeff":"1/0","word":[]}]})"}).code, kExitUsage);
  EXPECT_EQ(run({"gauss", "--mu", "1|1"}).code, kExitUsage);
  EXPECT_EQ(run({"gauss", "--mu", "1|x", "-K", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"pbw", "--mu", "1|1", "--deg", "1", "--len", "2", "-K", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "--suite", "thm73", "--mu", "1|1", "-K", "3"}).code, kExitOk);
}

TEST(Cli, ParseErrorNamesLocation) {
  CliRun r = run({"nf", "--mn", "1,1", R"({"terms":[{"coeff":"1","word":[[1,1,1],[1,9,1]]}]})"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("/terms/0/word/1"), std::string::npos) << r.err;
}

TEST(Cli, TimingOnStderrOnly) {
  CliRun r = run({"verify", "--suite", "levi", "--mu", "1|1", "-K", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find(" ms"), std::string::npos);
  EXPECT_EQ(r.out.find(" ms"), std::string::npos);
}

TEST(Cli, WorkerCountDoesNotChangeBytes) {
  std::vector<std::string> base = {"verify", "--suite", "all", "--mu", "1,1|1", "-K", "2"};
  auto with = [&](const char* w) {
    auto a = base;
    a.insert(a.end(), {"--workers", w});
    return run(a);
  };
  CliRun one = with("1"), three = with("3");
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.out, three.out);
}

TEST(Cli, EnvironmentWorkers) {
  std::vector<std::string> args = {"verify", "--suite", "thm73", "--mu", "2|1", "-K", "2"};
  CliRun plain = run(args);
  setenv("SYK_WORKERS", "4", 1);
  CliRun env = run(args);
  unsetenv("SYK_WORKERS");
  EXPECT_EQ(plain.out, env.out);
}

TEST(Cli, JsonFileOutput) {
  auto path = std::filesystem::temp_directory_path() / "syk_cli_report.json";
  CliRun r = run({"verify", "--suite", "levi", "--mu", "1|1", "-K", "2", "--json", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  Json j = parse_json(slurp(path));
  EXPECT_EQ(j["failed"], 0);
  EXPECT_EQ(j["suite"], "levi");
  std::filesystem::remove(path);
}

TEST(Cli, MapComposedMatchesDirect) {
  for (const char* shift : {"1", ""}) {
    std::vector<std::string> args = {"map", "--mn", "1,1", "-K", "3", "--expr", "t12", "--name"};
    if (*shift) {
      args.insert(args.end(), {"psi", "--shift", shift});
    } else {
      args.push_back("zeta");
    }
    CliRun direct = run(args);
    args.push_back("--composed");
    CliRun composed = run(args);
    EXPECT_EQ(direct.code, kExitOk) << direct.err;
    EXPECT_EQ(direct.out, composed.out) << args[8];
  }
}

TEST(Cli, FixturesCommandWritesCorpus) {
  auto dir = std::filesystem::temp_directory_path() / "syk_fixtures_test";
  std::filesystem::remove_all(dir);
  CliRun r = run({"fixtures", "--out", dir.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  for (const auto& fx : fixture_corpus()) {
    EXPECT_EQ(slurp(dir / (fx.name + ".json")), slurp(std::filesystem::path(SYK_GOLDEN_DIR) / (fx.name + ".json")))
        << fx.name;
  }
  std::filesystem::remove_all(dir);
}

TEST(JsonIo, ElementRoundTrip) {
  auto y = yangian({2, 1});
  Element x = y->multiply(y->t(3, 1, 2), y->t(1, 3, 1)) * Rational(-7, 3) + y->t(2, 2, 1) + Element(Rational(1, 2));
  EXPECT_EQ(element_from_json(element_to_json(x), y->signature()), x);
  EXPECT_EQ(element_to_json(Element()).dump(), R"({"terms":[]})");
  Json integer_coeff = parse_json(R"({"terms":[{"coeff":2,"word":[[1,1,1]]},{"coeff":"-2/1","word":[[1,1,1]]}]})");
  EXPECT_TRUE(element_from_json(integer_coeff, y->signature()).is_zero());
}

TEST(JsonIo, SeriesShape) {
  auto y = yangian({1, 1});
  MultiSeries s = MultiSeries::zero(Var::u, 2);
  s.add_term({1, 0, 0}, y->t(1, 2, 1));
  Json j = series_to_json(s);
  EXPECT_EQ(j["vars"], Json::array({"u"}));
  EXPECT_EQ(j["known"], Json::array({2}));
  EXPECT_EQ(j["coeffs"][0]["exp"], Json::array({1, 0, 0}));
  EXPECT_EQ(j["coeffs"][0]["elt"]["terms"][0]["coeff"], "1/1");
}

TEST(JsonIo, GaussKeys) {
  auto mu = Composition::parse("1,1|1");
  Json j = gauss_to_json(gauss_blocks(yangian(mu.signature()), mu, 1));
  for (const char* key : {"D/1", "Dp/3", "E/1/2", "E/1/3", "F/3/1", "F/2/1"})
    EXPECT_TRUE(j["blocks"].contains(key)) << key;
  EXPECT_FALSE(j["blocks"].contains("E/2/1"));
}

}  // namespace
}  // namespace syk
