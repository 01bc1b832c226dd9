#include <gtest/gtest.h>

#include "syk/errors.hpp"
#include "syk/gauss.hpp"
#include "syk/verify.hpp"

namespace syk {
namespace {

std::string describe(const VerifyReport& rep) {
  std::string s = std::to_string(rep.failed()) + " of " + std::to_string(rep.total()) + " failed";
  for (const auto& [rel, counts] : rep.per_relation()) {
    if (counts.second) s += "\n  " + rel + ": " + std::to_string(counts.second) + "/" + std::to_string(counts.first);
  }
  return s;
}

std::size_t count(const VerifyReport& rep, const std::string& rel) {
  auto it = rep.per_relation().find(rel);
  return it == rep.per_relation().end() ? 0 : it->second.first;
}

TEST(Verify, SuiteNames) {
  EXPECT_EQ(parse_suite("thm73"), Suite::kPresentation);
  EXPECT_EQ(suite_name(Suite::kQuaternary), "lemma72");
  EXPECT_THROW(parse_suite("thm"), ParseError);
}

TEST(Verify, ShapePreconditions) {
  EXPECT_THROW(verify_mn11(Composition::parse("1,1|1"), 2), WrongShape);
  EXPECT_THROW(verify_m2n1(Composition::parse("1|1"), 2), WrongShape);
  EXPECT_THROW(verify_m2n1(Composition::parse("1,1|1,1"), 2), WrongShape);
  EXPECT_THROW(verify_quaternary(Composition::parse("1|1"), 2), WrongShape);
  EXPECT_THROW(verify_quaternary(Composition::parse("1,1|2"), 2), WrongShape);
}

TEST(Verify, EvenSuiteVacuousOnOneOne) {
  VerifyReport rep = verify_block_even(Composition::parse("1|1"), 3);
  EXPECT_EQ(rep.total(), 0u);
}

TEST(Verify, LeviAcrossBlocks) {
  VerifyReport rep = verify_levi(Composition::parse("1|1"), 3);
  EXPECT_TRUE(rep.ok()) << describe(rep);
  EXPECT_GT(count(rep, "levi.DD"), 0u);
}

TEST(Verify, EFFirstOrderExample) {
  auto y = yangian({1, 1});
  GaussData g = gauss_blocks(y, Composition::parse("1|1"), 2);
  Element br = y->super_commutator(g.e(1, 2, 1, 1, 1), g.f(2, 1, 1, 1, 1));
  EXPECT_EQ(br, y->t(2, 2, 1) - y->t(1, 1, 1));
  EXPECT_EQ(g.dp(1, 1, 1, 1), -y->t(1, 1, 1));
}

// Inside an odd block the D-D bracket carries the odd-odd sign.
TEST(Verify, OddBlockLeviSign) {
  auto y = yangian({0, 2});
  GaussData g = gauss_blocks(y, Composition::parse("|2"), 2);
  Element lhs = y->super_commutator(g.d(1, 1, 2, 1), g.d(1, 2, 1, 1));
  Element unsigned_rhs = g.d(1, 1, 1, 1) - g.d(1, 2, 2, 1);
  EXPECT_EQ(lhs, -unsigned_rhs);
  EXPECT_FALSE(unsigned_rhs.is_zero());
}

TEST(Verify, QuaternaryCovered) {
  VerifyReport rep = verify_presentation(Composition::parse("1,1|1,1"), 2);
  EXPECT_TRUE(rep.ok()) << describe(rep);
  EXPECT_GT(count(rep, "EEEE"), 0u);
  EXPECT_GT(count(rep, "FFFF"), 0u);
  EXPECT_GT(count(rep, "kernel.DE"), 0u);
}

TEST(Verify, BoundarySignCasesExercised) {
  // b = m occurs for DE/DF whenever both parts are nonempty.
  VerifyReport rep = verify_presentation(Composition::parse("2,1|1"), 2);
  EXPECT_TRUE(rep.ok()) << describe(rep);
  EXPECT_GT(count(rep, "DE"), 0u);
  EXPECT_GT(count(rep, "EE+1"), 0u);
  EXPECT_GT(count(rep, "EEE.serre"), 0u);
}

TEST(Verify, WorkerCountDoesNotChangeReport) {
  Composition mu = Composition::parse("1,1|1");
  VerifyReport one = verify_suite(Suite::kAll, mu, 2, {1});
  VerifyReport four = verify_suite(Suite::kAll, mu, 2, {4});
  EXPECT_EQ(one, four);
}

TEST(Verify, OtherGeneratorOrder) {
  VerifyOptions opts{2, GeneratorOrder::kIJR};
  for (const char* text : {"1|1", "1,1|1", "1|2"}) {
    VerifyReport rep = verify_suite(Suite::kAll, Composition::parse(text), 3, opts);
    EXPECT_TRUE(rep.ok()) << text << ": " << describe(rep);
  }
}

class SuiteSweep : public ::testing::TestWithParam<std::tuple<Suite, const char*>> {};

TEST_P(SuiteSweep, NoFailures) {
  auto [suite, text] = GetParam();
  VerifyReport rep = verify_suite(suite, Composition::parse(text), 3);
  EXPECT_TRUE(rep.ok()) << suite_name(suite) << " " << text << ": " << describe(rep);
  EXPECT_GT(rep.total(), 0u);
}

INSTANTIATE_TEST_SUITE_P(
    Verify, SuiteSweep,
    ::testing::Values(std::tuple{Suite::kLevi, "2,1|1,2"}, std::tuple{Suite::kLevi, "|3"},
                      std::tuple{Suite::kEven, "1,1,1|"}, std::tuple{Suite::kEven, "1|1,2"},
                      std::tuple{Suite::kEven, "2,1|1"}, std::tuple{Suite::kMn11, "1|1"},
                      std::tuple{Suite::kMn11, "2|1"}, std::tuple{Suite::kMn11, "1|2"},
                      std::tuple{Suite::kM2n1, "1,1|1"}, std::tuple{Suite::kM2n1, "1|1,1"},
                      std::tuple{Suite::kPresentation, "1|1"}, std::tuple{Suite::kPresentation, "2|1"},
                      std::tuple{Suite::kPresentation, "1|1,1"}, std::tuple{Suite::kPresentation, "2|2"},
                      std::tuple{Suite::kQuaternary, "1,1|1,1"}, std::tuple{Suite::kAll, "1,1|1"}));

}  // namespace
}  // namespace syk
