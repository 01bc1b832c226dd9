#include <gtest/gtest.h>

#include "syk/errors.hpp"
#include "syk/gauss.hpp"

namespace syk {
namespace {

Element one() { return Element(Rational(1)); }

std::string describe(const VerifyReport& rep) {
  std::string s = std::to_string(rep.failed()) + " of " + std::to_string(rep.total()) + " failed";
  for (std::size_t k = 0; k < rep.failures().size() && k < 5; ++k) s += "\n  " + rep.failures()[k].relation;
  return s;
}

TEST(Composition, ParseAndPrint) {
  EXPECT_EQ(Composition::parse("2,1|1").str(), "2,1|1");
  EXPECT_EQ(Composition::parse("|2").str(), "|2");
  EXPECT_EQ(Composition::parse("3|").str(), "3|");
  Composition mu = Composition::parse("2,1|1,3");
  EXPECT_EQ(mu.m(), 2);
  EXPECT_EQ(mu.n(), 2);
  EXPECT_EQ(mu.offset(2), 3);
  EXPECT_EQ(mu.block_parity(3), 1);
  EXPECT_EQ(mu.signature(), (Signature{3, 4}));
  EXPECT_EQ(mu.reversed().str(), "3,1|1,2");
  for (const char* bad : {"", "|", "2,1", "1|1|1", "0|1", "a|1", "1,|1"}) {
    EXPECT_THROW(Composition::parse(bad), ParseError) << bad;
  }
}

TEST(Composition, Enumeration) {
  EXPECT_EQ(all_compositions({2, 2}).size(), 4u);
  EXPECT_EQ(all_compositions({3, 0}).size(), 4u);
  EXPECT_EQ(all_compositions({1, 3}).size(), 4u);
}

TEST(Matrix, BuildT) {
  auto y = yangian({1, 1});
  MatrixSeries T = build_T(*y, 1);
  EXPECT_EQ(T.at(0, 0).coeff(Var::u, 0), one());
  EXPECT_EQ(T.at(0, 0).coeff(Var::u, 1), y->t(1, 1, 1));
  EXPECT_EQ(T.at(1, 0).coeff(Var::u, 1), y->t(2, 1, 1));
  EXPECT_EQ(T.at(0, 1).coeff(Var::u, 0), Element());
  EXPECT_THROW(T.at(0, 1).coeff(Var::u, 2), OutOfKnownRange);
  MatrixSeries T0 = build_T(*y, 0);
  EXPECT_EQ(T0, MatrixSeries::identity(2) + MatrixSeries(2, 2, MultiSeries::zero(Var::u, 0)));
}

TEST(Matrix, IdentityAndDimensions) {
  auto y = yangian({2, 1});
  MatrixSeries T = build_T(*y, 2);
  EXPECT_EQ(matrix_mul(*y, T, MatrixSeries::identity(3)), T);
  EXPECT_EQ(matrix_mul(*y, MatrixSeries::identity(3), T), T);
  EXPECT_THROW(matrix_mul(*y, T, MatrixSeries::identity(2)), DimensionMismatch);
  EXPECT_THROW(matrix_invert(*y, T.sub(0, 2, 0, 3)), DimensionMismatch);
}

TEST(Matrix, InvertGeometric) {
  auto y = yangian({2, 0});
  EXPECT_EQ(matrix_invert(*y, MatrixSeries::identity(2)), MatrixSeries::identity(2));
  // I + N u^{-1} with N = e_12 scalar nilpotent.
  MatrixSeries A = MatrixSeries::identity(2) + MatrixSeries(2, 2, MultiSeries::zero(Var::u, 2));
  A.at(0, 1).add_term({1, 0, 0}, y->t(1, 2, 1));
  MatrixSeries inv = matrix_invert(*y, A);
  EXPECT_EQ(inv.at(0, 1).coeff(Var::u, 1), -y->t(1, 2, 1));
  EXPECT_EQ(inv.at(0, 1).coeff(Var::u, 2), Element());
  EXPECT_EQ(inv.at(0, 0).coeff(Var::u, 2), Element());

  MatrixSeries T = build_T(*y, 3);
  MatrixSeries Ti = matrix_invert(*y, T);
  EXPECT_EQ(matrix_mul(*y, T, Ti), MatrixSeries::identity(2) + MatrixSeries(2, 2, MultiSeries::zero(Var::u, 3)));
  EXPECT_EQ(matrix_mul(*y, Ti, T), MatrixSeries::identity(2) + MatrixSeries(2, 2, MultiSeries::zero(Var::u, 3)));
}

TEST(Matrix, InvertRejectsBadConstantTerm) {
  auto y = yangian({1, 1});
  MatrixSeries A = MatrixSeries::identity(2);
  A.at(0, 1) = MultiSeries::constant(one());
  EXPECT_THROW(matrix_invert(*y, A), NotUnitriangularConstantTerm);
  MatrixSeries Z(2, 2);
  EXPECT_THROW(matrix_invert(*y, Z), NotUnitriangularConstantTerm);
}

TEST(Matrix, FirstOrderInverse) {
  auto y = yangian({1, 1});
  MatrixSeries Ti = matrix_invert(*y, build_T(*y, 1));
  EXPECT_EQ(Ti.at(1, 1).coeff(Var::u, 0), one());
  EXPECT_EQ(Ti.at(1, 1).coeff(Var::u, 1), -y->t(2, 2, 1));
}

TEST(Matrix, QuasidetScalar) {
  auto y = yangian({1, 0});
  auto c = [](int x) {
    MatrixSeries m(1, 1);
    m.at(0, 0) = MultiSeries::constant(Element(Rational(x)));
    return m;
  };
  EXPECT_EQ(quasidet(*y, c(1), c(2), c(3), c(4)), c(-2));
  EXPECT_EQ(quasidet(*y, c(1), MatrixSeries(1, 1), c(3), c(4)), c(4));
}

TEST(Gauss, OneOneBlocks) {
  auto y = yangian({1, 1});
  const int K = 3;
  GaussData g = gauss_blocks(y, Composition::parse("1|1"), K);
  MatrixSeries T = build_T(*y, K);
  MatrixSeries d2 = quasidet(*y, T.sub(0, 1, 0, 1), T.sub(0, 1, 1, 2), T.sub(1, 2, 0, 1), T.sub(1, 2, 1, 2));
  EXPECT_EQ(g.Dm(2), d2);
  EXPECT_EQ(g.Dm(1), T.sub(0, 1, 0, 1));
  EXPECT_EQ(g.e(1, 2, 1, 1, 1), y->t(1, 2, 1));
  EXPECT_EQ(g.f(2, 1, 1, 1, 1), y->t(2, 1, 1));
  MatrixSeries e = matrix_mul(*y, matrix_invert(*y, T.sub(0, 1, 0, 1)), T.sub(0, 1, 1, 2));
  EXPECT_EQ(g.Em(1, 2), e);
  // Inverse entry in the odd corner is -E D'_2.
  MatrixSeries Ti = matrix_invert(*y, T);
  EXPECT_EQ(Ti.sub(0, 1, 1, 2), MatrixSeries(1, 1) - matrix_mul(*y, g.Em(1, 2), g.Dpm(2)));
}

TEST(Gauss, LeadingBlockIsT) {
  auto y = yangian({2, 1});
  GaussData g = gauss_blocks(y, Composition::parse("2|1"), 3);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int r = 0; r <= 3; ++r) EXPECT_EQ(g.d(1, i, j, r), y->t(i, j, r));
}

TEST(Gauss, FirstOrderEF) {
  auto y = yangian({2, 2});
  Composition mu = Composition::parse("1,1|1,1");
  GaussData g = gauss_blocks(y, mu, 2);
  for (int b = 2; b <= 4; ++b) {
    EXPECT_EQ(g.e(b - 1, b, 1, 1, 1), y->t(b - 1, b, 1));
    EXPECT_EQ(g.f(b, b - 1, 1, 1, 1), y->t(b, b - 1, 1));
  }
  for (int b = 3; b <= 4; ++b) EXPECT_EQ(g.e(1, b, 1, 1, 1), y->t(1, b, 1));
}

TEST(Gauss, TildeExamples) {
  auto y = yangian({2, 1});
  GaussData g2 = gauss_blocks(y, Composition::parse("2|1"), 2);
  EXPECT_EQ(tilde_E(g2, 1, 2), MatrixSeries(2, 1) - g2.Em(1, 2));
  EXPECT_EQ(tilde_F(g2, 2, 1), MatrixSeries(1, 2) - g2.Fm(2, 1));
  GaussData g = gauss_blocks(y, Composition::parse("1,1|1"), 2);
  EXPECT_EQ(tilde_E(g, 1, 3), matrix_mul(*y, g.Em(1, 2), g.Em(2, 3)) - g.Em(1, 3));
  EXPECT_EQ(tilde_F(g, 3, 1), matrix_mul(*y, g.Fm(3, 2), g.Fm(2, 1)) - g.Fm(3, 1));
}

TEST(Gauss, ZeroOrderPassesTrivially) {
  auto rep = check_gauss(yangian({1, 1}), Composition::parse("1|1"), 0);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.total(), 0u);
}

TEST(Gauss, HigherEFTrivialForTwoBlocks) {
  GaussData g = gauss_blocks(yangian({1, 1}), Composition::parse("1|1"), 2);
  EXPECT_EQ(check_higher_EF(g).total(), 0u);
}

TEST(Gauss, CompositionMustMatchSignature) {
  EXPECT_THROW(gauss_blocks(yangian({1, 1}), Composition::parse("2|1"), 1), DimensionMismatch);
}

class GaussSweep : public ::testing::TestWithParam<std::string> {};

TEST_P(GaussSweep, CheckGauss) {
  Composition mu = Composition::parse(GetParam());
  auto rep = check_gauss(yangian(mu.signature()), mu, 3);
  EXPECT_TRUE(rep.ok()) << describe(rep);
}

TEST_P(GaussSweep, HigherEF) {
  Composition mu = Composition::parse(GetParam());
  GaussData g = gauss_blocks(yangian(mu.signature()), mu, 3);
  auto rep = check_higher_EF(g);
  EXPECT_TRUE(rep.ok()) << describe(rep);
}

INSTANTIATE_TEST_SUITE_P(Small, GaussSweep,
                         ::testing::Values("1|1", "2|1", "1|2", "1,1|1", "1|1,1", "2|", "1,1|", "|1,1",
                                           "1,1|1,1", "2|2", "1,2|1", "2,1|1", "1|1,2"),
                         [](const auto& info) {
                           std::string s;
                           for (char c : info.param) s += c == '|' ? '_' : c == ',' ? 'x' : c;
                           return "mu_" + s;
                         });

}  // namespace
}  // namespace syk
