#include <gtest/gtest.h>

#include <random>

#include "syk/errors.hpp"
#include "syk/series.hpp"
#include "syk/yangian.hpp"

namespace syk {
namespace {

std::shared_ptr<const Yangian> Y11() { return yangian({1, 1}); }

MultiSeries t_series(const Yangian& y, int i, int j, Var var, int K) {
  MultiSeries s = MultiSeries::zero(var, K);
  for (int r = 0; r <= K; ++r) {
    Exp e{0, 0, 0};
    e[MultiSeries::idx(var)] = r;
    s.add_term(e, y.t(i, j, r));
  }
  return s;
}

TEST(Series, AddAdditiveInverse) {
  auto y = Y11();
  MultiSeries a = MultiSeries::zero(Var::u, 3);
  a.add_term({0, 0, 0}, Element(Rational(1)));
  a.add_term({1, 0, 0}, y->t(1, 1, 1));
  MultiSeries b = a + MultiSeries::constant(Element(Rational(-1)));
  EXPECT_EQ(b.coeff(Var::u, 0), Element());
  EXPECT_EQ(b.coeff(Var::u, 1), y->t(1, 1, 1));
  EXPECT_EQ(b.known(Var::u), 3);
}

TEST(Series, AddZeroKeepsKnownOrder) {
  auto y = Y11();
  MultiSeries a = t_series(*y, 1, 2, Var::u, 3);
  EXPECT_EQ(a + MultiSeries(), a);
}

TEST(Series, AddDiagonals) {
  auto y = Y11();
  MultiSeries s = t_series(*y, 1, 1, Var::u, 2) + t_series(*y, 2, 2, Var::u, 2);
  EXPECT_EQ(s.coeff(Var::u, 1), y->t(1, 1, 1) + y->t(2, 2, 1));
  EXPECT_EQ(s.coeff(Var::u, 0), Element(Rational(2)));
}

TEST(Series, KnownOrderIsMinimum) {
  auto y = Y11();
  MultiSeries s = t_series(*y, 1, 1, Var::u, 2) + t_series(*y, 2, 2, Var::u, 4);
  EXPECT_EQ(s.known(Var::u), 2);
  EXPECT_THROW(s.coeff(Var::u, 3), OutOfKnownRange);
}

TEST(Series, DifferenceOfSquares) {
  auto y = Y11();
  Element g = y->t(1, 1, 1);
  MultiSeries a = MultiSeries::zero(Var::u, 4), b = MultiSeries::zero(Var::u, 4);
  a.add_term({0, 0, 0}, Element(Rational(1)));
  a.add_term({1, 0, 0}, g);
  b.add_term({0, 0, 0}, Element(Rational(1)));
  b.add_term({1, 0, 0}, -g);
  MultiSeries p = series_mul(*y, a, b);
  EXPECT_EQ(p.coeff(Var::u, 0), Element(Rational(1)));
  EXPECT_EQ(p.coeff(Var::u, 1), Element());
  EXPECT_EQ(p.coeff(Var::u, 2), -y->multiply(g, g));
  EXPECT_EQ(p.coeff(Var::u, 3), Element());
}

TEST(Series, MultiplyByOne) {
  auto y = Y11();
  MultiSeries a = t_series(*y, 2, 1, Var::u, 3);
  EXPECT_EQ(series_mul(*y, MultiSeries::constant(Element(Rational(1))), a), a);
  EXPECT_EQ(series_mul(*y, a, MultiSeries::constant(Element(Rational(1)))), a);
}

TEST(Series, OddSeriesSquare) {
  auto y = Y11();
  MultiSeries a = t_series(*y, 1, 2, Var::u, 2);
  MultiSeries p = series_mul(*y, a, a);
  EXPECT_EQ(p.coeff(Var::u, 2), Element());
  // Both factors start at u^-1, so one more coefficient is exact.
  EXPECT_EQ(p.known(Var::u), 3);
  EXPECT_EQ(p.coeff(Var::u, 3), y->super_commutator(y->t(1, 2, 1), y->t(1, 2, 2)));
}

TEST(Series, ShiftExamples) {
  auto y = Y11();
  Element x = y->t(1, 1, 2);
  MultiSeries a = MultiSeries::zero(Var::u, 4);
  a.add_term({2, 0, 0}, x);
  MultiSeries s = series_shift(a, Var::u, 1);
  EXPECT_EQ(s.coeff(Var::u, 1), x);
  EXPECT_EQ(s.known(Var::u), 3);
  EXPECT_EQ(series_shift(a, Var::u, 0), a);
}

TEST(Series, ShiftedBracketInTwoVariables) {
  auto y = Y11();
  const int K = 3;
  MultiSeries b = series_supercomm(*y, t_series(*y, 1, 2, Var::u, K), t_series(*y, 2, 1, Var::v, K));
  MultiSeries s = series_times_difference(b, Var::u, Var::v);
  EXPECT_EQ(s.coeff({0, 1, 0}), y->t(2, 2, 1) - y->t(1, 1, 1));
  EXPECT_EQ(s.coeff({1, 0, 0}), y->t(1, 1, 1) - y->t(2, 2, 1));
  EXPECT_EQ(s.coeff({1, 1, 0}), Element());
  EXPECT_EQ(s.known(Var::u), K - 1);
  EXPECT_EQ(s.known(Var::v), K - 1);
}

TEST(Series, ExtractExamples) {
  auto y = Y11();
  MultiSeries a = t_series(*y, 1, 1, Var::u, 3);
  EXPECT_EQ(a.coeff({1, 0, 0}), y->t(1, 1, 1));
  EXPECT_EQ(a.coeff({0, 0, 0}), Element(Rational(1)));
  EXPECT_THROW(a.coeff({4, 0, 0}), OutOfKnownRange);
  EXPECT_THROW(a.coeff(Var::u, 4), OutOfKnownRange);
}

TEST(Series, RenameAndNegate) {
  auto y = Y11();
  MultiSeries a = t_series(*y, 1, 2, Var::u, 3);
  MultiSeries b = rename_var(a, Var::u, Var::w);
  EXPECT_FALSE(b.is_active(Var::u));
  EXPECT_EQ(b.coeff(Var::w, 2), y->t(1, 2, 2));
  MultiSeries n = negate_var(a, Var::u);
  EXPECT_EQ(n.coeff(Var::u, 1), -y->t(1, 2, 1));
  EXPECT_EQ(n.coeff(Var::u, 2), y->t(1, 2, 2));
  EXPECT_EQ(negate_var(n, Var::u), a);
}

// Coefficients inside the declared known range do not change when the inputs
// are computed to higher order.
TEST(Series, KnownRangeIsExact) {
  auto y = yangian({1, 1});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int i = 1 + rng() % 2, j = 1 + rng() % 2, h = 1 + rng() % 2, k = 1 + rng() % 2;
    int K1 = 1 + rng() % 3, K2 = 1 + rng() % 3;
    MultiSeries lo = series_mul(*y, t_series(*y, i, j, Var::u, K1), t_series(*y, h, k, Var::u, K2));
    MultiSeries hi = series_mul(*y, t_series(*y, i, j, Var::u, 4), t_series(*y, h, k, Var::u, 4));
    ASSERT_GE(lo.known(Var::u), std::min(K1, K2));
    for (int r = 0; r <= lo.known(Var::u); ++r) EXPECT_EQ(lo.coeff(Var::u, r), hi.coeff(Var::u, r));

    MultiSeries lo2 = series_shift(series_mul(*y, t_series(*y, i, j, Var::u, K1), t_series(*y, h, k, Var::v, K2)),
                                   Var::u, 1);
    MultiSeries hi2 = series_shift(series_mul(*y, t_series(*y, i, j, Var::u, 4), t_series(*y, h, k, Var::v, 4)),
                                   Var::u, 1);
    for (int r = 0; r <= lo2.known(Var::u); ++r)
      for (int s = 0; s <= lo2.known(Var::v); ++s) EXPECT_EQ(lo2.coeff({r, s, 0}), hi2.coeff({r, s, 0}));
  }
}

TEST(Series, AssociativeAndDistributive) {
  auto y = yangian({2, 1});
  const int K = 3;
  MultiSeries a = t_series(*y, 1, 3, Var::u, K), b = t_series(*y, 3, 2, Var::u, K), c = t_series(*y, 2, 1, Var::u, K);
  EXPECT_EQ(series_mul(*y, series_mul(*y, a, b), c), series_mul(*y, a, series_mul(*y, b, c)));
  EXPECT_EQ(series_mul(*y, a, b + c), series_mul(*y, a, b) + series_mul(*y, a, c));
}

}  // namespace
}  // namespace syk
