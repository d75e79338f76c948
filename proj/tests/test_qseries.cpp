#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "skewrpp/errors.hpp"
#include "skewrpp/qeuler.hpp"
#include "skewrpp/qseries.hpp"

using namespace skewrpp;

namespace {

QSeries poly(std::size_t d, std::initializer_list<long> c) { return QSeries::from_polynomial(d, c); }

QSeries random_series(std::mt19937& rng, std::size_t d, bool unit) {
  std::uniform_int_distribution<long> dist(-5, 5);
  std::vector<BigInt> c(d + 1);
  for (auto& x : c) x = dist(rng);
  if (unit) c[0] = (rng() % 2) ? 1 : -1;
  return QSeries(d, std::move(c));
}

}  // namespace

TEST(QSeries, LengthIsTruncationPlusOne) {
  EXPECT_EQ(QSeries(4).coeffs().size(), 5u);
  EXPECT_THROW(QSeries(2, std::vector<BigInt>(2)), UsageError);
  EXPECT_EQ(poly(1, {1, 2, 3}), poly(1, {1, 2}));
}

TEST(QSeries, Add) {
  EXPECT_EQ(add(poly(1, {1, 1}), poly(1, {1, -1})), poly(1, {2}));
  const QSeries x = poly(3, {4, -1, 0, 7});
  EXPECT_EQ(x + QSeries(3), x);
  EXPECT_EQ(poly(2, {1, 2, 3}) + poly(2, {0, 0, 2}), poly(2, {1, 2, 5}));
}

TEST(QSeries, MismatchedTruncationIsRejected) {
  EXPECT_THROW(poly(1, {1}) + poly(2, {1}), UsageError);
  EXPECT_THROW(mul(poly(1, {1}), poly(2, {1})), UsageError);
}

TEST(QSeries, Mul) {
  EXPECT_EQ(mul(poly(2, {1, 1}), poly(2, {1, 1})), poly(2, {1, 2, 1}));
  const QSeries x = poly(3, {2, 0, -3, 1});
  EXPECT_EQ(x * QSeries::one(3), x);
  EXPECT_EQ(poly(3, {1, 1}) * poly(3, {1, 1, 1, 1}), poly(3, {1, 2, 2, 2}));
}

TEST(QSeries, MulIsCommutativeAndAssociative) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const QSeries a = random_series(rng, 6, false);
    const QSeries b = random_series(rng, 6, false);
    const QSeries c = random_series(rng, 6, false);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(QSeries, InverseOfUnit) {
  EXPECT_EQ(inv_unit(poly(3, {1, -1})), poly(3, {1, 1, 1, 1}));
  EXPECT_EQ(inv_unit(QSeries::one(4)), QSeries::one(4));
  EXPECT_EQ(inv_unit(poly(5, {1, 0, -1})), poly(5, {1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(geometric(5, 2), poly(5, {1, 0, 1, 0, 1, 0}));
  EXPECT_THROW(inv_unit(poly(2, {2, 1})), DomainError);
  EXPECT_THROW(inv_unit(poly(2, {0, 1})), DomainError);
}

TEST(QSeries, InverseTimesSeriesIsOne) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const QSeries a = random_series(rng, 8, true);
    EXPECT_EQ(a * inv_unit(a), QSeries::one(8));
  }
}

TEST(QSeries, ShiftAndTruncate) {
  EXPECT_EQ(poly(3, {1, 2, 3, 4}).shifted(2), poly(3, {0, 0, 1, 2}));
  EXPECT_EQ(poly(3, {1, 2, 3, 4}).truncated(1), poly(1, {1, 2}));
  EXPECT_EQ(poly(1, {1, 2}).truncated(3), poly(3, {1, 2}));
  EXPECT_EQ(poly(4, {0, 0, 3}).lowest_nonzero(), std::optional<std::size_t>(2));
  EXPECT_FALSE(QSeries(4).lowest_nonzero().has_value());
}

TEST(Determinant, SmallCases) {
  const QSeries x = poly(3, {1, 2, 0, 5});
  EXPECT_EQ(det({{x}}), x);
  EXPECT_EQ(det({{QSeries::one(3), QSeries(3)}, {QSeries(3), QSeries::one(3)}}), QSeries::one(3));
  EXPECT_THROW(det({}), UsageError);
  EXPECT_THROW(det({{x, x}}), UsageError);
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937 rng(3);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      SeriesMatrix m(k);
      for (auto& row : m) {
        for (std::size_t c = 0; c < k; ++c) row.push_back(random_series(rng, 5, false));
      }
      EXPECT_EQ(det(m), oracle::cofactor_det(m));
    }
  }
}

TEST(Determinant, RepeatedRowIsZero) {
  std::mt19937 rng(5);
  SeriesMatrix m(3);
  for (auto& row : m) {
    for (int c = 0; c < 3; ++c) row.push_back(random_series(rng, 6, false));
  }
  m[2] = m[0];
  EXPECT_TRUE(det(m).is_zero());
}

TEST(Determinant, StaircaseTwoByTwoStartsAtSeven) {
  const QSeries d = det({{estar_tilde(3, 12), estar_tilde(5, 12)}, {estar_tilde(5, 12), estar_tilde(7, 12)}});
  for (std::size_t p = 0; p < 7; ++p) EXPECT_EQ(d[p], 0) << "q^" << p;
  EXPECT_EQ(d[7], 1);
}

TEST(QSeriesText, Formats) {
  EXPECT_EQ(to_text(poly(4, {1, 2, 3, 5, 7})), "1 2 3 5 7");
  EXPECT_EQ(to_text(poly(2, {0, -1})), "0 -1 0");
}

TEST(QSeriesJson, RoundTripIsExact) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    QSeries a = random_series(rng, 7, false);
    a *= BigInt("123456789012345678901234567890");
    const std::string text = to_json(a);
    EXPECT_EQ(from_json(text), a);
    EXPECT_EQ(to_json(from_json(text)), text);
  }
  EXPECT_EQ(to_json(poly(2, {1, 0, -3})), R"({"truncation":2,"coeffs":["1","0","-3"]})");
}

TEST(QSeriesJson, RejectsMalformedInput) {
  EXPECT_THROW(from_json("not json"), ValidationError);
  EXPECT_THROW(from_json(R"({"truncation":2,"coeffs":["1"]})"), ValidationError);
  EXPECT_THROW(from_json(R"({"truncation":0,"coeffs":["x"]})"), ValidationError);
  EXPECT_THROW(from_json(R"({"coeffs":["1"]})"), ValidationError);
}
