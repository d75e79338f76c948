#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "skewrpp/alt_word.hpp"
#include "skewrpp/errors.hpp"
#include "skewrpp/tableaux.hpp"

using namespace skewrpp;

namespace {

QSeries poly(std::size_t d, std::initializer_list<long> c) { return QSeries::from_polynomial(d, c); }

SkewShape skew(std::vector<int> outer, std::vector<int> inner = {}) {
  return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

Filling sample_ribbon() {
  return Filling(SkewShape(staircase(5), staircase(3)),
                 {{{1, 3}, 1}, {{1, 4}, 1}, {{2, 2}, 2}, {{2, 3}, 2}, {{3, 1}, 2}, {{3, 2}, 6}, {{4, 1}, 2}});
}

}  // namespace

TEST(AltWord, Alternation) {
  EXPECT_TRUE(is_alternating(std::vector<int>{2, 2, 6, 2, 2, 1, 1}));
  EXPECT_TRUE(is_alternating(std::vector<int>{}));
  EXPECT_TRUE(is_alternating(std::vector<int>{0}));
  EXPECT_FALSE(is_alternating(std::vector<int>{1, 2}));
  EXPECT_FALSE(is_alternating(std::vector<int>{2, 1, 0}));
  EXPECT_FALSE(is_alternating(std::vector<int>{-1}));
  EXPECT_THROW(AltWord({0, 1}), ValidationError);
  EXPECT_EQ(AltWord({3, 1, 4}).weight(), 8);
}

TEST(AltWord, EnumerationMatchesTransferCount) {
  for (std::size_t len : {1u, 2u, 3u, 5u, 7u}) {
    const std::size_t d = 8;
    std::vector<BigInt> c(d + 1);
    std::vector<int> prev;
    bool sorted = true;
    for_each_alt_word(len, static_cast<long>(d), [&](std::span<const int> w) {
      std::vector<int> cur(w.begin(), w.end());
      EXPECT_TRUE(is_alternating(cur));
      if (!prev.empty() && !(prev < cur)) sorted = false;
      prev = cur;
      long s = 0;
      for (int x : w) s += x;
      c[static_cast<std::size_t>(s)] += 1;
    });
    EXPECT_TRUE(sorted);
    EXPECT_EQ(QSeries(d, c), oracle::alt_word_series(len, d)) << "length " << len;
  }
}

TEST(Filling, Validation) {
  const SkewShape s = skew({2, 1}, {1});
  EXPECT_THROW(Filling(s, {{{1, 2}, 0}}), ValidationError);
  EXPECT_THROW(Filling(s, {{{1, 2}, 0}, {{2, 1}, -1}}), ValidationError);
  EXPECT_THROW(Filling(s, {{{1, 1}, 0}, {{1, 2}, 0}, {{2, 1}, 0}}), ValidationError);
  const Filling f(s, {{{1, 2}, 2}, {{2, 1}, 1}});
  EXPECT_TRUE(f.is_rpp());
  EXPECT_TRUE(f.is_ssyt());
  EXPECT_TRUE(f.is_syt());
  EXPECT_EQ(f.weight(), 3);
}

TEST(Filling, Modes) {
  const SkewShape s = skew({2, 2});
  const Filling rpp_only(s, {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 2}});
  EXPECT_TRUE(rpp_only.is_rpp());
  EXPECT_FALSE(rpp_only.is_ssyt());
  const Filling zero(s, {{{1, 1}, 0}, {{1, 2}, 0}, {{2, 1}, 0}, {{2, 2}, 0}});
  EXPECT_TRUE(zero.is_rpp());
  EXPECT_FALSE(zero.is_ssyt());
  const Filling syt(s, {{{1, 1}, 1}, {{1, 2}, 2}, {{2, 1}, 3}, {{2, 2}, 4}});
  EXPECT_TRUE(syt.is_syt());
  const Filling bad(s, {{{1, 1}, 2}, {{1, 2}, 1}, {{2, 1}, 3}, {{2, 2}, 4}});
  EXPECT_FALSE(bad.is_rpp());
  EXPECT_FALSE(bad.is_syt());
}

TEST(CountSyt, HookFormulaValues) {
  EXPECT_EQ(count_syt_hook(Partition({1})), 1);
  EXPECT_EQ(count_syt_hook(Partition({2, 1})), 2);
  EXPECT_EQ(count_syt_hook(Partition({2, 2})), 2);
  EXPECT_EQ(count_syt_hook(Partition({5, 4, 4, 2})), oracle::linear_extensions(Partition({5, 4, 4, 2}), Partition()));
}

TEST(CountSyt, BruteValues) {
  EXPECT_EQ(count_syt_brute(skew({2, 1}, {1})), 2);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(count_syt_brute(skew({n})), 1);
  EXPECT_EQ(count_syt_brute(skew({2, 2}, {1})), 2);
  EXPECT_EQ(count_syt_brute(skew({})), 1);
  EXPECT_THROW(count_syt_brute(skew({6, 5})), ResourceError);
}

TEST(CountSyt, BruteMatchesSubsetDp) {
  for (int n = 0; n <= 7; ++n) {
    for (const Partition& outer : partitions_of(n)) {
      for (const Partition& inner : partitions_inside(outer)) {
        EXPECT_EQ(count_syt_brute(SkewShape(outer, inner)), oracle::linear_extensions(outer, inner));
      }
    }
  }
}

TEST(RppSeries, Values) {
  EXPECT_EQ(rpp_gf_brute(skew({2, 1}), 4), poly(4, {1, 2, 3, 5, 7}));
  EXPECT_EQ(rpp_gf_brute(SkewShape(staircase(3), staircase(1)), 2), poly(2, {1, 2, 3}));
  EXPECT_EQ(rpp_gf_brute(skew({}), 3), poly(3, {1}));
}

TEST(SsytSeries, Values) {
  EXPECT_EQ(ssyt_gf_brute(skew({1}), 3), poly(3, {0, 1, 1, 1}));
  EXPECT_EQ(ssyt_gf_brute(skew({1, 1}), 3), poly(3, {0, 0, 0, 1}));
  EXPECT_EQ(ssyt_gf_brute(skew({2}), 3), poly(3, {0, 0, 1, 1}));
}

TEST(FillingSeries, MatchOdometerOracle) {
  for (int n = 0; n <= 4; ++n) {
    for (const Partition& outer : partitions_of(n)) {
      for (const Partition& inner : partitions_inside(outer)) {
        const SkewShape s(outer, inner);
        EXPECT_EQ(rpp_gf_brute(s, 6), oracle::rpp_series(outer, inner, 6));
        EXPECT_EQ(ssyt_gf_brute(s, 7), oracle::ssyt_series(outer, inner, 7));
      }
    }
  }
}

TEST(FillingSeries, ConstantTermOfRppIsOne) {
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& outer : partitions_of(n)) EXPECT_EQ(rpp_gf_brute(SkewShape(outer, {}), 2)[0], 1);
  }
}

TEST(ForEachRpp, AgreesWithSeries) {
  const SkewShape s(staircase(5), staircase(1));
  std::vector<BigInt> c(6);
  std::set<std::map<Cell, int>> seen;
  for_each_rpp(s, 5, [&](const Filling& f) {
    EXPECT_TRUE(f.is_rpp());
    EXPECT_TRUE(seen.insert(f.entries()).second);
    c[static_cast<std::size_t>(f.weight())] += 1;
  });
  EXPECT_EQ(QSeries(5, c), rpp_gf_brute(s, 5));
}

TEST(Ribbon, CellsInReadingOrder) {
  EXPECT_EQ(ribbon_cells(3), (std::vector<Cell>{{2, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(ribbon_cells(5),
            (std::vector<Cell>{{4, 1}, {3, 1}, {3, 2}, {2, 2}, {2, 3}, {1, 3}, {1, 4}}));
}

TEST(Ribbon, SampleRibbonWord) {
  const Filling f = sample_ribbon();
  ASSERT_TRUE(f.is_rpp());
  EXPECT_EQ(ribbon_to_word(f), AltWord({2, 2, 6, 2, 2, 1, 1}));
  EXPECT_EQ(word_to_ribbon(AltWord({2, 2, 6, 2, 2, 1, 1})), f);
}

TEST(Ribbon, ZeroFillingGivesZeroWord) {
  std::map<Cell, int> zero;
  for (const Cell& c : skew_cells(SkewShape(staircase(6), staircase(4)))) zero[c] = 0;
  EXPECT_EQ(ribbon_to_word(Filling(SkewShape(staircase(6), staircase(4)), zero)), AltWord(std::vector<int>(9, 0)));
}

TEST(Ribbon, RoundTripOverSmallRpps) {
  const SkewShape s(staircase(4), staircase(2));
  long visited = 0;
  for_each_rpp(s, 4, [&](const Filling& f) {
    ++visited;
    const AltWord w = ribbon_to_word(f);
    EXPECT_EQ(w.weight(), f.weight());
    EXPECT_EQ(word_to_ribbon(w), f);
  });
  EXPECT_GT(visited, 0);
}

TEST(Ribbon, RejectsOtherShapes) {
  const SkewShape s = skew({2, 2});
  EXPECT_THROW(ribbon_to_word(Filling(s, {{{1, 1}, 0}, {{1, 2}, 0}, {{2, 1}, 0}, {{2, 2}, 0}})), DomainError);
  EXPECT_NO_THROW(ribbon_to_word(Filling(skew({2, 1}), {{{1, 1}, 0}, {{1, 2}, 0}, {{2, 1}, 0}})));
  EXPECT_THROW(word_to_ribbon(AltWord({1, 0})), DomainError);
  EXPECT_THROW(word_to_ribbon(AltWord({1})), DomainError);
}
