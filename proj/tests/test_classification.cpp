#include "oracles.hpp"
#include "ugr/classification.hpp"
#include "ugr/enumeration.hpp"
#include "ugr/irr.hpp"
#include "ugr/sampling.hpp"

#include <gtest/gtest.h>

using namespace ugr;

namespace {

using W = std::vector<Weight>;

Weight halves(std::initializer_list<std::int64_t> twice) { return Weight::doubled_coords(twice); }

int odd_divisors(int m) {
  int c = 0;
  for (int p = 1; p <= m; p += 2) c += m % p == 0 ? 1 : 0;
  return c;
}

}  // namespace

TEST(Igr2, Examples) {
  EXPECT_EQ(ulrich_weights_igr2(4), (W{Weight::integral({5, 0, 0, 0}), Weight::integral({3, 2, 2, 2})}));
  EXPECT_EQ(ulrich_weights_igr2(10), (W{Weight::integral({17, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                                        Weight::integral({11, 6, 6, 6, 6, 6, 6, 6, 0, 0}),
                                        Weight::integral({9, 8, 8, 8, 6, 6, 4, 4, 2, 2})}));
  EXPECT_EQ(ulrich_weights_igr2(5), (W{Weight::integral({7, 0, 0, 0, 0})}));
  EXPECT_EQ(ulrich_weights_igr2(2), (W{Weight::integral({1, 0})}));
}

TEST(Igr2, Params) {
  const auto ps = igr2_params(10);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0], (ClassificationParams{HalfInt::from_int(9), 0}));
  EXPECT_EQ(ps[1], (ClassificationParams{HalfInt::from_int(3), 1}));
  EXPECT_EQ(ps[2], (ClassificationParams{HalfInt::from_int(1), 4}));
}

TEST(Igr2, CountIsOddDivisorsOfNMinusOne) {
  for (int n = 2; n <= 40; ++n) {
    EXPECT_EQ(static_cast<int>(ulrich_weights_igr2(n).size()), odd_divisors(n - 1)) << n;
  }
}

// When n-1 is a power of two only the p = n-1 weight survives.
TEST(Igr2, PowersOfTwoHaveOneWeight) {
  for (int r = 1; r <= 5; ++r) EXPECT_EQ(ulrich_weights_igr2((1 << r) + 1).size(), 1u);
}

TEST(Ogr2Odd, Examples) {
  EXPECT_EQ(ulrich_weights_ogr2_odd(4), (W{halves({11, 1, 1, 1}), halves({7, 5, 5, 5})}));
  EXPECT_EQ(ulrich_weights_ogr2_odd(2), (W{halves({3, 1})}));
  EXPECT_EQ(ulrich_weights_ogr2_odd(5), (W{halves({15, 1, 1, 1, 1})}));
}

TEST(Ogr2Odd, IsShiftOfIgr2) {
  for (int n = 2; n <= 20; ++n) {
    W shifted;
    for (const auto& w : ulrich_weights_igr2(n)) shifted.push_back(w.shifted_by_halves(1));
    EXPECT_EQ(ulrich_weights_ogr2_odd(n), shifted);
  }
}

TEST(Quadric, Examples) {
  EXPECT_EQ(ulrich_weights_quadric(LieFamily::B, 3), (W{halves({1, 1, 1})}));
  EXPECT_EQ(ulrich_weights_quadric(LieFamily::D, 4), (W{halves({1, 1, 1, 1}), halves({1, 1, 1, -1})}));
  EXPECT_EQ(ulrich_weights_quadric(LieFamily::D, 2), (W{halves({1, 1}), halves({1, -1})}));
  EXPECT_THROW(ulrich_weights_quadric(LieFamily::C, 3), InvalidRank);
}

TEST(Ogr2Even, Examples) {
  const auto w5 = ulrich_weights_ogr2_even(5);
  EXPECT_NE(std::find(w5.begin(), w5.end(), halves({13, 1, 1, 1, 1})), w5.end());
  EXPECT_NE(std::find(w5.begin(), w5.end(), halves({13, 1, 1, 1, -1})), w5.end());
  EXPECT_NE(std::find(w5.begin(), w5.end(), halves({7, 7, 7, 5, 3})), w5.end());
  EXPECT_NE(std::find(w5.begin(), w5.end(), halves({7, 7, 7, 5, -3})), w5.end());
  for (int n = 4; n <= 30; ++n) EXPECT_GE(ulrich_weights_ogr2_even(n).size(), 4u) << n;
  EXPECT_THROW(ulrich_weights_ogr2_even(3), InvalidRank);
}

TEST(Ogr2Even, Params) {
  for (int n = 4; n <= 30; ++n) {
    for (const auto& [p, q] : ogr2_even_params(n)) {
      EXPECT_FALSE(p.is_integer());
      // n-2 = p(2q+1) - 1/2, doubled
      EXPECT_EQ(2 * (n - 2), p.doubled() * (2 * q + 1) - 1);
    }
  }
}

TEST(Ogr2Even, PositiveRepresentativeFirst) {
  for (int n = 4; n <= 12; ++n) {
    const auto ws = classify({LieFamily::D, n, 2});
    ASSERT_EQ(ws.size() % 2, 0u);
    for (std::size_t i = 0; i < ws.size(); i += 2) {
      EXPECT_GT(ws[i].doubled(n - 1), 0);
      EXPECT_EQ(ws[i + 1], ws[i].with_last_negated());
    }
  }
}

TEST(Ogr2EvenExtra, Values) {
  EXPECT_EQ(ulrich_weights_ogr2_even_extra(4), (W{Weight::integral({3, 2, 2, 2}), Weight::integral({3, 2, 2, -2})}));
  EXPECT_EQ(ulrich_weights_ogr2_even_extra(5), (W{halves({9, 5, 5, 5, 5}), halves({9, 5, 5, 5, -5})}));
  EXPECT_EQ(ulrich_weights_ogr2_even_extra(6),
            (W{Weight::integral({6, 3, 3, 3, 3, 3}), Weight::integral({6, 3, 3, 3, 3, -3}),
               Weight::integral({5, 4, 4, 4, 2, 2}), Weight::integral({5, 4, 4, 4, 2, -2})}));
  EXPECT_EQ(ulrich_weights_ogr2_even_extra(8).size(), 6u);
}

TEST(Ogr2EvenExtra, DisjointFromPublishedAndUlrich) {
  for (int n = 4; n <= 16; ++n) {
    const IsotropicGrassmannian x(LieFamily::D, n, 2);
    const auto published = ulrich_weights_ogr2_even(n);
    for (const auto& w : ulrich_weights_ogr2_even_extra(n)) {
      EXPECT_EQ(std::find(published.begin(), published.end(), w), published.end()) << w.str();
      EXPECT_TRUE(is_ulrich(x, w)) << w.str();
      EXPECT_TRUE(irr_closed(x, w).is_ulrich) << w.str();
    }
  }
}

TEST(Ogr3Even, Examples) {
  EXPECT_EQ(ulrich_weights_ogr3_even(5), (W{Weight::integral({6, 5, 4, 4, 4}), Weight::integral({6, 5, 4, 4, -4})}));
  EXPECT_TRUE(ulrich_weights_ogr3_even(6).empty());
  const W seven{Weight::integral({10, 9, 8, 8, 8, 4, 4}), Weight::integral({10, 9, 8, 8, 8, 4, -4})};
  EXPECT_EQ(ulrich_weights_ogr3_even(7), seven);
  const IsotropicGrassmannian x(LieFamily::D, 7, 3);
  EXPECT_EQ(dimension(x), 27);
  for (const auto& w : seven) EXPECT_TRUE(oracle::ulrich_by_walls(x, w.doubled()));
  EXPECT_THROW(ulrich_weights_ogr3_even(4), InvalidRank);
}

TEST(Maximal, Examples) {
  EXPECT_EQ(ulrich_weights_maximal(LieFamily::C, 2), (W{Weight::integral({1, 0})}));
  EXPECT_TRUE(ulrich_weights_maximal(LieFamily::C, 5).empty());
  EXPECT_EQ(ulrich_weights_maximal(LieFamily::D, 4), (W{Weight::integral({1, 0, 0, 0})}));
  EXPECT_EQ(ulrich_weights_maximal(LieFamily::B, 2), (W{Weight::zero(2)}));
  EXPECT_EQ(ulrich_weights_maximal(LieFamily::D, 3), (W{Weight::zero(3)}));
  EXPECT_TRUE(ulrich_weights_maximal(LieFamily::D, 5).empty());
  EXPECT_EQ(ulrich_weights_maximal(LieFamily::D, 4, SpinorComponent::minus),
            (W{Weight::integral({1, 0, 0, 0})}));
}

TEST(Maximal, Ogr48HasTwoWeightsPerComponent) {
  EXPECT_EQ(ulrich_weights_maximal_extra(LieFamily::D, 4), (W{halves({1, 1, 1, -1})}));
  EXPECT_EQ(ulrich_weights_maximal_extra(LieFamily::D, 4, SpinorComponent::minus), (W{halves({1, 1, 1, 1})}));
  EXPECT_TRUE(ulrich_weights_maximal_extra(LieFamily::D, 5).empty());
  EXPECT_TRUE(ulrich_weights_maximal_extra(LieFamily::C, 4).empty());
  const auto plus = IsotropicGrassmannian::spinor(4, SpinorComponent::plus);
  EXPECT_EQ(classify(plus), (W{Weight::integral({1, 0, 0, 0}), halves({1, 1, 1, -1})}));
  EXPECT_EQ(classify(plus, Catalogue::published), (W{Weight::integral({1, 0, 0, 0})}));
}

TEST(LgrForcedAlpha, Examples) {
  EXPECT_EQ(lgr_forced_alpha(2), (std::vector<std::int64_t>{1, 3}));
  EXPECT_EQ(lgr_forced_alpha(4), (std::vector<std::int64_t>{1, 3, 7, 11}));
  EXPECT_EQ(lgr_forced_alpha(1), (std::vector<std::int64_t>{1}));
  EXPECT_THROW(lgr_forced_alpha(0), InvalidRank);
}

TEST(LgrForcedAlpha, FourIMinusFive) {
  const auto diag = lgr_forced_alpha(50);
  for (int i = 2; i <= 50; ++i) EXPECT_EQ(diag[i - 1], 4 * i - 5);
  std::vector<int> hits;
  for (int n = 1; n <= 50; ++n) {
    if (4 * n - 5 == n * (n + 1) / 2) hits.push_back(n);
  }
  EXPECT_EQ(hits, (std::vector<int>{2, 5}));
}

TEST(Classify, Examples) {
  EXPECT_TRUE(classify({LieFamily::C, 6, 3}).empty());
  EXPECT_EQ(classify({LieFamily::B, 4, 2}), ulrich_weights_ogr2_odd(4));
  EXPECT_TRUE(classify(IsotropicGrassmannian::spinor(5, SpinorComponent::plus)).empty());
  EXPECT_EQ(classify({LieFamily::C, 4, 1}), (W{Weight::zero(4)}));
  EXPECT_EQ(classify({LieFamily::B, 2, 2}), (W{Weight::zero(2)}));
  EXPECT_TRUE(classify({LieFamily::D, 8, 4}).empty());
  EXPECT_TRUE(classify({LieFamily::B, 6, 3}).empty());
}

TEST(Classify, CanonicalOrder) {
  for (const auto& x : all_varieties(9)) {
    const auto ws = classify(x);
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end(), std::greater<>()));
    EXPECT_EQ(std::adjacent_find(ws.begin(), ws.end()), ws.end());
  }
}

TEST(Classify, PublishedCatalogueDiffersOnlyOnOgr2AndOgr48) {
  for (const auto& x : all_varieties(9)) {
    const auto all = classify(x);
    const auto pub = classify(x, Catalogue::published);
    const bool differs = x.family() == LieFamily::D &&
                         ((x.node() == 2 && !x.is_maximal() && x.rank() >= 4) ||
                          (x.is_maximal() && x.rank() == 4));
    EXPECT_EQ(all != pub, differs) << family_letter(x.family()) << x.rank() << "," << x.node();
    for (const auto& w : pub) EXPECT_NE(std::find(all.begin(), all.end(), w), all.end());
  }
}

TEST(Classify, SoundUpToRankEight) {
  for (const auto& x : all_varieties(8)) {
    for (const auto& w : classify(x)) {
      EXPECT_TRUE(is_L_dominant(x, w)) << w.str();
      EXPECT_TRUE(is_ulrich(x, w)) << family_letter(x.family()) << x.rank() << "," << x.node()
                                   << " " << w.str();
    }
  }
}

TEST(Classify, CompleteUpToRankSix) {
  for (const auto& x : all_varieties(6)) {
    EXPECT_EQ(classify(x), enumerate_ulrich(x))
        << family_letter(x.family()) << x.rank() << "," << x.node();
  }
}
