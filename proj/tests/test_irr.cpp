#include "oracles.hpp"
#include "ugr/classification.hpp"
#include "ugr/irr.hpp"
#include "ugr/sampling.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace ugr;

namespace {

std::vector<std::int64_t> one_to(std::int64_t d) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(d));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

std::vector<std::int64_t> with_duplicates(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(IrrGeneric, Examples) {
  auto c = irr_generic({LieFamily::C, 2, 2}, Weight::integral({1, 0}));
  EXPECT_EQ(c.irr_values, one_to(3));
  EXPECT_TRUE(c.is_ulrich);

  c = irr_generic({LieFamily::C, 4, 2}, Weight::integral({5, 0, 0, 0}));
  EXPECT_EQ(c.irr_values, one_to(11));
  EXPECT_TRUE(c.is_ulrich);
  EXPECT_EQ(c.d, 11);

  c = irr_generic({LieFamily::C, 4, 2}, Weight::integral({0, 0, 0, 0}));
  EXPECT_FALSE(c.is_ulrich);
  // α = (4,3), β = (2,1): α±β, plus (α_i+α_j)/2 when integral
  EXPECT_EQ(c.irr_values, with_duplicates({6, 2, 5, 3, 5, 1, 4, 2, 4, 3}));
}

TEST(IrrGeneric, ContributionsNameTheirRoots) {
  const auto c = irr_generic(IsotropicGrassmannian::spinor(4, SpinorComponent::plus),
                             Weight::integral({1, 0, 0, 0}));
  ASSERT_EQ(c.contributions.size(), 6u);
  for (const auto& k : c.contributions) EXPECT_NE(k.source.find('+'), std::string::npos);
}

TEST(IrrClosed, Examples) {
  auto c = irr_closed({LieFamily::D, 5, 3}, Weight::integral({6, 5, 4, 4, 4}));
  EXPECT_EQ(c.irr_values, one_to(15));
  EXPECT_TRUE(c.is_ulrich);

  c = irr_closed(IsotropicGrassmannian::spinor(4, SpinorComponent::plus),
                 Weight::integral({1, 0, 0, 0}));
  EXPECT_EQ(c.irr_values, one_to(6));
  EXPECT_TRUE(c.is_ulrich);

  c = irr_closed({LieFamily::B, 2, 2}, Weight::integral({0, 0}));
  EXPECT_EQ(c.irr_values, one_to(3));
  EXPECT_TRUE(c.is_ulrich);
}

TEST(IrrClosed, PairLabels) {
  const auto c = irr_closed({LieFamily::C, 4, 2}, Weight::integral({5, 0, 0, 0}));
  std::vector<std::string> src;
  for (const auto& k : c.contributions) src.push_back(k.source);
  std::sort(src.begin(), src.end());
  EXPECT_EQ(src, (std::vector<std::string>{"(a1+a1)/2", "(a1+a2)/2", "(a2+a2)/2", "a1+b1", "a1+b2",
                                           "a1-b1", "a1-b2", "a2+b1", "a2+b2", "a2-b1", "a2-b2"}));
}

TEST(IsUlrich, Examples) {
  const IsotropicGrassmannian q6(LieFamily::D, 4, 1);
  EXPECT_TRUE(is_ulrich(q6, Weight::doubled_coords({1, 1, 1, 1})));
  EXPECT_TRUE(is_ulrich(q6, Weight::doubled_coords({1, 1, 1, -1})));
  EXPECT_FALSE(is_ulrich({LieFamily::C, 5, 3}, Weight::integral({3, 2, 1, 0, 0})));
  EXPECT_FALSE(is_ulrich({LieFamily::C, 4, 2}, Weight::integral({4, 1, 0, 0})));
  EXPECT_THROW(is_ulrich({LieFamily::C, 4, 2}, Weight::integral({0, 1, 0, 0})), InvalidWeight);
}

TEST(Irr, GenericAndClosedAgree) {
  std::mt19937_64 rng(101);
  const auto varieties = all_varieties(6);
  for (int s = 0; s < 4000; ++s) {
    const auto& x = varieties[rng() % varieties.size()];
    const Weight lambda = random_l_dominant(x, rng, 2 * dimension(x));
    const auto g = irr_generic(x, lambda);
    const auto c = irr_closed(x, lambda);
    ASSERT_EQ(g.irr_values, c.irr_values) << family_letter(x.family()) << x.rank() << ","
                                          << x.node() << " " << lambda.str();
    EXPECT_EQ(g.is_ulrich, c.is_ulrich);
  }
}

TEST(Irr, AtMostDDistinctValues) {
  std::mt19937_64 rng(103);
  for (const auto& x : all_varieties(6)) {
    for (int s = 0; s < 100; ++s) {
      const auto c = irr_generic(x, random_l_dominant(x, rng, 2 * dimension(x)));
      EXPECT_LE(static_cast<std::int64_t>(c.distinct_count()), c.d);
      EXPECT_LE(static_cast<std::int64_t>(c.irr_values.size()), c.d);
    }
  }
}

TEST(IsUlrich, AgreesWithWallCount) {
  std::mt19937_64 rng(107);
  for (const auto& x : all_varieties(5)) {
    for (int s = 0; s < 200; ++s) {
      const Weight lambda = random_l_dominant(x, rng, dimension(x));
      EXPECT_EQ(is_ulrich(x, lambda), oracle::ulrich_by_walls(x, lambda.doubled())) << lambda.str();
    }
    for (const auto& w : classify(x)) EXPECT_TRUE(oracle::ulrich_by_walls(x, w.doubled()));
  }
}

TEST(IsUlrich, DSignSymmetry) {
  std::mt19937_64 rng(109);
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      const IsotropicGrassmannian x(LieFamily::D, n, k);
      std::vector<Weight> sample = classify(x);
      for (int s = 0; s < 200; ++s) sample.push_back(random_l_dominant(x, rng, dimension(x)));
      for (const auto& w : sample) {
        EXPECT_EQ(is_ulrich(x, w), is_ulrich(x, w.with_last_negated())) << w.str();
        if (w.doubled(n - 1) == 0) {
          EXPECT_FALSE(is_ulrich(x, w)) << w.str();
        }
      }
    }
  }
}

TEST(IsUlrich, DLastCoordinateZeroNeverUlrich) {
  // no Ulrich weight anywhere in the box has λ_n = 0
  for (int n = 3; n <= 4; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      const IsotropicGrassmannian x(LieFamily::D, n, k);
      for (const auto& w : oracle::naive_ulrich(x, dimension(x))) EXPECT_NE(w.doubled(n - 1), 0);
    }
  }
}

TEST(IsUlrich, CTypeParityAndEndpoints) {
  for (int n = 3; n <= 12; ++n) {
    for (int k = 2; k < n; ++k) {
      const IsotropicGrassmannian x(LieFamily::C, n, k);
      for (const auto& w : classify(x)) {
        EXPECT_EQ(dimension(x) % 2, 1);
        const auto ab = alpha_beta(x, w);
        EXPECT_EQ((ab.alpha.front() + ab.beta.front()).doubled(), 2 * dimension(x));
        EXPECT_EQ((ab.alpha.back() - ab.beta.front()).doubled(), 2);
      }
    }
  }
}

TEST(IsUlrich, BToCShift) {
  std::mt19937_64 rng(113);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const IsotropicGrassmannian xb(LieFamily::B, n, k), xc(LieFamily::C, n, k);
      std::vector<Weight> sample = classify(xc);
      for (int s = 0; s < 200; ++s) {
        const Weight w = random_l_dominant(xc, rng, dimension(xc));
        if (is_L_dominant(xb, w.shifted_by_halves(1))) sample.push_back(w);
      }
      for (const auto& w : sample) {
        EXPECT_EQ(is_ulrich(xc, w), is_ulrich(xb, w.shifted_by_halves(1))) << w.str();
      }
    }
  }
}
