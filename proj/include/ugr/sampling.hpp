#pragma once

// Random L-dominant weights and the list of all varieties up to a rank, for
// property tests and the reproduction suite.

#include "ugr/grassmannian.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace ugr {

/// Every X = G/P_k with 2 ≤ n ≤ max_rank, all families and all nodes
/// (type D k = n-1 being the minus spinor component).
inline std::vector<IsotropicGrassmannian> all_varieties(int max_rank) {
  std::vector<IsotropicGrassmannian> out;
  for (LieFamily f : {LieFamily::B, LieFamily::C, LieFamily::D}) {
    for (int n = 2; n <= max_rank; ++n) {
      for (int k = 1; k <= n; ++k) out.emplace_back(f, n, k);
    }
  }
  return out;
}

namespace detail {

// m distinct doubled values of the given parity in [lo, hi], decreasing.
template <class Rng>
std::vector<std::int64_t> decreasing_chain(Rng& rng, std::int64_t lo, std::int64_t hi, int parity,
                                           int m) {
  std::vector<std::int64_t> pool;
  for (auto v = hi; v >= lo; --v) {
    if (((v % 2) + 2) % 2 == parity) pool.push_back(v);
  }
  if (static_cast<int>(pool.size()) < m) throw Error("decreasing_chain: range too small");
  std::vector<std::int64_t> out;
  std::sample(pool.begin(), pool.end(), std::back_inserter(out), m, rng);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace detail

/// A random L-dominant λ with every coordinate of λ+ρ in
/// [-bound, bound] (bound > 0, in ordinary units).
template <class Rng>
Weight random_l_dominant(const IsotropicGrassmannian& x, Rng& rng, std::int64_t bound) {
  const int n = x.rank();
  const int parity = x.family() == LieFamily::C ? 0 : static_cast<int>(rng() % 2);
  const std::int64_t lo = -2 * bound;
  const std::int64_t hi = 2 * bound;
  std::vector<std::int64_t> v;
  if (x.is_maximal()) {
    // Type D maximal: sample in the G/P_n chamber and reflect for G/P_{n-1}.
    v = detail::decreasing_chain(rng, lo, hi, parity, n);
    if (x.component() == SpinorComponent::minus) v.back() = -v.back();
  } else {
    v = detail::decreasing_chain(rng, lo, hi, parity, x.node());
    const int l = n - x.node();
    std::vector<std::int64_t> beta;
    if (x.family() == LieFamily::D) {
      beta = detail::decreasing_chain(rng, 0, hi, parity, l);
      if (beta.back() != 0 && rng() % 2) beta.back() = -beta.back();
    } else {
      beta = detail::decreasing_chain(rng, 1, hi, parity, l);
    }
    v.insert(v.end(), beta.begin(), beta.end());
  }
  return Weight(std::move(v)) - x.rho();
}

}  // namespace ugr
