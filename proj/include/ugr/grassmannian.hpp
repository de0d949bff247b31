#pragma once

// The isotropic Grassmannian X = G/P_k for a maximal parabolic P_k.

#include "ugr/root_system.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ugr {

/// Which connected component of OGr(n,2n) a type D maximal Grassmannian is.
/// plus is G/P_n, minus is G/P_{n-1}.
enum class SpinorComponent { none, plus, minus };

class IsotropicGrassmannian {
 public:
  /// Type D with k = n-1 is the minus spinor component.
  IsotropicGrassmannian(LieFamily family, int n, int k) : family_(family), n_(n), k_(k) {
    check_rank(family, n);
    if (k < 1 || k > n) {
      throw InvalidRank("node k=" + std::to_string(k) + " out of range 1.." + std::to_string(n));
    }
  }

  static IsotropicGrassmannian spinor(int n, SpinorComponent c) {
    if (c == SpinorComponent::none) throw InvalidRank("spinor component must be plus or minus");
    return {LieFamily::D, n, c == SpinorComponent::plus ? n : n - 1};
  }

  LieFamily family() const { return family_; }
  int rank() const { return n_; }
  int node() const { return k_; }

  bool is_maximal() const {
    return family_ == LieFamily::D ? k_ >= n_ - 1 : k_ == n_;
  }
  SpinorComponent component() const {
    if (family_ != LieFamily::D || k_ < n_ - 1) return SpinorComponent::none;
    return k_ == n_ ? SpinorComponent::plus : SpinorComponent::minus;
  }
  // Size of the α block of λ+ρ; the maximal cases have no β.
  int alpha_size() const { return is_maximal() ? n_ : k_; }

  Weight rho() const { return ugr::rho(family_, n_); }
  Weight omega() const { return fundamental_weight(family_, n_, k_); }

  bool operator==(const IsotropicGrassmannian&) const = default;

 private:
  LieFamily family_;
  int n_;
  int k_;
};

inline std::int64_t dimension(const IsotropicGrassmannian& x) {
  const std::int64_t n = x.rank();
  const std::int64_t k = x.node();
  switch (x.family()) {
    case LieFamily::C: return k * (2 * n - k) - k * (k - 1) / 2;
    // Agrees with type C for every k, as the ½-shift correspondence requires.
    case LieFamily::B: return k * (2 * n + 1 - k) - k * (k + 1) / 2;
    case LieFamily::D:
      if (x.is_maximal()) return n * (n - 1) / 2;
      return k * (2 * n - k) - k * (k + 1) / 2;
  }
  return 0;
}

/// λ is L-dominant iff it pairs nonnegatively with every simple root other than ε_k.
inline bool is_L_dominant(const IsotropicGrassmannian& x, const Weight& lambda) {
  check_lattice(x.family(), x.rank(), lambda);
  const auto simple = simple_roots(x.family(), x.rank());
  for (int i = 0; i < x.rank(); ++i) {
    if (i + 1 == x.node()) continue;
    if (inner(lambda, simple[i]).doubled() < 0) return false;
  }
  return true;
}

inline void require_L_dominant(const IsotropicGrassmannian& x, const Weight& lambda) {
  if (!is_L_dominant(x, lambda)) {
    throw InvalidWeight("weight " + lambda.str() + " is not L-dominant for the chosen variety");
  }
}

/// (α_1..α_k, β_1..β_{n-k}) = λ+ρ. Maximal varieties put everything into α.
struct AlphaBeta {
  std::vector<HalfInt> alpha;
  std::vector<HalfInt> beta;

  Weight joined() const {
    std::vector<HalfInt> all = alpha;
    all.insert(all.end(), beta.begin(), beta.end());
    return Weight::from_halves(all);
  }
};

inline AlphaBeta alpha_beta(const IsotropicGrassmannian& x, const Weight& lambda) {
  require_L_dominant(x, lambda);
  const Weight shifted = lambda + x.rho();
  AlphaBeta ab;
  for (int i = 0; i < x.rank(); ++i) {
    (i < x.alpha_size() ? ab.alpha : ab.beta).push_back(shifted[i]);
  }
  return ab;
}

}  // namespace ugr
