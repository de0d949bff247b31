#pragma once

// Borel–Bott–Weil cohomology of irreducible equivariant bundles U^λ on G/P_k,
// together with the Weyl dimension formula and the numerical invariants of X
// that follow from it (bundle rank, Hilbert function, degree).

#include "ugr/grassmannian.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ugr {

struct NonZeroCohomology {
  int degree = 0;
  Weight highest_weight;
  BigInt dim;
};

/// Either H^•(X, U^λ) = 0, or the single nonvanishing group.
struct CohomologyResult {
  std::optional<NonZeroCohomology> group;

  bool vanishes() const { return !group.has_value(); }
};

namespace detail {

// ∏ (μ+ρ, α) / ∏ (ρ, α) over the given roots; both sides doubled, so the
// factors of two cancel.
inline BigInt dimension_product(const Weight& mu_plus_rho, const Weight& rho,
                                const std::vector<Root>& roots) {
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& r : roots) {
    num *= inner(mu_plus_rho, r).doubled();
    den *= inner(rho, r).doubled();
  }
  if (num % den != 0) throw Error("Weyl dimension product is not an integer");
  return num / den;
}

}  // namespace detail

inline BigInt weyl_dim(LieFamily f, int n, const Weight& mu) {
  check_lattice(f, n, mu);
  if (!is_dominant(mu, f, n)) throw InvalidWeight("weyl_dim: " + mu.str() + " is not dominant");
  const Weight r = rho(f, n);
  return detail::dimension_product(mu + r, r, positive_roots(f, n));
}

inline CohomologyResult cohomology(const IsotropicGrassmannian& x, const Weight& lambda) {
  require_L_dominant(x, lambda);
  const Weight r = x.rho();
  auto dom = dominantize(lambda + r, x.family(), x.rank());
  if (!dom) return {};
  Weight hw = dom->dominant - r;
  BigInt dim = weyl_dim(x.family(), x.rank(), hw);
  return {NonZeroCohomology{dom->length, std::move(hw), std::move(dim)}};
}

/// Positive roots of the Levi factor: those orthogonal to ω_k.
inline std::vector<Root> levi_positive_roots(const IsotropicGrassmannian& x) {
  const Weight omega = x.omega();
  std::vector<Root> out;
  for (auto& r : positive_roots(x.family(), x.rank())) {
    if (inner(omega, r).doubled() == 0) out.push_back(std::move(r));
  }
  return out;
}

/// Rank of U^λ, i.e. the Weyl dimension of the Levi representation. The
/// ambient ρ differs from the Levi ρ by a vector orthogonal to every Levi
/// root, so it can be used directly.
inline BigInt bundle_rank(const IsotropicGrassmannian& x, const Weight& lambda) {
  require_L_dominant(x, lambda);
  const Weight r = x.rho();
  return detail::dimension_product(lambda + r, r, levi_positive_roots(x));
}

/// dim H⁰(X, O(t)) for t ≥ 0.
inline BigInt hilbert_value(const IsotropicGrassmannian& x, std::int64_t t) {
  if (t < 0) throw InvalidWeight("hilbert_value: negative twist");
  return weyl_dim(x.family(), x.rank(), x.omega().scaled(t));
}

/// Newton forward-difference coefficients Δ^j h(0), j = 0..d, of the Hilbert
/// function sampled at t = 0..d. They determine the interpolating polynomial
/// h(t) = Σ_j Δ^j h(0) · C(t, j).
inline std::vector<BigInt> hilbert_newton_coefficients(const IsotropicGrassmannian& x) {
  const auto d = dimension(x);
  std::vector<BigInt> table;
  table.reserve(static_cast<std::size_t>(d) + 1);
  for (std::int64_t t = 0; t <= d; ++t) table.push_back(hilbert_value(x, t));
  std::vector<BigInt> coeffs;
  coeffs.reserve(table.size());
  for (std::size_t level = 0; level < table.size(); ++level) {
    coeffs.push_back(table[0]);
    for (std::size_t i = 0; i + 1 < table.size() - level; ++i) table[i] = table[i + 1] - table[i];
  }
  return coeffs;
}

inline BigInt evaluate_newton(const std::vector<BigInt>& coeffs, std::int64_t t) {
  BigInt value = 0;
  BigInt binom = 1;  // C(t, j)
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    value += coeffs[j] * binom;
    binom = binom * (t - static_cast<std::int64_t>(j)) / static_cast<std::int64_t>(j + 1);
  }
  return value;
}

/// deg X in the embedding by O(1): d! times the leading coefficient of the
/// Hilbert polynomial, which is the top Newton coefficient Δ^d h(0).
inline BigInt degree(const IsotropicGrassmannian& x) {
  return hilbert_newton_coefficients(x).back();
}

}  // namespace ugr
