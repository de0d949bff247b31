#pragma once

// Irr(λ) = { t ∈ ℤ : λ+ρ−tω_k is singular }, computed two independent ways,
// and the Ulrich criterion Irr(λ) = {1, …, d} (each value exactly once).

#include "ugr/grassmannian.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace ugr {

struct IrrContribution {
  std::int64_t value = 0;
  std::string source;  // a root ("e1-e3") or a pair label ("a1+b2", "(a1+a2)/2")

  auto operator<=>(const IrrContribution&) const = default;
};

struct UlrichCertificate {
  std::vector<std::int64_t> irr_values;  // sorted, with multiplicity
  std::vector<IrrContribution> contributions;
  bool is_ulrich = false;
  std::int64_t d = 0;

  std::size_t distinct_count() const {
    std::vector<std::int64_t> v = irr_values;
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  }
};

namespace detail {

inline bool fills_one_to_d(const std::vector<std::int64_t>& sorted, std::int64_t d) {
  if (static_cast<std::int64_t>(sorted.size()) != d) return false;
  for (std::int64_t i = 0; i < d; ++i) {
    if (sorted[i] != i + 1) return false;
  }
  return true;
}

inline UlrichCertificate finish(std::vector<IrrContribution> contributions, std::int64_t d) {
  std::sort(contributions.begin(), contributions.end());
  UlrichCertificate cert;
  cert.d = d;
  cert.irr_values.reserve(contributions.size());
  for (const auto& c : contributions) cert.irr_values.push_back(c.value);
  cert.contributions = std::move(contributions);
  cert.is_ulrich = fills_one_to_d(cert.irr_values, d);
  return cert;
}

}  // namespace detail

/// One candidate t per positive root α with (α, ω_k) ≠ 0, namely
/// t = (α, λ+ρ) / (α, ω_k); only integral t are kept.
inline UlrichCertificate irr_generic(const IsotropicGrassmannian& x, const Weight& lambda) {
  require_L_dominant(x, lambda);
  const Weight shifted = lambda + x.rho();
  const Weight omega = x.omega();
  std::vector<IrrContribution> out;
  for (const auto& root : positive_roots(x.family(), x.rank())) {
    const auto den = inner(omega, root).doubled();
    if (den == 0) continue;
    const auto num = inner(shifted, root).doubled();
    if (num % den != 0) continue;
    out.push_back({num / den, root.label()});
  }
  return detail::finish(std::move(out), dimension(x));
}

/// The per-family closed forms in terms of the α/β split of λ+ρ.
inline UlrichCertificate irr_closed(const IsotropicGrassmannian& x, const Weight& lambda) {
  AlphaBeta ab = alpha_beta(x, lambda);
  if (x.component() == SpinorComponent::minus) ab.alpha.back() = -ab.alpha.back();

  const auto& a = ab.alpha;
  const auto& b = ab.beta;
  const auto label = [](char c, std::size_t i) { return std::string(1, c) + std::to_string(i + 1); };
  std::vector<IrrContribution> out;
  // Records scaled/divisor when it is an integer.
  const auto add = [&out](HalfInt scaled, std::int64_t divisor, std::string src) {
    const auto doubled = scaled.doubled();
    if (doubled % (2 * divisor) != 0) return;
    out.push_back({doubled / (2 * divisor), std::move(src)});
  };

  const auto family = x.family();
  if (!x.is_maximal()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        add(a[i] + b[j], 1, label('a', i) + "+" + label('b', j));
        add(a[i] - b[j], 1, label('a', i) + "-" + label('b', j));
      }
    }
    const std::size_t diag = family == LieFamily::D ? 1 : 0;  // D has no i = j term
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + diag; j < a.size(); ++j) {
        add(a[i] + a[j], 2, "(" + label('a', i) + "+" + label('a', j) + ")/2");
      }
    }
  } else if (family == LieFamily::C) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i; j < a.size(); ++j) {
        add(a[i] + a[j], 2, "(" + label('a', i) + "+" + label('a', j) + ")/2");
      }
    }
  } else {
    const std::size_t diag = family == LieFamily::D ? 1 : 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + diag; j < a.size(); ++j) {
        add(a[i] + a[j], 1, label('a', i) + "+" + label('a', j));
      }
    }
  }
  return detail::finish(std::move(out), dimension(x));
}

inline bool is_ulrich(const IsotropicGrassmannian& x, const Weight& lambda) {
  return irr_generic(x, lambda).is_ulrich;
}

}  // namespace ugr
