#pragma once

// Closed-form lists of the irreducible equivariant Ulrich weights on every
// isotropic Grassmannian.

#include "ugr/grassmannian.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace ugr {

/// Parameters (p, q) of the plane-Grassmannian families. p is an integer for
/// type C and lies in ½+ℤ for type D.
struct ClassificationParams {
  HalfInt p;
  std::int64_t q = 0;

  bool operator==(const ClassificationParams&) const = default;
};

/// Lexicographically decreasing, duplicates removed.
inline void canonicalize(std::vector<Weight>& weights) {
  std::sort(weights.begin(), weights.end(), std::greater<>());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
}

/// Divisors p of n-1 with (n-1)/p = 2q+1 odd, by decreasing p.
inline std::vector<ClassificationParams> igr2_params(int n) {
  check_rank(LieFamily::C, n);
  std::vector<ClassificationParams> out;
  const std::int64_t m = n - 1;
  for (std::int64_t p = m; p >= 1; --p) {
    if (m % p != 0 || (m / p) % 2 == 0) continue;
    out.push_back({HalfInt::from_int(p), (m / p - 1) / 2});
  }
  return out;
}

/// Half-odd p > 0 with n-2 = p(2q+1) - ½, i.e. 2p ranges over the divisors
/// of 2n-3; by decreasing p.
inline std::vector<ClassificationParams> ogr2_even_params(int n) {
  check_rank(LieFamily::D, n);
  std::vector<ClassificationParams> out;
  const std::int64_t m = 2 * n - 3;
  for (std::int64_t twice_p = m; twice_p >= 1; twice_p -= 2) {
    if (m % twice_p != 0) continue;
    out.push_back({HalfInt::from_doubled(twice_p), (m / twice_p - 1) / 2});
  }
  return out;
}

/// Ulrich weights on IGr(2,2n):
/// (n-2+p, n-1-p, [2pq]^{2p}, [2p(q-1)]^{2p}, …, [2p]^{2p}, [0]^{p-1}).
inline std::vector<Weight> ulrich_weights_igr2(int n) {
  std::vector<Weight> out;
  for (const auto& [hp, q] : igr2_params(n)) {
    const std::int64_t p = hp.as_integer();
    std::vector<std::int64_t> w = {n - 2 + p, n - 1 - p};
    for (std::int64_t block = q; block >= 1; --block) w.insert(w.end(), 2 * p, 2 * p * block);
    w.insert(w.end(), p - 1, 0);
    for (auto& v : w) v *= 2;
    out.emplace_back(std::move(w));
  }
  canonicalize(out);
  return out;
}

/// Ulrich weights on OGr(2,2n+1): the type C list shifted by ½.
inline std::vector<Weight> ulrich_weights_ogr2_odd(int n) {
  std::vector<Weight> out;
  for (const auto& w : ulrich_weights_igr2(n)) out.push_back(w.shifted_by_halves(1));
  canonicalize(out);
  return out;
}

inline std::vector<Weight> ulrich_weights_quadric(LieFamily family, int n) {
  check_rank(family, n);
  if (family == LieFamily::C) throw InvalidRank("quadrics exist only in types B and D");
  Weight spinor(std::vector<std::int64_t>(n, 1));
  std::vector<Weight> out{spinor};
  if (family == LieFamily::D) out.push_back(spinor.with_last_negated());
  canonicalize(out);
  return out;
}

/// Ulrich weights on OGr(2,2n), n ≥ 4, each with its λ_n-negated twin:
/// (n-2+p, n-1-p, [2pq+½]^{2p}, …, [2p+½]^{2p}, [½]^{p-½}).
inline std::vector<Weight> ulrich_weights_ogr2_even(int n) {
  if (n < 4) throw InvalidRank("OGr(2,2n) needs n >= 4");
  std::vector<Weight> out;
  for (const auto& [hp, q] : ogr2_even_params(n)) {
    const std::int64_t twice_p = hp.doubled();
    std::vector<std::int64_t> w = {2 * (n - 2) + twice_p, 2 * (n - 1) - twice_p};
    for (std::int64_t block = q; block >= 1; --block) {
      w.insert(w.end(), twice_p, 2 * twice_p * block + 1);
    }
    w.insert(w.end(), (twice_p - 1) / 2, 1);
    Weight lambda(std::move(w));
    out.push_back(lambda.with_last_negated());
    out.push_back(std::move(lambda));
  }
  canonicalize(out);
  return out;
}

/// Ulrich weights on OGr(3,2n), n ≥ 5: nonempty iff n-3 = 2q, in which case
/// λ^± = (2n-4, 2n-5, 2n-6, 2n-6, 2n-6, 2n-10, 2n-10, …, 4, ±4), the tail being
/// q pairs descending by 4 from 2n-6 down to 4.
inline std::vector<Weight> ulrich_weights_ogr3_even(int n) {
  if (n < 5) throw InvalidRank("OGr(3,2n) needs n >= 5");
  if ((n - 3) % 2 != 0) return {};
  const std::int64_t pairs = (n - 3) / 2;
  std::vector<std::int64_t> w = {2 * n - 4, 2 * n - 5, 2 * n - 6};
  for (std::int64_t i = 0; i < pairs; ++i) w.insert(w.end(), 2, 2 * n - 6 - 4 * i);
  for (auto& v : w) v *= 2;
  Weight lambda(std::move(w));
  std::vector<Weight> out{lambda, lambda.with_last_negated()};
  canonicalize(out);
  return out;
}

/// Maximal Grassmannians: LGr(2,4), OGr(2,5), OGr(2,4), OGr(3,6), OGr(4,8) only.
inline std::vector<Weight> ulrich_weights_maximal(
    LieFamily family, int n, SpinorComponent component = SpinorComponent::plus) {
  check_rank(family, n);
  std::vector<Weight> out;
  switch (family) {
    case LieFamily::C:
      if (n == 2) out.push_back(Weight::integral({1, 0}));
      break;
    case LieFamily::B:
      if (n == 2) out.push_back(Weight::zero(2));
      break;
    case LieFamily::D:
      if (n == 2 || n == 3) out.push_back(Weight::zero(n));
      if (n == 4) out.push_back(Weight::integral({1, 0, 0, 0}));
      if (component == SpinorComponent::minus) {
        for (auto& w : out) w = w.with_last_negated();
      }
      break;
  }
  canonicalize(out);
  return out;
}

/// The first m diagonal values T(a_ii) of the unique order-preserving map
/// T on the poset {a_ij}_{i≤j} with T(a_ij) = (T(a_ii)+T(a_jj))/2, built
/// greedily: each new corner a_{1,s} takes the least positive integer not
/// yet in the image.
inline std::vector<std::int64_t> lgr_forced_alpha(int m) {
  if (m < 1) throw InvalidRank("lgr_forced_alpha needs m >= 1");
  std::vector<std::int64_t> diag;
  std::set<std::int64_t> image;
  for (int s = 1; s <= m; ++s) {
    std::int64_t least = 1;
    while (image.count(least)) ++least;
    // T(a_{1,s}) = least, so T(a_ss) = 2·least − T(a_11); for s = 1 both coincide.
    const std::int64_t corner = diag.empty() ? least : 2 * least - diag.front();
    diag.push_back(corner);
    for (std::int64_t v : diag) {
      if ((v + corner) % 2 != 0) throw Error("lgr_forced_alpha: averaging condition not integral");
      image.insert((v + corner) / 2);
    }
  }
  return diag;
}

/// Ulrich weights on OGr(2,2n) outside the published family: for every
/// p ∈ ½ℤ, p > ½, with 2p dividing n-2 and q = (n-2)/(2p),
/// (n-2+p, n-1-p, [2pq-p+1]^{2p}, [2p(q-1)-p+1]^{2p}, …, [p+1]^{2p}),
/// each with its λ_n-negated twin. These have no trailing block of ½'s; at
/// p = ½ the formula reproduces a published weight and is skipped.
inline std::vector<Weight> ulrich_weights_ogr2_even_extra(int n) {
  if (n < 4) throw InvalidRank("OGr(2,2n) needs n >= 4");
  std::vector<Weight> out;
  const std::int64_t l = n - 2;
  for (std::int64_t twice_p = 2; twice_p <= l; ++twice_p) {
    if (l % twice_p != 0) continue;
    const std::int64_t q = l / twice_p;
    std::vector<std::int64_t> w = {2 * (n - 2) + twice_p, 2 * (n - 1) - twice_p};
    for (std::int64_t block = q; block >= 1; --block) {
      w.insert(w.end(), twice_p, 2 * twice_p * block - twice_p + 2);
    }
    Weight lambda(std::move(w));
    out.push_back(lambda.with_last_negated());
    out.push_back(std::move(lambda));
  }
  canonicalize(out);
  return out;
}

/// Ulrich weights on maximal Grassmannians outside the published list: on
/// OGr(4,8) ≅ Q⁶ (triality) the second spinor-type weight ω_3 on G/P_4,
/// resp. ω_4 on G/P_3.
inline std::vector<Weight> ulrich_weights_maximal_extra(
    LieFamily family, int n, SpinorComponent component = SpinorComponent::plus) {
  check_rank(family, n);
  if (family != LieFamily::D || n != 4) return {};
  const Weight w = Weight::doubled_coords({1, 1, 1, -1});
  return {component == SpinorComponent::minus ? w.with_last_negated() : w};
}

/// Which list classify() reports: the lists exactly as published, or those
/// completed with the weights the exhaustive search finds in addition.
enum class Catalogue { published, complete };

/// Every irreducible equivariant Ulrich weight on X, canonically ordered.
inline std::vector<Weight> classify(const IsotropicGrassmannian& x,
                                    Catalogue catalogue = Catalogue::complete) {
  const int n = x.rank();
  const int k = x.node();
  const bool complete = catalogue == Catalogue::complete;
  const auto merged = [](std::vector<Weight> a, const std::vector<Weight>& b) {
    a.insert(a.end(), b.begin(), b.end());
    canonicalize(a);
    return a;
  };
  if (x.is_maximal()) {
    auto out = ulrich_weights_maximal(x.family(), n, x.component());
    if (!complete) return out;
    return merged(std::move(out), ulrich_weights_maximal_extra(x.family(), n, x.component()));
  }
  switch (x.family()) {
    case LieFamily::C:
      if (k == 1) return {Weight::zero(n)};  // projective space: only O
      if (k == 2) return ulrich_weights_igr2(n);
      return {};
    case LieFamily::B:
      if (k == 1) return ulrich_weights_quadric(LieFamily::B, n);
      if (k == 2) return ulrich_weights_ogr2_odd(n);
      return {};
    case LieFamily::D:
      if (k == 1) return ulrich_weights_quadric(LieFamily::D, n);
      if (k == 2) {
        auto out = ulrich_weights_ogr2_even(n);
        if (!complete) return out;
        return merged(std::move(out), ulrich_weights_ogr2_even_extra(n));
      }
      if (k == 3) return ulrich_weights_ogr3_even(n);
      return {};
  }
  return {};
}

}  // namespace ugr
