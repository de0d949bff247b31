#pragma once

// Brute-force discovery of every Ulrich weight on X by depth-first search
// over v = λ+ρ, plus a cohomology-only Ulrich test. Neither depends on the
// closed-form classification.
//
// Search region. For an Ulrich weight every positive root α with
// (α, ω_k) ≠ 0 contributes t = (α, v)/(α, ω_k), and there are exactly d such
// roots, so each must produce a distinct integer in [1, d]. Consequently:
//   * non-maximal B/C/D: α_i ± β_j ∈ [1, d] gives 0 < β_j < d and
//     1 < α_i < d, with the D last coordinate satisfying |β_l| < d;
//   * maximal C: α_i = (α_i+α_i)/2 ∈ [1, d];
//   * maximal B: 2α_i ∈ [1, d];
//   * maximal D (n ≥ 3): α_i + α_j ∈ [1, d] for i < j forces |α_i| ≤ d.
// So every coordinate lies in [-d, d], and in [1, d] outside the D last
// coordinate and the maximal chambers. The one exception is D_2 maximal,
// where any v = (a, 1-a) is Ulrich (the Levi contains an SL_2 factor
// acting trivially on X ≅ ℙ¹); there the bounded region yields only λ = 0.

#include "ugr/cohomology.hpp"
#include "ugr/classification.hpp"
#include "ugr/irr.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace ugr {

class SearchTooLarge : public Error {
 public:
  SearchTooLarge(const std::string& what, double estimated_nodes)
      : Error(what), estimated_nodes_(estimated_nodes) {}
  double estimated_nodes() const { return estimated_nodes_; }

 private:
  double estimated_nodes_;
};

/// Bounds on the coordinates of λ+ρ explored by the search.
struct SearchBounds {
  std::int64_t entry_max = 0;
  std::int64_t entry_min = 0;       // all coordinates but the D last one
  std::int64_t last_entry_min = 0;  // the last coordinate

  std::int64_t min_for(int i, int n) const { return i == n - 1 ? last_entry_min : entry_min; }
};

inline SearchBounds search_bounds(const IsotropicGrassmannian& x) {
  const auto d = dimension(x);
  SearchBounds b;
  b.entry_max = d;
  b.entry_min = x.is_maximal() ? -d : 1;
  b.last_entry_min = (x.is_maximal() || x.family() == LieFamily::D) ? -d : 1;
  return b;
}

struct EnumerationOptions {
  bool force = false;
  unsigned threads = 1;
};

inline bool within_practical_limits(const IsotropicGrassmannian& x) {
  return x.rank() <= 6 || (x.rank() <= 7 && x.node() <= 2);
}

/// Node count of the unpruned region: strictly decreasing chains per block,
/// times the number of admissible lattice classes.
inline double estimate_search_nodes(const IsotropicGrassmannian& x) {
  const auto b = search_bounds(x);
  const int n = x.rank();
  const auto choose = [](double m, int r) {
    if (r < 0 || m < r) return 0.0;
    return std::exp(std::lgamma(m + 1) - std::lgamma(r + 1) - std::lgamma(m - r + 1));
  };
  const int a = x.alpha_size();
  const double alpha_values = static_cast<double>(b.entry_max - b.entry_min + 1);
  double nodes = choose(alpha_values, a);
  if (a < n) {
    const double beta_values = static_cast<double>(b.entry_max - b.last_entry_min + 1);
    nodes *= choose(beta_values, n - a);
  }
  return x.family() == LieFamily::C ? nodes : 2 * nodes;
}

namespace detail {

class UlrichSearch {
 public:
  explicit UlrichSearch(const IsotropicGrassmannian& x)
      : x_(x), n_(x.rank()), d_(dimension(x)), bounds_(search_bounds(x)),
        roots_by_trigger_(n_), walls_by_trigger_(n_), block_start_(n_, false) {
    const Weight omega = x.omega();
    for (const auto& r : positive_roots(x.family(), n_)) {
      const auto den = inner(omega, r).doubled();
      if (den == 0) continue;  // Levi root: pairing stays positive by L-dominance
      const auto term = sparse(r, den);
      roots_by_trigger_[term.trigger()].push_back(term);
    }
    // L-dominance of λ is (v, α) > 0 for every simple root α ≠ ε_k.
    const auto simple = simple_roots(x.family(), n_);
    for (int i = 0; i < n_; ++i) {
      if (i + 1 == x.node()) continue;
      const auto term = sparse(simple[i], 1);
      walls_by_trigger_[term.trigger()].push_back(term);
    }
    // A new decreasing chain starts after ε_k (non-maximal) and at 0.
    block_start_[0] = true;
    if (!x.is_maximal()) block_start_[x.alpha_size()] = true;
  }

  /// Values the first coordinate may take for the given lattice class.
  std::vector<std::int64_t> first_choices(int parity) const {
    std::vector<std::int64_t> out;
    for (auto v = top(0, parity); v >= 2 * bounds_.min_for(0, n_); v -= 2) out.push_back(v);
    return out;
  }

  void run_from(std::int64_t first, std::vector<Weight>& found) {
    parity_ = static_cast<int>(((first % 2) + 2) % 2);
    v_.assign(n_, 0);
    claimed_.assign(static_cast<std::size_t>(d_) + 1, 0);
    found_ = &found;
    try_assign(0, first);
  }

 private:
  struct Term {
    int i = 0, ci = 0, j = -1, cj = 0;
    std::int64_t den = 1;
    int trigger() const { return std::max(i, j); }
  };

  static Term sparse(const Root& r, std::int64_t den) {
    Term t;
    t.den = den;
    bool first = true;
    for (int m = 0; m < r.rank(); ++m) {
      if (r.coords[m] == 0) continue;
      if (first) {
        t.i = m;
        t.ci = r.coords[m];
        first = false;
      } else {
        t.j = m;
        t.cj = r.coords[m];
      }
    }
    return t;
  }

  std::int64_t top(int i, int parity) const {
    std::int64_t hi = block_start_[i] ? 2 * bounds_.entry_max : v_[i - 1] - 2;
    if (((hi % 2) + 2) % 2 != parity) --hi;
    return hi;
  }

  // Largest value still possible for unassigned coordinate m, given v_[0..i].
  std::int64_t future_hi(int m, int i) const {
    int start = m;
    while (!block_start_[start]) --start;
    if (start > i) return 2 * bounds_.entry_max - 2 * (m - start);
    return v_[i] - 2 * (m - i);
  }
  std::int64_t future_lo(int m) const {
    std::int64_t lo = 2 * bounds_.min_for(m, n_);
    if (((lo % 2) + 2) % 2 != parity_) ++lo;
    return lo;
  }

  static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
  }

  // Every unclaimed value must be reachable by a root not yet evaluated.
  bool future_can_cover(int i) const {
    std::int64_t lo_unclaimed = 0, hi_unclaimed = 0;
    for (std::int64_t t = 1; t <= d_; ++t) {
      if (claimed_[t]) continue;
      if (!lo_unclaimed) lo_unclaimed = t;
      hi_unclaimed = t;
    }
    if (!lo_unclaimed) return true;
    std::int64_t reach_lo = INT64_MAX, reach_hi = INT64_MIN;
    for (int m = i + 1; m < n_; ++m) {
      for (const auto& term : roots_by_trigger_[m]) {
        std::int64_t num_lo = 0, num_hi = 0;
        const auto accumulate = [&](int idx, int c) {
          std::int64_t a, b;
          if (idx <= i) {
            a = b = v_[idx];
          } else {
            a = future_lo(idx);
            b = future_hi(idx, i);
          }
          if (c > 0) {
            num_lo += c * a;
            num_hi += c * b;
          } else {
            num_lo += c * b;
            num_hi += c * a;
          }
        };
        accumulate(term.i, term.ci);
        if (term.j >= 0) accumulate(term.j, term.cj);
        reach_lo = std::min(reach_lo, -floor_div(-num_lo, term.den));
        reach_hi = std::max(reach_hi, floor_div(num_hi, term.den));
      }
    }
    return reach_lo <= lo_unclaimed && hi_unclaimed <= reach_hi;
  }

  void try_assign(int i, std::int64_t value) {
    v_[i] = value;
    for (const auto& w : walls_by_trigger_[i]) {
      std::int64_t p = w.ci * v_[w.i];
      if (w.j >= 0) p += w.cj * v_[w.j];
      if (p <= 0) return;
    }
    std::size_t claimed_here = 0;
    bool ok = true;
    for (const auto& term : roots_by_trigger_[i]) {
      std::int64_t num = term.ci * v_[term.i];
      if (term.j >= 0) num += term.cj * v_[term.j];
      if (num % term.den != 0) { ok = false; break; }
      const auto t = num / term.den;
      if (t < 1 || t > d_ || claimed_[t]) { ok = false; break; }
      claimed_[t] = 1;
      undo_.push_back(t);
      ++claimed_here;
    }
    if (ok && i + 1 == n_) {
      found_->push_back(Weight(v_) - x_.rho());
    } else if (ok && future_can_cover(i)) {
      const auto lo = 2 * bounds_.min_for(i + 1, n_);
      for (auto next = top(i + 1, parity_); next >= lo; next -= 2) try_assign(i + 1, next);
    }
    for (; claimed_here > 0; --claimed_here) {
      claimed_[undo_.back()] = 0;
      undo_.pop_back();
    }
  }

  IsotropicGrassmannian x_;
  int n_;
  std::int64_t d_;
  SearchBounds bounds_;
  std::vector<std::vector<Term>> roots_by_trigger_;
  std::vector<std::vector<Term>> walls_by_trigger_;
  std::vector<bool> block_start_;

  int parity_ = 0;
  std::vector<std::int64_t> v_;
  std::vector<char> claimed_;
  std::vector<std::int64_t> undo_;
  std::vector<Weight>* found_ = nullptr;
};

}  // namespace detail

/// Every L-dominant λ in the bounded region with Irr(λ) = {1..d}, in
/// canonical (lexicographically decreasing) order.
inline std::vector<Weight> enumerate_ulrich(const IsotropicGrassmannian& x,
                                            const EnumerationOptions& options = {}) {
  if (!options.force && !within_practical_limits(x)) {
    const double est = estimate_search_nodes(x);
    std::ostringstream msg;
    msg << "search too large: n=" << x.rank() << ", k=" << x.node() << ", about "
        << std::scientific << std::setprecision(1) << est
        << " unpruned nodes; pass force to run anyway";
    throw SearchTooLarge(msg.str(), est);
  }
  // G/P_{n-1} is searched in the G/P_n chamber and mapped back by λ_n ↦ -λ_n.
  if (x.component() == SpinorComponent::minus) {
    auto out = enumerate_ulrich(IsotropicGrassmannian::spinor(x.rank(), SpinorComponent::plus),
                                {true, options.threads});
    for (auto& w : out) w = w.with_last_negated();
    canonicalize(out);
    return out;
  }

  struct Task {
    std::int64_t first;
  };
  std::vector<Task> tasks;
  detail::UlrichSearch probe(x);
  for (int parity : {0, 1}) {
    if (parity == 1 && x.family() == LieFamily::C) continue;
    for (auto v : probe.first_choices(parity)) tasks.push_back({v});
  }

  std::vector<Weight> results;
  std::mutex merge;
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    detail::UlrichSearch search(x);
    std::vector<Weight> local;
    for (std::size_t t = next++; t < tasks.size(); t = next++) search.run_from(tasks[t].first, local);
    std::lock_guard lock(merge);
    results.insert(results.end(), local.begin(), local.end());
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::erase_if(results, [&](const Weight& w) { return !is_ulrich(x, w); });
  canonicalize(results);
  return results;
}

/// Checks the defining vanishing pattern of an Ulrich bundle directly by
/// Borel–Bott–Weil on E(t) = U^{λ+tω_k}: no H^i for 0 < i < d, no H⁰ for
/// t < 0, no H^d for t ≥ -d, and H⁰(E) ≠ 0. Twists are scanned over
/// [-2d-1, d+1], which contains every wall crossing of an Ulrich weight and
/// the window [-d, -1] where any non-Ulrich weight fails.
inline bool verify_twist_vanishing(const IsotropicGrassmannian& x, const Weight& lambda) {
  require_L_dominant(x, lambda);
  const auto d = dimension(x);
  const Weight omega = x.omega();
  const auto at_zero = cohomology(x, lambda);
  if (at_zero.vanishes() || at_zero.group->degree != 0) return false;
  for (std::int64_t t = -2 * d - 1; t <= d + 1; ++t) {
    const auto h = cohomology(x, lambda + omega.scaled(t));
    if (h.vanishes()) continue;
    const int i = h.group->degree;
    if (i > 0 && i < d) return false;
    if (i == 0 && t < 0) return false;
    if (i == d && t >= -d) return false;
  }
  return true;
}

}  // namespace ugr
