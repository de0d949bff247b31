#pragma once

// The desk-scale reproduction suite: each criterion compares the closed-form
// classification, the Irr oracles and the brute-force enumerator against
// each other and against the published lists. All comparisons are exact;
// each criterion also has a wall-clock budget.

#include "ugr/classification.hpp"
#include "ugr/cohomology.hpp"
#include "ugr/enumeration.hpp"
#include "ugr/io.hpp"
#include "ugr/irr.hpp"
#include "ugr/sampling.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ugr {

struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct ReproduceOptions {
  unsigned threads = 1;
  std::uint64_t seed = 0x5eed'2024;
  // Dimension formula under test in the quadric check; replaceable so a
  // wrong formula can be injected.
  std::function<std::int64_t(const IsotropicGrassmannian&)> dimension_formula =
      [](const IsotropicGrassmannian& x) { return dimension(x); };
  // Called after each criterion finishes.
  std::function<void(const CriterionOutcome&)> on_result;
};

/// The dimension formula for type B as printed, k(2n-k) - k(k+1)/2, which
/// gives 2n-2 for the quadric OGr(1,2n+1). Kept as a negative control.
inline std::int64_t printed_b_dimension(const IsotropicGrassmannian& x) {
  if (x.family() != LieFamily::B) return dimension(x);
  const std::int64_t n = x.rank(), k = x.node();
  return k * (2 * n - k) - k * (k + 1) / 2;
}

namespace detail {

struct Check {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) log << "; ";
      log << what;
      ok = false;
    }
  }
};

inline std::string list_str(const std::vector<Weight>& ws) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? " " : "") + ws[i].str();
  return s + "}";
}

inline std::string mismatch(const IsotropicGrassmannian& x, const std::string& what,
                            const std::vector<Weight>& got, const std::vector<Weight>& want) {
  return variety_name(x) + " " + what + ": got " + list_str(got) + ", expected " + list_str(want);
}

// Weights in got but not in want, each tagged with the direct twist check.
inline std::string extras_note(const IsotropicGrassmannian& x, const std::vector<Weight>& got,
                               const std::vector<Weight>& want) {
  std::string s;
  for (const auto& w : got) {
    if (std::find(want.begin(), want.end(), w) != want.end()) continue;
    s += (s.empty() ? " [extra: " : ", ") + w.str() +
         (verify_twist_vanishing(x, w) ? " twists vanish" : " twists do not vanish");
  }
  return s.empty() ? s : s + "]";
}

}  // namespace detail

inline std::vector<CriterionOutcome> run_reproduction(const ReproduceOptions& opt = {}) {
  using detail::Check;
  using detail::mismatch;
  const EnumerationOptions forced{true, opt.threads};
  const EnumerationOptions guarded{false, opt.threads};

  struct Criterion {
    int id;
    std::string name;
    double budget;
    std::function<void(Check&)> body;
  };
  std::vector<Criterion> criteria;

  // 1 and 12 share the same random sample.
  std::size_t max_distinct_excess_count = 0;
  std::string cardinality_detail;

  criteria.push_back({1, "irr_generic and irr_closed agree on 10000 random weights", 10.0,
                      [&](Check& c) {
    std::mt19937_64 rng(opt.seed);
    const auto varieties = all_varieties(6);
    std::size_t compared = 0;
    for (int s = 0; s < 10000; ++s) {
      const auto& x = varieties[rng() % varieties.size()];
      const Weight lambda = random_l_dominant(x, rng, 2 * dimension(x));
      c.expect(is_L_dominant(x, lambda), "sampler produced non-L-dominant " + lambda.str());
      const auto g = irr_generic(x, lambda);
      const auto k = irr_closed(x, lambda);
      c.expect(g.irr_values == k.irr_values, variety_name(x) + " " + lambda.str() + " differs");
      if (static_cast<std::int64_t>(g.distinct_count()) > g.d) {
        ++max_distinct_excess_count;
        cardinality_detail = variety_name(x) + " " + lambda.str();
      }
      ++compared;
    }
    c.log << (c.ok ? "" : "; ") << compared << " weights compared";
  }});

  criteria.push_back({2, "IGr(2,8): classify = enumerate = {(5,0,0,0), (3,2,2,2)}", 1.0,
                      [&](Check& c) {
    const IsotropicGrassmannian x(LieFamily::C, 4, 2);
    const std::vector<Weight> want{Weight::integral({5, 0, 0, 0}), Weight::integral({3, 2, 2, 2})};
    const auto got_c = classify(x);
    const auto got_e = enumerate_ulrich(x, guarded);
    c.expect(got_c == want, mismatch(x, "classify", got_c, want));
    c.expect(got_e == want, mismatch(x, "enumerate", got_e, want));
  }});

  criteria.push_back({3, "IGr(2,20): exactly three Ulrich weights, confirmed by enumeration", 300.0,
                      [&](Check& c) {
    const IsotropicGrassmannian x(LieFamily::C, 10, 2);
    const std::vector<Weight> want{
        Weight::integral({17, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
        Weight::integral({11, 6, 6, 6, 6, 6, 6, 6, 0, 0}),
        Weight::integral({9, 8, 8, 8, 6, 6, 4, 4, 2, 2})};
    const auto got_c = classify(x);
    c.expect(got_c == want, mismatch(x, "classify", got_c, want));
    for (const auto& w : got_c) c.expect(is_ulrich(x, w), w.str() + " fails the Irr oracle");
    const auto got_e = enumerate_ulrich(x, forced);
    c.expect(got_e == want, mismatch(x, "enumerate", got_e, want));
  }});

  criteria.push_back({4, "IGr(k,2n), 2<k<n, n<=6: no Ulrich weights", 120.0, [&](Check& c) {
    int cases = 0;
    for (int n = 4; n <= 6; ++n) {
      for (int k = 3; k < n; ++k) {
        const IsotropicGrassmannian x(LieFamily::C, n, k);
        const auto got = enumerate_ulrich(x, guarded);
        c.expect(got.empty(), mismatch(x, "enumerate", got, {}));
        c.expect(classify(x).empty(), variety_name(x) + " classify nonempty");
        ++cases;
      }
    }
    c.log << (c.ok ? "" : "; ") << cases << " varieties";
  }});

  criteria.push_back({5, "LGr(n,2n): only LGr(2,4) with (1,0); forced diagonal 1,3,7,...,4m-5",
                      120.0, [&](Check& c) {
    for (int n = 2; n <= 5; ++n) {
      const IsotropicGrassmannian x(LieFamily::C, n, n);
      const std::vector<Weight> want =
          n == 2 ? std::vector<Weight>{Weight::integral({1, 0})} : std::vector<Weight>{};
      const auto got = enumerate_ulrich(x, guarded);
      c.expect(got == want, mismatch(x, "enumerate", got, want));
      c.expect(classify(x) == want, mismatch(x, "classify", classify(x), want));
    }
    const auto diag = lgr_forced_alpha(50);
    c.expect(diag.front() == 1, "forced diagonal must start at 1");
    for (int i = 2; i <= 50; ++i) {
      c.expect(diag[i - 1] == 4 * i - 5, "forced diagonal entry " + std::to_string(i) + " is " +
                                             std::to_string(diag[i - 1]));
    }
    std::vector<int> solutions;
    for (int n = 1; n <= 1000; ++n) {
      if (4 * n - 5 == n * (n + 1) / 2) solutions.push_back(n);
    }
    c.expect(solutions == std::vector<int>{2, 5}, "4n-5 = n(n+1)/2 should hold only for n = 2, 5");
  }});

  criteria.push_back({6, "OGr(k,2n+1) and IGr(k,2n) Ulrich sets match under the 1/2 shift, n<=6",
                      180.0, [&](Check& c) {
    int cases = 0;
    for (int n = 2; n <= 6; ++n) {
      for (int k = 1; k < n; ++k) {
        const IsotropicGrassmannian xb(LieFamily::B, n, k), xc(LieFamily::C, n, k);
        auto b = enumerate_ulrich(xb, guarded);
        for (auto& w : b) w = w.shifted_by_halves(-1);
        canonicalize(b);
        const auto cc = enumerate_ulrich(xc, guarded);
        c.expect(b == cc, mismatch(xb, "shifted enumeration", b, cc));
        ++cases;
      }
    }
    c.log << (c.ok ? "" : "; ") << cases << " (n,k) pairs";
  }});

  criteria.push_back({7, "Quadrics Q^{2n-1}, Q^{2n-2}, n<=8: only spinor bundles", 30.0,
                      [&](Check& c) {
    for (int n = 2; n <= 8; ++n) {
      const IsotropicGrassmannian xb(LieFamily::B, n, 1);
      c.expect(opt.dimension_formula(xb) == 2 * n - 1,
               "dim " + variety_name(xb) + " = " + std::to_string(opt.dimension_formula(xb)) +
                   ", quadric needs " + std::to_string(2 * n - 1));
      const std::vector<Weight> want_b{Weight(std::vector<std::int64_t>(n, 1))};
      c.expect(classify(xb) == want_b, mismatch(xb, "classify", classify(xb), want_b));
      const auto eb = enumerate_ulrich(xb, forced);
      c.expect(eb == want_b, mismatch(xb, "enumerate", eb, want_b));
      if (n < 3) continue;
      const IsotropicGrassmannian xd(LieFamily::D, n, 1);
      c.expect(opt.dimension_formula(xd) == 2 * n - 2,
               "dim " + variety_name(xd) + " = " + std::to_string(opt.dimension_formula(xd)));
      const Weight plus(std::vector<std::int64_t>(n, 1));
      const std::vector<Weight> want_d{plus, plus.with_last_negated()};
      c.expect(classify(xd) == want_d, mismatch(xd, "classify", classify(xd), want_d));
      const auto ed = enumerate_ulrich(xd, forced);
      c.expect(ed == want_d, mismatch(xd, "enumerate", ed, want_d));
    }
  }});

  criteria.push_back({8, "OGr(2,2n), n=4..6 and OGr(3,2n), n=5,6 match the closed forms", 300.0,
                      [&](Check& c) {
    for (int n = 4; n <= 6; ++n) {
      const IsotropicGrassmannian x(LieFamily::D, n, 2);
      const auto want = ulrich_weights_ogr2_even(n);
      const auto got = enumerate_ulrich(x, guarded);
      c.expect(got == want, mismatch(x, "enumerate", got, want) + detail::extras_note(x, got, want));
    }
    const IsotropicGrassmannian x5(LieFamily::D, 5, 3);
    const std::vector<Weight> want5{Weight::integral({6, 5, 4, 4, 4}),
                                    Weight::integral({6, 5, 4, 4, -4})};
    c.expect(ulrich_weights_ogr3_even(5) == want5,
             mismatch(x5, "closed form", ulrich_weights_ogr3_even(5), want5));
    const auto got5 = enumerate_ulrich(x5, guarded);
    c.expect(got5 == want5, mismatch(x5, "enumerate", got5, want5));
    const IsotropicGrassmannian x6(LieFamily::D, 6, 3);
    const auto got6 = enumerate_ulrich(x6, guarded);
    c.expect(got6.empty(), mismatch(x6, "enumerate", got6, {}));
    c.expect(ulrich_weights_ogr3_even(6).empty(), "OGr(3,12) closed form nonempty");
  }});

  criteria.push_back({9, "OGr(n,2n): {0} for n=2,3, {(1,0,0,0)} for n=4, none for n=5", 120.0,
                      [&](Check& c) {
    for (int n = 2; n <= 5; ++n) {
      std::vector<Weight> want;
      if (n <= 3) want.push_back(Weight::zero(n));
      if (n == 4) want.push_back(Weight::integral({1, 0, 0, 0}));
      for (auto comp : {SpinorComponent::plus, SpinorComponent::minus}) {
        const auto x = IsotropicGrassmannian::spinor(n, comp);
        std::vector<Weight> expected = want;
        if (comp == SpinorComponent::minus) {
          for (auto& w : expected) w = w.with_last_negated();
          canonicalize(expected);
        }
        const auto got = enumerate_ulrich(x, guarded);
        c.expect(got == expected,
                 mismatch(x, "enumerate", got, expected) + detail::extras_note(x, got, expected));
        const auto listed = classify(x, Catalogue::published);
        c.expect(listed == expected, mismatch(x, "classify", listed, expected));
      }
    }
  }});

  criteria.push_back({10, "Irr criterion agrees with direct twist vanishing", 60.0, [&](Check& c) {
    std::size_t positives = 0;
    for (const auto& x : all_varieties(6)) {
      for (const auto& w : classify(x)) {
        c.expect(verify_twist_vanishing(x, w), variety_name(x) + " " + w.str() + " fails twists");
        ++positives;
      }
    }
    std::mt19937_64 rng(opt.seed + 10);
    const auto varieties = all_varieties(6);
    std::size_t negatives = 0;
    while (negatives < 1000) {
      const auto& x = varieties[rng() % varieties.size()];
      const Weight lambda = random_l_dominant(x, rng, 2 * dimension(x));
      if (is_ulrich(x, lambda)) continue;
      c.expect(!verify_twist_vanishing(x, lambda),
               variety_name(x) + " " + lambda.str() + " passes twists but is not Ulrich");
      ++negatives;
    }
    c.log << (c.ok ? "" : "; ") << positives << " Ulrich and " << negatives
          << " non-Ulrich weights";
  }});

  criteria.push_back({11, "h0(U) = rank(U) * deg(X) for every classified Ulrich bundle, n<=6", 60.0,
                      [&](Check& c) {
    std::size_t checked = 0;
    for (const auto& x : all_varieties(6)) {
      const auto ws = classify(x);
      if (ws.empty()) continue;
      const BigInt deg = degree(x);
      for (const auto& w : ws) {
        const auto h = cohomology(x, w);
        const BigInt h0 = h.vanishes() || h.group->degree != 0 ? BigInt(0) : h.group->dim;
        const BigInt rank = bundle_rank(x, w);
        c.expect(h0 == rank * deg, variety_name(x) + " " + w.str() + ": h0=" + h0.str() +
                                       " rank=" + rank.str() + " deg=" + deg.str());
        ++checked;
      }
    }
    c.log << (c.ok ? "" : "; ") << checked << " bundles";
  }});

  criteria.push_back({12, "No sampled weight has more than d distinct Irr values", 1.0,
                      [&](Check& c) {
    c.expect(max_distinct_excess_count == 0,
             std::to_string(max_distinct_excess_count) + " violations, e.g. " + cardinality_detail);
  }});

  std::vector<CriterionOutcome> outcomes;
  for (auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > crit.budget) {
      check.expect(false, "took " + std::to_string(secs) + " s, budget " +
                              std::to_string(crit.budget) + " s");
    }
    CriterionOutcome out{crit.id, crit.name, check.ok, check.log.str(), secs, crit.budget};
    if (opt.on_result) opt.on_result(out);
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

}  // namespace ugr
