#pragma once

// Weights and roots of the classical groups B_n, C_n, D_n in the standard
// orthonormal basis e_1..e_n. Weights live in ℤⁿ ∪ (½+ℤ)ⁿ and are stored
// doubled so that every computation stays in integer arithmetic.

#include "ugr/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ugr {

enum class LieFamily { B, C, D };

inline char family_letter(LieFamily f) {
  switch (f) {
    case LieFamily::B: return 'B';
    case LieFamily::C: return 'C';
    case LieFamily::D: return 'D';
  }
  return '?';
}

inline void check_rank(LieFamily f, int n) {
  if (n < 2) {
    throw InvalidRank(std::string("rank ") + std::to_string(n) + " out of range for type " +
                      family_letter(f) + " (need n >= 2)");
  }
}

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> doubled) : doubled_(std::move(doubled)) {}

  static Weight integral(std::initializer_list<std::int64_t> coords) {
    std::vector<std::int64_t> d;
    d.reserve(coords.size());
    for (auto c : coords) d.push_back(2 * c);
    return Weight(std::move(d));
  }
  static Weight doubled_coords(std::initializer_list<std::int64_t> twice) {
    return Weight(std::vector<std::int64_t>(twice));
  }
  static Weight zero(int n) { return Weight(std::vector<std::int64_t>(n, 0)); }
  static Weight from_halves(const std::vector<HalfInt>& coords) {
    std::vector<std::int64_t> d;
    d.reserve(coords.size());
    for (auto c : coords) d.push_back(c.doubled());
    return Weight(std::move(d));
  }

  int rank() const { return static_cast<int>(doubled_.size()); }
  HalfInt operator[](std::size_t i) const { return HalfInt::from_doubled(doubled_[i]); }
  std::int64_t doubled(std::size_t i) const { return doubled_[i]; }
  const std::vector<std::int64_t>& doubled() const { return doubled_; }

  bool all_integral() const {
    return std::all_of(doubled_.begin(), doubled_.end(), [](auto v) { return v % 2 == 0; });
  }
  bool all_half_odd() const {
    return std::all_of(doubled_.begin(), doubled_.end(), [](auto v) { return v % 2 != 0; });
  }

  Weight operator+(const Weight& o) const { return zip(o, 1); }
  Weight operator-(const Weight& o) const { return zip(o, -1); }
  Weight operator-() const { return scaled(-1); }
  Weight scaled(std::int64_t c) const {
    Weight r = *this;
    for (auto& v : r.doubled_) v *= c;
    return r;
  }
  // Adds c/2 to every coordinate.
  Weight shifted_by_halves(std::int64_t c) const {
    Weight r = *this;
    for (auto& v : r.doubled_) v += c;
    return r;
  }
  Weight with_last_negated() const {
    Weight r = *this;
    if (!r.doubled_.empty()) r.doubled_.back() = -r.doubled_.back();
    return r;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < doubled_.size(); ++i) {
      if (i) s += ",";
      s += (*this)[i].str();
    }
    return s + ")";
  }

  auto operator<=>(const Weight&) const = default;

 private:
  Weight zip(const Weight& o, std::int64_t sign) const {
    if (o.rank() != rank()) throw InvalidWeight("weight length mismatch");
    Weight r = *this;
    for (std::size_t i = 0; i < doubled_.size(); ++i) r.doubled_[i] += sign * o.doubled_[i];
    return r;
  }

  std::vector<std::int64_t> doubled_;
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

// Throws InvalidWeight unless w has length n and lies in the weight lattice of the family.
inline void check_lattice(LieFamily f, int n, const Weight& w) {
  if (w.rank() != n) {
    throw InvalidWeight("weight " + w.str() + " has length " + std::to_string(w.rank()) +
                        ", expected " + std::to_string(n));
  }
  if (f == LieFamily::C) {
    if (!w.all_integral()) throw InvalidWeight("type C weights must be integral: " + w.str());
  } else if (!w.all_integral() && !w.all_half_odd()) {
    throw InvalidWeight("coordinates must be all integral or all half-odd: " + w.str());
  }
}

/// A root ±e_i, ±2e_i or ±(e_i ± e_j), dense integer coordinates.
struct Root {
  std::vector<int> coords;

  int rank() const { return static_cast<int>(coords.size()); }

  std::string label() const {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      int c = coords[i];
      if (c == 0) continue;
      if (c < 0) s += "-";
      else if (!s.empty()) s += "+";
      if (std::abs(c) != 1) s += std::to_string(std::abs(c));
      s += "e" + std::to_string(i + 1);
    }
    return s;
  }

  bool operator==(const Root&) const = default;
};

inline Root make_root(int n, int i, int ci, int j = -1, int cj = 0) {
  Root r{std::vector<int>(n, 0)};
  r.coords[i] = ci;
  if (j >= 0) r.coords[j] = cj;
  return r;
}

inline Weight rho(LieFamily f, int n) {
  check_rank(f, n);
  std::vector<std::int64_t> d(n);
  for (int i = 0; i < n; ++i) {
    switch (f) {
      case LieFamily::C: d[i] = 2 * (n - i); break;
      case LieFamily::B: d[i] = 2 * (n - i) - 1; break;
      case LieFamily::D: d[i] = 2 * (n - 1 - i); break;
    }
  }
  return Weight(std::move(d));
}

// Short/long roots first (2e_i or e_i), then e_i - e_j, e_i + e_j for i < j.
inline std::vector<Root> positive_roots(LieFamily f, int n) {
  check_rank(f, n);
  std::vector<Root> roots;
  roots.reserve(static_cast<std::size_t>(n) * n);
  if (f != LieFamily::D) {
    const int c = f == LieFamily::C ? 2 : 1;
    for (int i = 0; i < n; ++i) roots.push_back(make_root(n, i, c));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      roots.push_back(make_root(n, i, 1, j, -1));
      roots.push_back(make_root(n, i, 1, j, 1));
    }
  }
  return roots;
}

/// Simple roots ε_1..ε_n in the standard numbering.
inline std::vector<Root> simple_roots(LieFamily f, int n) {
  check_rank(f, n);
  std::vector<Root> roots;
  for (int i = 0; i + 1 < n; ++i) roots.push_back(make_root(n, i, 1, i + 1, -1));
  switch (f) {
    case LieFamily::C: roots.push_back(make_root(n, n - 1, 2)); break;
    case LieFamily::B: roots.push_back(make_root(n, n - 1, 1)); break;
    case LieFamily::D: roots.push_back(make_root(n, n - 2, 1, n - 1, 1)); break;
  }
  return roots;
}

inline Weight fundamental_weight(LieFamily f, int n, int k) {
  check_rank(f, n);
  if (k < 1 || k > n) {
    throw InvalidRank("node " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  }
  std::vector<std::int64_t> d(n, 0);
  const bool spin = (f == LieFamily::B && k == n) || (f == LieFamily::D && k >= n - 1);
  if (!spin) {
    for (int i = 0; i < k; ++i) d[i] = 2;
    return Weight(std::move(d));
  }
  for (int i = 0; i < n; ++i) d[i] = 1;
  if (f == LieFamily::D && k == n - 1) d[n - 1] = -1;
  return Weight(std::move(d));
}

inline HalfInt inner(const Weight& w, const Root& r) {
  if (w.rank() != r.rank()) throw InvalidWeight("inner: length mismatch");
  std::int64_t twice = 0;
  for (int i = 0; i < w.rank(); ++i) twice += w.doubled(i) * r.coords[i];
  return HalfInt::from_doubled(twice);
}

inline bool is_singular(const Weight& w, LieFamily f, int n) {
  for (const auto& r : positive_roots(f, n)) {
    if (inner(w, r).doubled() == 0) return true;
  }
  return false;
}

struct Dominantized {
  Weight dominant;
  int length = 0;
};

/// The unique dominant Weyl translate of a regular weight, with the Weyl length
/// of the translating element; std::nullopt for singular weights.
inline std::optional<Dominantized> dominantize(const Weight& w, LieFamily f, int n) {
  if (w.rank() != n) throw InvalidWeight("dominantize: weight " + w.str() + " has wrong length");
  int length = 0;
  for (const auto& r : positive_roots(f, n)) {
    auto p = inner(w, r).doubled();
    if (p == 0) return std::nullopt;
    if (p < 0) ++length;
  }
  std::vector<std::int64_t> d = w.doubled();
  int negatives = 0;
  for (auto& v : d) {
    if (v < 0) {
      ++negatives;
      v = -v;
    }
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  // D_n only contains even sign changes.
  if (f == LieFamily::D && negatives % 2 == 1) d.back() = -d.back();
  return Dominantized{Weight(std::move(d)), length};
}

inline bool is_dominant(const Weight& w, LieFamily f, int n) {
  for (const auto& r : simple_roots(f, n)) {
    if (inner(w, r).doubled() < 0) return false;
  }
  return true;
}

}  // namespace ugr
