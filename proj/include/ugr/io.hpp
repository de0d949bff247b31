#pragma once

// Text forms of varieties and weights. Weights are written exactly: each
// coordinate is "a" or "a/2" for an integer a, never a decimal.

#include "ugr/grassmannian.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace ugr {

inline std::string component_name(SpinorComponent c) {
  switch (c) {
    case SpinorComponent::plus: return "plus";
    case SpinorComponent::minus: return "minus";
    case SpinorComponent::none: break;
  }
  return "null";
}

/// k as in OGr(k,2n): both spinor components report k = n.
inline int isotropic_dimension(const IsotropicGrassmannian& x) {
  return x.component() == SpinorComponent::none ? x.node() : x.rank();
}

/// "C:n=4:k=2", or "D:n=4:k=4:plus|minus" for the type D maximal components.
inline std::string descriptor(const IsotropicGrassmannian& x) {
  std::string s = std::string(1, family_letter(x.family())) + ":n=" + std::to_string(x.rank()) +
                  ":k=" + std::to_string(isotropic_dimension(x));
  if (x.component() != SpinorComponent::none) s += ":" + component_name(x.component());
  return s;
}

/// Classical name: IGr(k,2n), LGr(n,2n), OGr(k,2n+1), OGr(k,2n), OGr(n,2n):plus|minus.
inline std::string variety_name(const IsotropicGrassmannian& x) {
  const int n = x.rank();
  const int k = x.node();
  switch (x.family()) {
    case LieFamily::C:
      if (k == n) return "LGr(" + std::to_string(n) + "," + std::to_string(2 * n) + ")";
      return "IGr(" + std::to_string(k) + "," + std::to_string(2 * n) + ")";
    case LieFamily::B:
      return "OGr(" + std::to_string(k) + "," + std::to_string(2 * n + 1) + ")";
    case LieFamily::D:
      if (x.is_maximal()) {
        return "OGr(" + std::to_string(n) + "," + std::to_string(2 * n) + "):" +
               component_name(x.component());
      }
      return "OGr(" + std::to_string(k) + "," + std::to_string(2 * n) + ")";
  }
  return "?";
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::int64_t parse_int(std::string_view s, std::string_view context) {
  std::string t = trim(s);
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError("cannot parse integer '" + std::string(s) + "' in " + std::string(context));
  }
  return v;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

inline std::string format_weight(const Weight& w) {
  std::string s;
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ",";
    s += w[i].str();
  }
  return s;
}

/// A single exact coordinate: "a" or "a/2".
inline HalfInt parse_coordinate(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return HalfInt::from_int(detail::parse_int(text, "weight coordinate"));
  }
  if (detail::parse_int(text.substr(slash + 1), "weight coordinate") != 2) {
    throw ParseError("only denominators of 2 are allowed: '" + std::string(text) + "'");
  }
  return HalfInt::from_doubled(detail::parse_int(text.substr(0, slash), "weight coordinate"));
}

/// Coordinates in the orthonormal basis ("1/2,1/2,-1/2"), optionally in
/// parentheses, or fundamental-weight coefficients "w:c1,…,cn" for X's group.
inline Weight parse_weight(std::string_view text, const IsotropicGrassmannian& x) {
  std::string s = detail::trim(text);
  if (s.rfind("w:", 0) == 0) {
    const auto parts = detail::split(std::string_view(s).substr(2), ',');
    if (static_cast<int>(parts.size()) != x.rank()) {
      throw ParseError("expected " + std::to_string(x.rank()) + " fundamental-weight coefficients");
    }
    Weight w = Weight::zero(x.rank());
    for (int i = 0; i < x.rank(); ++i) {
      const auto c = detail::parse_int(parts[i], "fundamental-weight coefficient");
      w = w + fundamental_weight(x.family(), x.rank(), i + 1).scaled(c);
    }
    return w;
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<HalfInt> coords;
  for (const auto& part : detail::split(s, ',')) coords.push_back(parse_coordinate(part));
  return Weight::from_halves(coords);
}

/// Accepts "C:n=4:k=2[:plus|:minus]", "IGr(k,2n)", "LGr(n,2n)", "OGr(k,m)"
/// (m odd → type B, m even → type D), "OGr(n,2n):plus|minus" and "Qd".
inline IsotropicGrassmannian parse_variety(std::string_view text) {
  const std::string s = detail::trim(text);
  std::smatch m;
  static const std::regex generic(R"(^([BCD]):n=(-?\d+):k=(-?\d+)(?::(plus|minus))?$)");
  static const std::regex named(R"(^(IGr|LGr|OGr)\(\s*(\d+)\s*,\s*(\d+)\s*\)(?::(plus|minus))?$)");
  static const std::regex quadric(R"(^Q(\d+)$)");
  const auto fail = [&s](const std::string& why) {
    return ParseError("cannot parse variety '" + s + "': " + why);
  };
  const auto num = [](const std::ssub_match& g) { return detail::parse_int(g.str(), "variety"); };
  try {
    if (std::regex_match(s, m, generic)) {
      const LieFamily f = m[1] == "B" ? LieFamily::B : m[1] == "C" ? LieFamily::C : LieFamily::D;
      const int n = static_cast<int>(num(m[2]));
      const int k = static_cast<int>(num(m[3]));
      if (m[4].matched) {
        if (f != LieFamily::D || k != n) throw fail("a component applies only to D with k=n");
        return IsotropicGrassmannian::spinor(
            n, m[4] == "plus" ? SpinorComponent::plus : SpinorComponent::minus);
      }
      return {f, n, k};
    }
    if (std::regex_match(s, m, named)) {
      const std::string kind = m[1];
      const int k = static_cast<int>(num(m[2]));
      const int dim = static_cast<int>(num(m[3]));
      const bool has_component = m[4].matched;
      if (kind == "IGr" || kind == "LGr") {
        if (dim % 2 != 0) throw fail("symplectic space must be even-dimensional");
        if (has_component) throw fail("components exist only for OGr(n,2n)");
        if (kind == "LGr" && k != dim / 2) throw fail("LGr needs k = n");
        return {LieFamily::C, dim / 2, k};
      }
      if (dim % 2 == 1) {
        if (has_component) throw fail("components exist only for OGr(n,2n)");
        return {LieFamily::B, (dim - 1) / 2, k};
      }
      const int n = dim / 2;
      if (k == n) {
        const auto c = has_component && m[4] == "minus" ? SpinorComponent::minus
                                                        : SpinorComponent::plus;
        return IsotropicGrassmannian::spinor(n, c);
      }
      if (has_component) throw fail("components exist only for OGr(n,2n)");
      if (k == n - 1) throw fail("OGr(n-1,2n) is not a quotient by a maximal parabolic");
      return {LieFamily::D, n, k};
    }
    if (std::regex_match(s, m, quadric)) {
      const int d = static_cast<int>(num(m[1]));
      if (d < 3) throw fail("quadrics start at Q3");
      if (d % 2 == 1) return {LieFamily::B, (d + 1) / 2, 1};
      return {LieFamily::D, (d + 2) / 2, 1};
    }
  } catch (const InvalidRank& e) {
    throw fail(e.what());
  }
  throw fail("unrecognized form");
}

/// "a..b" (inclusive) or a single integer.
inline std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
  const std::string s = detail::trim(text);
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = detail::parse_int(s, "twist range");
    return {v, v};
  }
  const auto a = detail::parse_int(std::string_view(s).substr(0, dots), "twist range");
  const auto b = detail::parse_int(std::string_view(s).substr(dots + 2), "twist range");
  if (a > b) throw ParseError("empty twist range '" + s + "'");
  return {a, b};
}

}  // namespace ugr
