#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "ttg/errors.hpp"
#include "ttg/map.hpp"
#include "ttg/space.hpp"

namespace ttg {

// Quotient-type predicates on maps of finite spectral spaces. Every
// predicate treats the codomain order as the candidate quotient topology;
// on finite spaces "spectral quotient" and "topological quotient" coincide.

// ---------------------------------------------------------------------------
// Cap for the predicates that enumerate convex subsets or down-sets of the
// codomain exhaustively. These are oracles: exactness over speed. The cap is
// a hard input check, overridable through TTG_MAX_POINTS (at your own risk);
// the mask-based enumeration additionally requires at most 31 points.
inline std::size_t predicate_point_cap() {
  if (const char* env = std::getenv("TTG_MAX_POINTS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 15;
}

namespace detail {

inline void check_enumeration_cap(const FiniteSpectralSpace& codomain,
                                  const char* predicate) {
  std::size_t cap = predicate_point_cap();
  if (codomain.size() > cap)
    throw CapExceededError(std::string(predicate) + ": codomain has " +
                           std::to_string(codomain.size()) +
                           " points, exceeding the cap of " + std::to_string(cap) +
                           " (set TTG_MAX_POINTS to raise it)");
  if (codomain.size() > 31)
    throw CapExceededError(std::string(predicate) +
                           ": subset enumeration supports at most 31 points");
}

inline std::string set_label(const FiniteSpectralSpace& s, std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (mask & (std::uint32_t{1} << i)) {
      if (!first) out += ",";
      out += s.id(i);
      first = false;
    }
  return out + "}";
}

inline std::string set_label(const FiniteSpectralSpace& s, const PointSet& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ",";
    out += s.id(pts[i]);
  }
  return out + "}";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Topological quotient. Finite-space characterization: the map is surjective
// and the codomain order equals the reflexive-transitive closure of the
// pushforward relation { (f(x), f(x')) : x <= x' }. O(n^3) instead of subset
// enumeration; the test suite keeps the brute-force definition as an oracle.
inline std::optional<std::string> topological_quotient_violation(const SpectralMapData& m) {
  const auto& X = m.domain();
  const auto& Y = m.codomain();
  if (!m.is_surjective()) {
    for (std::size_t y = 0; y < Y.size(); ++y)
      if (m.fiber(y).empty())
        return "not surjective: empty fiber over '" + Y.id(y) + "'";
  }
  const std::size_t n = Y.size();
  std::vector<std::vector<char>> push(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) push[i][i] = 1;
  for (std::size_t x = 0; x < X.size(); ++x)
    for (std::size_t x2 = 0; x2 < X.size(); ++x2)
      if (X.leq(x, x2)) push[m(x)][m(x2)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (push[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (push[k][j]) push[i][j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (Y.leq(i, j) && !push[i][j])
        return "specialization ('" + Y.id(i) + "','" + Y.id(j) +
               "') is not induced from the domain";
  return std::nullopt;
}

inline bool is_topological_quotient(const SpectralMapData& m) {
  return !topological_quotient_violation(m).has_value();
}

// On a finite codomain a spectral quotient is the same thing.
inline bool is_spectral_quotient(const SpectralMapData& m) {
  return is_topological_quotient(m);
}

// ---------------------------------------------------------------------------
// Weak spectral quotient: surjective, and every basic constructible subset
// B of the codomain (equivalently, every order-convex subset) is Thomason
// closed (an up-set) whenever its preimage is. Exact enumeration.
namespace detail {

// Convexity via interval masks: B is convex iff for x,z in B the whole
// interval [x,z] lies in B.
inline std::optional<std::string> weak_violation_uncapped(const SpectralMapData& m) {
  const auto& X = m.domain();
  const auto& Y = m.codomain();
  if (!m.is_surjective()) return std::string("not surjective");
  const std::size_t n = Y.size();
  std::vector<std::vector<std::uint32_t>> interval(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z)
      if (Y.leq(x, z))
        for (std::size_t y = 0; y < n; ++y)
          if (Y.leq(x, y) && Y.leq(y, z)) interval[x][z] |= std::uint32_t{1} << y;
  std::vector<std::uint32_t> up_mask(n, 0);  // strict successors per point
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && Y.leq(x, y)) up_mask[x] |= std::uint32_t{1} << y;

  const std::uint32_t full = (n >= 32) ? 0xffffffffu : ((std::uint32_t{1} << n) - 1);
  for (std::uint32_t b = 0; b <= full; ++b) {
    bool convex = true;
    for (std::size_t x = 0; x < n && convex; ++x) {
      if (!(b & (std::uint32_t{1} << x))) continue;
      for (std::size_t z = 0; z < n && convex; ++z) {
        if (!(b & (std::uint32_t{1} << z)) || !Y.leq(x, z)) continue;
        if ((interval[x][z] & ~b) != 0) convex = false;
      }
    }
    if (!convex) continue;
    bool b_up = true;
    for (std::size_t x = 0; x < n && b_up; ++x)
      if ((b & (std::uint32_t{1} << x)) && (up_mask[x] & ~b)) b_up = false;
    if (b_up) continue;  // implication trivially satisfied
    // Is the preimage an up-set?
    bool pre_up = true;
    for (std::size_t x = 0; x < X.size() && pre_up; ++x) {
      if (!(b & (std::uint32_t{1} << m(x)))) continue;
      for (std::size_t x2 = 0; x2 < X.size() && pre_up; ++x2)
        if (X.leq(x, x2) && !(b & (std::uint32_t{1} << m(x2)))) pre_up = false;
    }
    if (pre_up)
      return "preimage of the basic constructible set " + set_label(Y, b) +
             " is Thomason closed but the set is not";
    if (b == full) break;  // avoid overflow when n == 32
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<std::string> weak_spectral_quotient_violation(const SpectralMapData& m) {
  detail::check_enumeration_cap(m.codomain(), "weak spectral quotient");
  return detail::weak_violation_uncapped(m);
}

inline bool is_weak_spectral_quotient(const SpectralMapData& m) {
  return !weak_spectral_quotient_violation(m).has_value();
}

// ---------------------------------------------------------------------------
// Heritable weak spectral quotient: the corestriction to every quasi-compact
// open (every down-set) is a weak spectral quotient. On finite spaces the
// strongly heritable variant (corestriction to complements of Thomason
// subsets) quantifies over exactly the same down-sets, so both names answer
// this predicate.
inline std::optional<std::string> heritable_weak_violation(const SpectralMapData& m) {
  detail::check_enumeration_cap(m.codomain(), "heritable weak spectral quotient");
  for (const auto& u : m.codomain().all_down_sets()) {
    PointSet u_points;
    for (std::size_t i = 0; i < m.codomain().size(); ++i)
      if (u.test(i)) u_points.push_back(i);
    auto core = m.corestrict(u_points);
    if (auto why = detail::weak_violation_uncapped(core))
      return "corestriction to the open set " +
             detail::set_label(m.codomain(), u_points) + " fails: " + *why;
  }
  return std::nullopt;
}

inline bool is_heritable_weak_spectral_quotient(const SpectralMapData& m) {
  return !heritable_weak_violation(m).has_value();
}

// ---------------------------------------------------------------------------
// Weak lifting from y' to y (for y <= y'): a chain x_n, ..., x_0 in the
// domain with f(x_n) = y, f(x_0) = y', where each x_i is a specialization of
// a point in the fiber of f(x_{i+1}). Decided by reachability in the graph
// with an edge a -> b whenever some w in the fiber of f(a) has w <= b.
inline bool has_weak_lifting(const SpectralMapData& m, PointIndex y, PointIndex y_prime) {
  const auto& X = m.domain();
  const auto& Y = m.codomain();
  if (!Y.leq(y, y_prime))
    throw PreconditionError("'" + Y.id(y) + "' does not specialize to '" +
                            Y.id(y_prime) + "'");
  // Points reachable by one step out of a fiber: b is a successor of fiber F
  // when some w in F satisfies w <= b.
  std::vector<char> reached(X.size(), 0);
  std::queue<PointIndex> q;
  for (auto x : m.fiber(y)) {
    if (!reached[x]) {
      reached[x] = 1;
      q.push(x);
    }
  }
  while (!q.empty()) {
    PointIndex a = q.front();
    q.pop();
    if (m(a) == y_prime) return true;
    for (auto w : m.fiber(m(a)))
      for (std::size_t b = 0; b < X.size(); ++b)
        if (!reached[b] && X.leq(w, b)) {
          reached[b] = 1;
          q.push(b);
        }
  }
  return false;
}

inline bool has_weak_lifting_property(const SpectralMapData& m) {
  const auto& Y = m.codomain();
  for (std::size_t y = 0; y < Y.size(); ++y)
    for (std::size_t y2 = 0; y2 < Y.size(); ++y2)
      if (Y.leq(y, y2) && !has_weak_lifting(m, y, y2)) return false;
  return true;
}

inline std::optional<std::string> weak_lifting_violation(const SpectralMapData& m) {
  const auto& Y = m.codomain();
  for (std::size_t y = 0; y < Y.size(); ++y)
    for (std::size_t y2 = 0; y2 < Y.size(); ++y2)
      if (Y.leq(y, y2) && !has_weak_lifting(m, y, y2))
        return "no weak lifting for the specialization ('" + Y.id(y) + "','" +
               Y.id(y2) + "')";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Strong topological quotient: the corestriction to every complement of a
// Thomason subset (every down-set) is a topological quotient. Three
// equivalent characterizations on a finite codomain; the immediate-
// specialization one is polynomial and serves as the operation itself, the
// other two are kept as cross-checking routes.
inline std::optional<std::string> strong_topological_violation(const SpectralMapData& m) {
  const auto& X = m.domain();
  const auto& Y = m.codomain();
  if (!m.is_surjective()) return std::string("not surjective");
  for (auto [y, y2] : Y.covering_pairs()) {
    bool lifts = false;
    for (std::size_t x = 0; x < X.size() && !lifts; ++x) {
      if (m(x) != y) continue;
      for (std::size_t x2 = 0; x2 < X.size() && !lifts; ++x2)
        if (m(x2) == y2 && X.leq(x, x2)) lifts = true;
    }
    if (!lifts)
      return "immediate specialization ('" + Y.id(y) + "','" + Y.id(y2) +
             "') does not lift";
  }
  return std::nullopt;
}

inline bool is_strong_topological_quotient(const SpectralMapData& m) {
  return !strong_topological_violation(m).has_value();
}

inline bool strong_topological_via_corestrictions(const SpectralMapData& m) {
  for (const auto& u : m.codomain().all_down_sets()) {
    PointSet u_points;
    for (std::size_t i = 0; i < m.codomain().size(); ++i)
      if (u.test(i)) u_points.push_back(i);
    if (!is_topological_quotient(m.corestrict(u_points))) return false;
  }
  return true;
}

inline bool strong_topological_via_weak_lifting(const SpectralMapData& m) {
  return has_weak_lifting_property(m);
}

// All three routes, for agreement checks.
struct StrongQuotientRoutes {
  bool immediate_lifting;
  bool corestrictions;
  bool weak_lifting;
  bool agree() const {
    return immediate_lifting == corestrictions && corestrictions == weak_lifting;
  }
};

inline StrongQuotientRoutes strong_quotient_routes(const SpectralMapData& m) {
  return {is_strong_topological_quotient(m),
          strong_topological_via_corestrictions(m),
          strong_topological_via_weak_lifting(m)};
}

// ---------------------------------------------------------------------------
// Fiber connectivity. Empty fibers pass; surjectivity is a separate check.
inline std::optional<std::string> disconnected_fiber(const SpectralMapData& m) {
  for (std::size_t y = 0; y < m.codomain().size(); ++y) {
    auto f = m.fiber(y);
    if (m.domain().connected_components(f).size() > 1)
      return "fiber over '" + m.codomain().id(y) + "' is not connected";
  }
  return std::nullopt;
}

inline bool fibers_connected(const SpectralMapData& m) {
  return !disconnected_fiber(m).has_value();
}

}  // namespace ttg
