#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ttg/errors.hpp"
#include "ttg/map.hpp"
#include "ttg/space.hpp"

namespace ttg {

// Canonical form of a finite poset: the lexicographically minimal row-major
// adjacency bitstring over all relabelings. Brute force over permutations;
// intended for the small enumeration corpus only.
inline std::string canonical_form(const FiniteSpectralSpace& s) {
  const std::size_t n = s.size();
  if (n > 8) throw CapExceededError("canonical_form supports at most 8 points");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cur(n * n, '0');
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        cur[i * n + j] = s.leq(perm[i], perm[j]) ? '1' : '0';
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool are_isomorphic(const FiniteSpectralSpace& a, const FiniteSpectralSpace& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace detail {

inline FiniteSpectralSpace space_from_matrix_string(std::size_t n, const std::string& mat) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = mat[i * n + j] == '1';
  return FiniteSpectralSpace::from_relation(std::move(ids), std::move(leq));
}

}  // namespace detail

// All posets on n points up to isomorphism, deduplicated by canonical form.
// Every finite poset admits a linear extension, so it is enough to close the
// strict relations contained in the natural order 0 < 1 < ... < n-1 and
// canonicalize. Results are memoized per n.
inline const std::vector<FiniteSpectralSpace>& enumerate_posets(int n) {
  if (n < 1 || n > 6) throw InputError("enumerate_posets expects 1 <= n <= 6");
  static std::mutex mu;
  static std::map<int, std::vector<FiniteSpectralSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j) slots.emplace_back(i, j);

  std::set<std::string> seen;
  const std::size_t total = std::size_t{1} << slots.size();
  for (std::size_t bits = 0; bits < total; ++bits) {
    std::vector<std::vector<char>> rel(un, std::vector<char>(un, 0));
    for (std::size_t i = 0; i < un; ++i) rel[i][i] = 1;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (bits & (std::size_t{1} << k)) rel[slots[k].first][slots[k].second] = 1;
    // Keep only relations that are already transitive, so each labeled poset
    // compatible with the natural order is visited exactly once.
    bool transitive = true;
    for (std::size_t i = 0; i < un && transitive; ++i)
      for (std::size_t j = i + 1; j < un && transitive; ++j) {
        if (!rel[i][j]) continue;
        for (std::size_t k = j + 1; k < un; ++k)
          if (rel[j][k] && !rel[i][k]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < un; ++i) ids.push_back("x" + std::to_string(i));
    FiniteSpectralSpace space = FiniteSpectralSpace::from_relation(ids, std::move(rel));
    seen.insert(canonical_form(space));
  }
  // std::set iteration gives a deterministic order by canonical form.
  std::vector<FiniteSpectralSpace> out;
  for (const auto& canon : seen) out.push_back(detail::space_from_matrix_string(un, canon));
  return cache.emplace(n, std::move(out)).first->second;
}

// All monotone surjections X -> Y, as assignment vectors. Backtracking with
// monotonicity and surjectivity pruning.
inline std::vector<std::vector<PointIndex>> enumerate_monotone_surjection_assignments(
    const FiniteSpectralSpace& X, const FiniteSpectralSpace& Y) {
  std::vector<std::vector<PointIndex>> out;
  if (X.size() < Y.size()) return out;
  if (Y.size() == 0) {
    if (X.size() == 0) out.push_back({});
    return out;
  }
  std::vector<PointIndex> assign(X.size(), 0);
  std::vector<std::size_t> fiber_count(Y.size(), 0);
  std::size_t unhit = Y.size();

  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == X.size()) {
      if (unhit == 0) out.push_back(assign);
      return;
    }
    if (unhit > X.size() - x) return;  // cannot become surjective
    for (std::size_t y = 0; y < Y.size(); ++y) {
      bool ok = true;
      for (std::size_t prev = 0; prev < x && ok; ++prev) {
        if (X.leq(prev, x) && !Y.leq(assign[prev], y)) ok = false;
        if (X.leq(x, prev) && !Y.leq(y, assign[prev])) ok = false;
      }
      if (!ok) continue;
      assign[x] = y;
      if (fiber_count[y]++ == 0) --unhit;
      self(self, x + 1);
      if (--fiber_count[y] == 0) ++unhit;
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<SpectralMapData> enumerate_monotone_surjections(
    const FiniteSpectralSpace& X, const FiniteSpectralSpace& Y) {
  std::vector<SpectralMapData> out;
  for (auto& assign : enumerate_monotone_surjection_assignments(X, Y))
    out.emplace_back(X, Y, std::move(assign));
  return out;
}

}  // namespace ttg
