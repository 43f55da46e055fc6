#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ttg/bitset.hpp"
#include "ttg/errors.hpp"

namespace ttg {

using PointIndex = std::size_t;
using PointSet = std::vector<PointIndex>;  // sorted, duplicate-free

// A finite spectral space presented by its specialization order: x <= y means
// "x specializes to y" (y lies in the closure of {x}). Closed sets are the
// up-sets of <=, open (equivalently quasi-compact open) sets the down-sets,
// and every closed set is Thomason closed. The relation is normalized to its
// reflexive-transitive closure at construction; a failure of antisymmetry is
// reported as NonT0Error, never repaired silently.
class FiniteSpectralSpace {
public:
  FiniteSpectralSpace() = default;

  FiniteSpectralSpace(std::vector<std::string> points,
                      const std::vector<std::pair<std::string, std::string>>& specializations) {
    init_ids(std::move(points));
    leq_.assign(size(), std::vector<char>(size(), 0));
    for (std::size_t i = 0; i < size(); ++i) leq_[i][i] = 1;
    for (const auto& [a, b] : specializations) leq_[index(a)][index(b)] = 1;
    transitive_close();
    check_antisymmetry();
  }

  // Construction from an index-level relation matrix; still normalized.
  static FiniteSpectralSpace from_relation(std::vector<std::string> points,
                                           std::vector<std::vector<char>> leq) {
    FiniteSpectralSpace s;
    s.leq_ = std::move(leq);
    s.init_ids(std::move(points));
    for (std::size_t i = 0; i < s.size(); ++i) s.leq_[i][i] = 1;
    s.transitive_close();
    s.check_antisymmetry();
    return s;
  }

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(PointIndex i) const { return ids_.at(i); }

  bool has_point(const std::string& id) const { return index_.count(id) > 0; }

  PointIndex index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown point id '" + id + "'");
    return it->second;
  }

  bool leq(PointIndex x, PointIndex y) const { return leq_[x][y] != 0; }
  bool comparable(PointIndex x, PointIndex y) const { return leq(x, y) || leq(y, x); }

  // Up-closure: all points reachable upward from s.
  PointSet closure(const PointSet& s) const {
    check_points(s);
    std::vector<char> in(size(), 0);
    for (auto x : s)
      for (std::size_t y = 0; y < size(); ++y)
        if (leq_[x][y]) in[y] = 1;
    return collect(in);
  }

  // Down-closure: all generizations of points of s.
  PointSet generization(const PointSet& s) const {
    check_points(s);
    std::vector<char> in(size(), 0);
    for (auto x : s)
      for (std::size_t y = 0; y < size(); ++y)
        if (leq_[y][x]) in[y] = 1;
    return collect(in);
  }

  bool is_up_set(const std::vector<char>& in) const {
    for (std::size_t x = 0; x < size(); ++x)
      if (in[x])
        for (std::size_t y = 0; y < size(); ++y)
          if (leq_[x][y] && !in[y]) return false;
    return true;
  }

  bool is_down_set(const std::vector<char>& in) const {
    for (std::size_t x = 0; x < size(); ++x)
      if (in[x])
        for (std::size_t y = 0; y < size(); ++y)
          if (leq_[y][x] && !in[y]) return false;
    return true;
  }

  bool is_up_set(const PointSet& s) const { return is_up_set(mask(s)); }
  bool is_down_set(const PointSet& s) const { return is_down_set(mask(s)); }

  std::vector<char> mask(const PointSet& s) const {
    check_points(s);
    std::vector<char> in(size(), 0);
    for (auto x : s) in[x] = 1;
    return in;
  }

  // Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<PointIndex, PointIndex>> covering_pairs() const {
    std::vector<std::pair<PointIndex, PointIndex>> covers;
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y) {
        if (x == y || !leq_[x][y]) continue;
        bool immediate = true;
        for (std::size_t z = 0; z < size() && immediate; ++z)
          if (z != x && z != y && leq_[x][z] && leq_[z][y]) immediate = false;
        if (immediate) covers.emplace_back(x, y);
      }
    return covers;
  }

  PointSet minimal_points() const {
    PointSet out;
    for (std::size_t x = 0; x < size(); ++x) {
      bool minimal = true;
      for (std::size_t y = 0; y < size() && minimal; ++y)
        if (y != x && leq_[y][x]) minimal = false;
      if (minimal) out.push_back(x);
    }
    return out;
  }

  PointSet maximal_points() const {
    PointSet out;
    for (std::size_t x = 0; x < size(); ++x) {
      bool maximal = true;
      for (std::size_t y = 0; y < size() && maximal; ++y)
        if (y != x && leq_[x][y]) maximal = false;
      if (maximal) out.push_back(x);
    }
    return out;
  }

  // Connected components of the comparability graph restricted to s. On a
  // finite space this is exactly topological connectivity of the subspace.
  std::vector<PointSet> connected_components(const PointSet& s) const {
    check_points(s);
    std::vector<PointSet> components;
    std::unordered_set<PointIndex> todo(s.begin(), s.end());
    while (!todo.empty()) {
      PointIndex seed = *std::min_element(todo.begin(), todo.end());
      PointSet comp;
      std::queue<PointIndex> q;
      q.push(seed);
      todo.erase(seed);
      while (!q.empty()) {
        PointIndex x = q.front();
        q.pop();
        comp.push_back(x);
        for (auto it = todo.begin(); it != todo.end();) {
          if (comparable(x, *it)) {
            q.push(*it);
            it = todo.erase(it);
          } else {
            ++it;
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
    std::sort(components.begin(), components.end());
    return components;
  }

  bool is_connected(const PointSet& s) const {
    return connected_components(s).size() <= 1;
  }

  bool is_connected() const { return is_connected(all_points()); }

  PointSet all_points() const {
    PointSet s(size());
    for (std::size_t i = 0; i < size(); ++i) s[i] = i;
    return s;
  }

  // Induced subposet on s, keeping point ids. Returns the space together
  // with the map from new indices to old ones.
  std::pair<FiniteSpectralSpace, PointSet> restrict_to(const PointSet& s) const {
    check_points(s);
    PointSet sorted(s);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::string> pts;
    pts.reserve(sorted.size());
    for (auto x : sorted) pts.push_back(ids_[x]);
    std::vector<std::vector<char>> sub(sorted.size(), std::vector<char>(sorted.size(), 0));
    for (std::size_t i = 0; i < sorted.size(); ++i)
      for (std::size_t j = 0; j < sorted.size(); ++j)
        sub[i][j] = leq_[sorted[i]][sorted[j]];
    return {from_relation(std::move(pts), std::move(sub)), sorted};
  }

  // All down-sets (open subsets), via breadth-first walk of the ideal
  // lattice: grow each down-set by one minimal point of its complement.
  // Output-sensitive; fine for the narrow posets this library works with.
  std::vector<Bitset> all_down_sets() const {
    std::vector<Bitset> out;
    std::unordered_set<Bitset, BitsetHash> seen;
    Bitset empty(size());
    out.push_back(empty);
    seen.insert(empty);
    for (std::size_t k = 0; k < out.size(); ++k) {
      Bitset cur = out[k];
      for (std::size_t x = 0; x < size(); ++x) {
        if (cur.test(x)) continue;
        bool addable = true;  // all strict predecessors already present
        for (std::size_t y = 0; y < size() && addable; ++y)
          if (y != x && leq_[y][x] && !cur.test(y)) addable = false;
        if (!addable) continue;
        Bitset next = cur;
        next.set(x);
        if (seen.insert(next).second) out.push_back(next);
      }
    }
    return out;
  }

  // Identical point labels with identical order relation.
  bool same_labeled_order(const FiniteSpectralSpace& other) const {
    if (size() != other.size()) return false;
    for (const auto& id : ids_)
      if (!other.has_point(id)) return false;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (leq(i, j) != other.leq(other.index(ids_[i]), other.index(ids_[j])))
          return false;
    return true;
  }

private:
  void init_ids(std::vector<std::string> points) {
    ids_ = std::move(points);
    index_.clear();
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (!index_.emplace(ids_[i], i).second)
        throw InputError("duplicate point id '" + ids_[i] + "'");
    }
  }

  void transitive_close() {
    const std::size_t n = size();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq_[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq_[k][j]) leq_[i][j] = 1;
  }

  void check_antisymmetry() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (leq_[i][j] && leq_[j][i]) throw NonT0Error(ids_[i], ids_[j]);
  }

  void check_points(const PointSet& s) const {
    for (auto x : s)
      if (x >= size()) throw InputError("point index out of range");
  }

  PointSet collect(const std::vector<char>& in) const {
    PointSet out;
    for (std::size_t i = 0; i < size(); ++i)
      if (in[i]) out.push_back(i);
    return out;
  }

  std::vector<std::string> ids_;
  std::unordered_map<std::string, PointIndex> index_;
  std::vector<std::vector<char>> leq_;
};

// Free function mirror of the closure operation on labeled sets.
inline std::vector<std::string> closure_labels(const FiniteSpectralSpace& space,
                                               const std::vector<std::string>& labels) {
  PointSet s;
  for (const auto& l : labels) s.push_back(space.index(l));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<std::string> out;
  for (auto x : space.closure(s)) out.push_back(space.id(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ttg
