#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ttg/bitset.hpp"
#include "ttg/errors.hpp"
#include "ttg/perm.hpp"

namespace ttg {

// The full subgroup lattice of a materialized permutation group. Subgroups
// are bitsets over element indices; conjugacy, normality and indexes are
// computed by brute force, which is exact at this size.
class SubgroupLattice {
public:
  explicit SubgroupLattice(PermGroup group) : g_(std::move(group)) {
    build_subgroups();
    build_conjugacy();
    build_labels();
  }

  const PermGroup& group() const { return g_; }

  std::size_t subgroup_count() const { return subgroups_.size(); }
  const Bitset& subgroup(std::size_t h) const { return subgroups_[h]; }
  std::size_t subgroup_order(std::size_t h) const { return orders_[h]; }

  std::size_t class_count() const { return classes_.size(); }
  std::size_t class_of(std::size_t h) const { return conj_class_[h]; }
  const std::vector<std::size_t>& class_members(std::size_t c) const { return classes_[c]; }
  std::size_t class_representative(std::size_t c) const { return classes_[c].front(); }
  std::size_t class_order(std::size_t c) const { return orders_[class_representative(c)]; }
  const std::string& class_label(std::size_t c) const { return class_labels_[c]; }

  std::size_t class_by_label(const std::string& label) const {
    for (std::size_t c = 0; c < class_labels_.size(); ++c)
      if (class_labels_[c] == label) return c;
    throw InputError("unknown subgroup class label '" + label + "'");
  }

  std::size_t trivial_subgroup() const { return trivial_; }
  std::size_t full_subgroup() const { return full_; }

  bool leq(std::size_t h, std::size_t k) const { return subgroups_[k].contains(subgroups_[h]); }

  std::size_t index_in(std::size_t h, std::size_t k) const {
    if (!leq(h, k)) throw PreconditionError("index_in: first subgroup not contained in second");
    return orders_[k] / orders_[h];
  }

  bool normal_in(std::size_t h, std::size_t k) const { return normal_in_[h][k]; }

  std::size_t conjugate_subgroup(std::size_t h, std::size_t g) const {
    Bitset out(g_.order());
    std::size_t ginv = g_.inverse(g);
    for (auto x : subgroups_[h].members())
      out.set(g_.mult(g_.mult(g, x), ginv));
    return subgroup_index(out);
  }

  std::size_t subgroup_index(const Bitset& b) const {
    auto it = subgroup_lookup_.find(b);
    if (it == subgroup_lookup_.end()) throw SelfCheckError("set is not a known subgroup");
    return it->second;
  }

  // Intersection of two subgroups (always a subgroup, always in the lattice).
  std::size_t intersection(std::size_t h, std::size_t k) const {
    return subgroup_index(subgroups_[h] & subgroups_[k]);
  }

  // O^p(H): the subgroup generated by the elements of H of order coprime to
  // p; equivalently the smallest normal subgroup of H with p-group quotient.
  // Both characterizations are computed and must agree.
  std::size_t o_p(std::size_t h, long p) const {
    if (!is_prime(p)) throw PreconditionError("o_p: " + std::to_string(p) + " is not prime");
    Bitset gens(g_.order());
    for (auto x : subgroups_[h].members())
      if (g_.element_order(x) % static_cast<std::size_t>(p) != 0) gens.set(x);
    std::size_t generated = subgroup_index(generated_subgroup(gens));

    // Independent route: minimal normal subgroup of h with p-power index.
    std::size_t best = h;
    for (std::size_t n = 0; n < subgroups_.size(); ++n) {
      if (!leq(n, h) || !normal_in_[n][h]) continue;
      std::size_t idx = orders_[h] / orders_[n];
      while (idx % static_cast<std::size_t>(p) == 0) idx /= static_cast<std::size_t>(p);
      if (idx == 1 && orders_[n] < orders_[best]) best = n;
    }
    if (best != generated)
      throw SelfCheckError("o_p: the two characterizations disagree");
    return generated;
  }

  // p-subnormality: a chain h = H_0 <| H_1 <| ... <| H_n = k, each step
  // normal of index p. Breadth-first search through the lattice.
  bool is_p_subnormal(std::size_t h, std::size_t k, long p) const {
    if (!is_prime(p)) throw PreconditionError("is_p_subnormal: not a prime");
    if (!leq(h, k))
      throw PreconditionError("is_p_subnormal: first subgroup not contained in second");
    std::vector<char> visited(subgroups_.size(), 0);
    std::queue<std::size_t> q;
    q.push(h);
    visited[h] = 1;
    while (!q.empty()) {
      std::size_t cur = q.front();
      q.pop();
      if (cur == k) return true;
      for (std::size_t next = 0; next < subgroups_.size(); ++next) {
        if (visited[next] || !leq(cur, next) || !leq(next, k)) continue;
        if (orders_[next] != orders_[cur] * static_cast<std::size_t>(p)) continue;
        if (!normal_in_[cur][next]) continue;
        visited[next] = 1;
        q.push(next);
      }
    }
    return false;
  }

  // Class-level helpers ----------------------------------------------------

  std::size_t o_p_class(std::size_t c, long p) const {
    return class_of(o_p(class_representative(c), p));
  }

  // Is some member of class c contained-and-p-subnormal in some member of
  // class d? (Conjugation-invariant, so one side may stay fixed; both are
  // varied for symmetry.)
  bool class_conjugate_p_subnormal(std::size_t c, std::size_t d, long p) const {
    for (auto h : classes_[c])
      for (auto k : classes_[d])
        if (leq(h, k) && is_p_subnormal(h, k, p)) return true;
    return false;
  }

  Bitset generated_subgroup(const Bitset& seed) const {
    std::vector<std::size_t> frontier = seed.members();
    Bitset closure(g_.order());
    closure.set(g_.identity_index());
    std::queue<std::size_t> q;
    for (auto x : frontier)
      if (!closure.test(x)) {
        closure.set(x);
        q.push(x);
      }
    std::vector<std::size_t> gens = seed.members();
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (auto y : gens) {
        std::size_t z = g_.mult(x, y);
        if (!closure.test(z)) {
          closure.set(z);
          q.push(z);
        }
      }
      std::size_t xi = g_.inverse(x);
      if (!closure.test(xi)) {
        closure.set(xi);
        q.push(xi);
      }
    }
    return closure;
  }

private:
  void build_subgroups() {
    std::set<Bitset> found;
    Bitset trivial(g_.order());
    trivial.set(g_.identity_index());
    found.insert(trivial);
    // Cyclic subgroups.
    for (std::size_t x = 0; x < g_.order(); ++x) {
      Bitset b(g_.order());
      std::size_t cur = x;
      b.set(g_.identity_index());
      while (cur != g_.identity_index()) {
        b.set(cur);
        cur = g_.mult(cur, x);
      }
      found.insert(b);
    }
    // Close under pairwise joins until stable.
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Bitset> current(found.begin(), found.end());
      for (std::size_t i = 0; i < current.size(); ++i)
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          if (current[i].contains(current[j]) || current[j].contains(current[i])) continue;
          Bitset join = generated_subgroup(current[i] | current[j]);
          if (found.insert(join).second) grew = true;
        }
    }
    subgroups_.assign(found.begin(), found.end());
    std::sort(subgroups_.begin(), subgroups_.end(),
              [](const Bitset& a, const Bitset& b) {
                if (a.count() != b.count()) return a.count() < b.count();
                return a < b;
              });
    orders_.resize(subgroups_.size());
    for (std::size_t h = 0; h < subgroups_.size(); ++h) {
      orders_[h] = subgroups_[h].count();
      subgroup_lookup_[subgroups_[h]] = h;
      if (orders_[h] == 1) trivial_ = h;
      if (orders_[h] == g_.order()) full_ = h;
    }
    // Pairwise normality.
    normal_in_.assign(subgroups_.size(), std::vector<char>(subgroups_.size(), 0));
    for (std::size_t h = 0; h < subgroups_.size(); ++h)
      for (std::size_t k = 0; k < subgroups_.size(); ++k) {
        if (!leq(h, k)) continue;
        bool normal = true;
        for (auto g : subgroups_[k].members()) {
          std::size_t ginv = g_.inverse(g);
          for (auto x : subgroups_[h].members())
            if (!subgroups_[h].test(g_.mult(g_.mult(g, x), ginv))) {
              normal = false;
              break;
            }
          if (!normal) break;
        }
        normal_in_[h][k] = normal;
      }
  }

  void build_conjugacy() {
    conj_class_.assign(subgroups_.size(), static_cast<std::size_t>(-1));
    for (std::size_t h = 0; h < subgroups_.size(); ++h) {
      if (conj_class_[h] != static_cast<std::size_t>(-1)) continue;
      std::size_t c = classes_.size();
      std::vector<std::size_t> members;
      for (std::size_t g = 0; g < g_.order(); ++g) {
        std::size_t hg = conjugate_subgroup(h, g);
        if (conj_class_[hg] == static_cast<std::size_t>(-1)) {
          conj_class_[hg] = c;
          members.push_back(hg);
        }
      }
      std::sort(members.begin(), members.end());
      classes_.push_back(std::move(members));
    }
    // Classes ascending by (subgroup order, smallest member bitset); member
    // lists are index-sorted so front() is the canonical representative.
    std::vector<std::size_t> order(classes_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      std::size_t oa = orders_[classes_[a].front()], ob = orders_[classes_[b].front()];
      if (oa != ob) return oa < ob;
      return classes_[a].front() < classes_[b].front();
    });
    std::vector<std::vector<std::size_t>> sorted;
    for (auto c : order) sorted.push_back(classes_[c]);
    classes_ = std::move(sorted);
    for (std::size_t c = 0; c < classes_.size(); ++c)
      for (auto h : classes_[c]) conj_class_[h] = c;
  }

  // Isomorphism-type name of a subgroup, for class labels. Cyclic and
  // abelian types are computed exactly; the common small nonabelian types
  // are recognized by order and element-order statistics; anything else
  // falls back to G<order>. Duplicate names within a group get a/b/c
  // suffixes in class order.
  std::string iso_name(std::size_t h) const {
    const auto members = subgroups_[h].members();
    const std::size_t n = orders_[h];
    if (n == 1) return "1";
    std::map<std::size_t, std::size_t> order_count;
    bool abelian = true;
    for (auto x : members) order_count[g_.element_order(x)]++;
    for (auto x : members) {
      for (auto y : members)
        if (g_.mult(x, y) != g_.mult(y, x)) {
          abelian = false;
          break;
        }
      if (!abelian) break;
    }
    if (order_count.count(n)) return "C_" + std::to_string(n);
    if (abelian) return abelian_name(h);
    std::size_t involutions = order_count.count(2) ? order_count[2] : 0;
    if (n == 6) return "S_3";
    if (n == 8 && involutions == 1) return "Q_8";
    if (n == 8 && involutions == 5) return "D_4";
    if (n == 12 && involutions == 3) return "A_4";
    if (n == 12 && involutions == 7) return "D_6";
    if (n == 12 && involutions == 1) return "Dic_3";
    if (dihedral_shape(h)) return "D_" + std::to_string(n / 2);
    if (n == 24 && involutions == 9) return "S_4";
    if (n == 60) return "A_5";
    if (n == 120 && involutions == 25) return "S_5";
    return "G" + std::to_string(n);
  }

  bool dihedral_shape(std::size_t h) const {
    const std::size_t n = orders_[h];
    if (n % 2 != 0) return false;
    const std::size_t m = n / 2;
    for (auto c : subgroups_[h].members()) {
      if (g_.element_order(c) != m) continue;
      for (auto t : subgroups_[h].members()) {
        if (g_.element_order(t) != 2) continue;
        // t c t^{-1} == c^{-1}
        if (g_.mult(g_.mult(t, c), g_.inverse(t)) == g_.inverse(c)) {
          // c must not already contain t.
          std::size_t cur = c;
          bool inside = false;
          while (cur != g_.identity_index()) {
            if (cur == t) inside = true;
            cur = g_.mult(cur, c);
          }
          if (!inside) return true;
        }
      }
    }
    return false;
  }

  std::string abelian_name(std::size_t h) const {
    // Invariant factors from the primary decomposition: for each prime p,
    // the partition lambda is recovered from the counts of elements killed
    // by p^k, then factors are aligned from the largest down.
    const auto members = subgroups_[h].members();
    const std::size_t n = orders_[h];
    std::map<long, std::vector<std::size_t>> partitions;
    for (long p : primes_dividing(n)) {
      std::vector<std::size_t> counts;  // log_p #{x : x^{p^k} = 1}
      std::size_t pk = 1;
      while (true) {
        pk *= static_cast<std::size_t>(p);
        std::size_t cnt = 0;
        for (auto x : members) {
          std::size_t ord = g_.element_order(x);
          // x^{pk} = 1 iff ord divides pk; ord must be a p-power dividing pk.
          if (pk % ord == 0) ++cnt;
        }
        std::size_t log = 0, c = cnt;
        while (c > 1) {
          c /= static_cast<std::size_t>(p);
          ++log;
        }
        counts.push_back(log);
        bool all_p_elements_captured = true;
        for (auto x : members) {
          std::size_t ord = g_.element_order(x);
          bool p_power = true;
          std::size_t o = ord;
          while (o % static_cast<std::size_t>(p) == 0) o /= static_cast<std::size_t>(p);
          p_power = (o == 1);
          if (p_power && pk % ord != 0) all_p_elements_captured = false;
        }
        if (all_p_elements_captured) break;
      }
      // lambda_k' (conjugate partition parts) = counts[k] - counts[k-1].
      std::vector<std::size_t> conj;
      std::size_t prev = 0;
      for (auto c : counts) {
        conj.push_back(c - prev);
        prev = c;
      }
      // Transpose the conjugate partition to get lambda.
      std::vector<std::size_t> lambda;
      for (std::size_t i = 1; !conj.empty() && i <= conj[0]; ++i) {
        std::size_t parts = 0;
        for (auto c : conj)
          if (c >= i) ++parts;
        lambda.push_back(parts);
      }
      partitions[p] = lambda;
    }
    std::size_t factors = 0;
    for (auto& [p, lambda] : partitions) factors = std::max(factors, lambda.size());
    std::vector<std::size_t> invariant(factors, 1);
    for (auto& [p, lambda] : partitions)
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        std::size_t pe = 1;
        for (std::size_t k = 0; k < lambda[i]; ++k) pe *= static_cast<std::size_t>(p);
        invariant[i] *= pe;
      }
    std::string name;
    for (std::size_t i = 0; i < invariant.size(); ++i) {
      if (i) name += "x";
      name += "C_" + std::to_string(invariant[i]);
    }
    return name;
  }

  void build_labels() {
    class_labels_.resize(classes_.size());
    std::map<std::string, std::vector<std::size_t>> by_name;
    for (std::size_t c = 0; c < classes_.size(); ++c)
      by_name[iso_name(class_representative(c))].push_back(c);
    for (auto& [name, cs] : by_name) {
      if (cs.size() == 1) {
        class_labels_[cs[0]] = name;
      } else {
        // Classes are already in (order, canonical bitset) order.
        char suffix = 'a';
        for (auto c : cs) class_labels_[c] = name + std::string(1, suffix++);
      }
    }
  }

  PermGroup g_;
  std::vector<Bitset> subgroups_;
  std::vector<std::size_t> orders_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> subgroup_lookup_;
  std::vector<std::vector<char>> normal_in_;
  std::vector<std::size_t> conj_class_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::string> class_labels_;
  std::size_t trivial_ = 0;
  std::size_t full_ = 0;
};

inline SubgroupLattice subgroup_lattice(const PermGroup& g) { return SubgroupLattice(g); }

}  // namespace ttg
