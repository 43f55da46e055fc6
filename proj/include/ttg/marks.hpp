#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ttg/errors.hpp"
#include "ttg/lattice.hpp"

namespace ttg {

// Table of marks: m[H][K] = |(G/K)^H|, the number of cosets of G/K fixed
// pointwise by H, for conjugacy-class representatives H and K in ascending
// order of subgroup size. Computed by direct orbit counting.
struct MarksTable {
  std::vector<std::string> class_labels;        // row/column order
  std::vector<std::vector<long>> m;             // m[H][K]

  long at(std::size_t h_class, std::size_t k_class) const { return m[h_class][k_class]; }
};

namespace detail {

// Canonical coset representative: the minimal element index of g K.
inline std::size_t coset_rep(const PermGroup& g, const Bitset& k, std::size_t x) {
  std::size_t best = static_cast<std::size_t>(-1);
  for (auto e : k.members()) {
    std::size_t y = g.mult(x, e);
    if (y < best) best = y;
  }
  return best;
}

}  // namespace detail

inline long fixed_cosets(const SubgroupLattice& lat, std::size_t h, std::size_t k) {
  const auto& g = lat.group();
  const auto& kset = lat.subgroup(k);
  const auto h_members = lat.subgroup(h).members();
  std::vector<char> seen(g.order(), 0);
  long fixed = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t rep = detail::coset_rep(g, kset, x);
    if (seen[rep]) continue;
    seen[rep] = 1;
    bool is_fixed = true;
    for (auto hh : h_members)
      if (detail::coset_rep(g, kset, g.mult(hh, rep)) != rep) {
        is_fixed = false;
        break;
      }
    if (is_fixed) ++fixed;
  }
  return fixed;
}

inline MarksTable table_of_marks(const SubgroupLattice& lat) {
  MarksTable t;
  const std::size_t c = lat.class_count();
  t.class_labels.resize(c);
  t.m.assign(c, std::vector<long>(c, 0));
  for (std::size_t i = 0; i < c; ++i) t.class_labels[i] = lat.class_label(i);
  for (std::size_t hc = 0; hc < c; ++hc)
    for (std::size_t kc = 0; kc < c; ++kc)
      t.m[hc][kc] = fixed_cosets(lat, lat.class_representative(hc),
                                 lat.class_representative(kc));
  return t;
}

// Mark-kernel oracle for the Burnside gluing. The mark homomorphism of H is
// the linear functional on the free module over the transitive G-sets given
// by the H-row of the table. The predicate decides
//     ker(m_H)  subset of  ker(m_K mod p)
// by computing an integer basis of the rank-(c-1) kernel lattice of the
// H-row (sequential extended-gcd elimination, which keeps the accompanying
// transformation unimodular) and testing each basis vector against the K-row
// modulo p. Exact big-integer arithmetic throughout.
inline bool mark_kernel_contained(const MarksTable& t, std::size_t h_class,
                                  std::size_t k_class, long p) {
  const std::size_t n = t.class_labels.size();
  std::vector<mpz_class> row_h(n), row_k(n);
  for (std::size_t i = 0; i < n; ++i) {
    row_h[i] = t.m[h_class][i];
    row_k[i] = t.m[k_class][i];
  }
  // Pivot vector u with row_h . u = g, plus kernel basis vectors.
  std::vector<std::vector<mpz_class>> kernel;
  std::vector<mpz_class> u(n, 0);
  mpz_class g = 0;
  std::size_t start = 0;
  while (start < n && row_h[start] == 0) {
    // Zero coordinate: the unit vector lies in the kernel.
    std::vector<mpz_class> e(n, 0);
    e[start] = 1;
    kernel.push_back(std::move(e));
    ++start;
  }
  if (start == n) throw SelfCheckError("mark row is identically zero");
  g = row_h[start];
  u[start] = 1;
  if (g < 0) {
    g = -g;
    u[start] = -1;
  }
  for (std::size_t i = start + 1; i < n; ++i) {
    if (row_h[i] == 0) {
      std::vector<mpz_class> e(n, 0);
      e[i] = 1;
      kernel.push_back(std::move(e));
      continue;
    }
    mpz_class gn, s, tt;
    mpz_gcdext(gn.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(), g.get_mpz_t(),
               row_h[i].get_mpz_t());
    // Kernel vector: (row_h[i]/gn) * u - (g/gn) * e_i.
    std::vector<mpz_class> kv(n, 0);
    mpz_class a = row_h[i] / gn, b = g / gn;
    for (std::size_t j = 0; j < n; ++j) kv[j] = a * u[j];
    kv[i] -= b;
    kernel.push_back(std::move(kv));
    // New pivot vector: s * u + tt * e_i.
    for (std::size_t j = 0; j < n; ++j) u[j] = s * u[j];
    u[i] += tt;
    g = gn;
  }
  if (kernel.size() != n - 1)
    throw SelfCheckError("kernel lattice has unexpected rank");
  for (const auto& kv : kernel) {
    mpz_class dot = 0;
    for (std::size_t j = 0; j < n; ++j) dot += row_k[j] * kv[j];
    if (mpz_class(dot % p) != 0) return false;
  }
  return true;
}

}  // namespace ttg
