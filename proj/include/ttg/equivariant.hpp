#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ttg/burnside.hpp"
#include "ttg/errors.hpp"
#include "ttg/lattice.hpp"
#include "ttg/map.hpp"
#include "ttg/quotient.hpp"
#include "ttg/space.hpp"

namespace ttg {

// Computed Balmer spectra. Throughout, the specialization order follows the
// closure convention of tensor triangular geometry: smaller primes are more
// closed, so cl{P} = {Q : Q subset of P} and P ~> Q means Q is contained in
// P. For the spectrum of derived Mackey functors this makes P(1,p) the
// unique closed point over a p-group, with P(G,p) specializing toward it.

// ---------------------------------------------------------------------------
// Spc of the compact derived Mackey functors: one point P(H,0) and one point
// P(H,p) per conjugacy class and chosen prime, no gluing. The inclusion rule
// is: P(K,p) is contained in P(H,p) exactly when K is conjugate to a
// p-subnormal subgroup of H; in specialization terms P(H,p) ~> P(K,p). The
// characteristic-zero points are mutually incomparable generic points and
// P(K,0) ~> P(H,p) exactly when H is conjugate to a p-subnormal subgroup
// of K.
struct MackeyPoint {
  std::size_t class_id;
  long characteristic;  // 0 or a prime
};

struct DhzSpec {
  FiniteSpectralSpace space;
  std::vector<MackeyPoint> meta;  // aligned with space points
  std::map<std::pair<std::size_t, long>, PointIndex> point_of;

  PointIndex point(std::size_t class_id, long characteristic) const {
    auto it = point_of.find({class_id, characteristic});
    if (it == point_of.end()) throw InputError("no such Mackey point");
    return it->second;
  }
};

inline DhzSpec spc_dhzg(const SubgroupLattice& lat, std::vector<long> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (long p : primes)
    if (!is_prime(p)) throw InputError("spc_dhzg: " + std::to_string(p) + " is not prime");

  DhzSpec out;
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < lat.class_count(); ++c) {
    out.point_of[{c, 0}] = labels.size();
    out.meta.push_back({c, 0});
    labels.push_back("P(" + lat.class_label(c) + ",0)");
  }
  for (long p : primes)
    for (std::size_t c = 0; c < lat.class_count(); ++c) {
      out.point_of[{c, p}] = labels.size();
      out.meta.push_back({c, p});
      labels.push_back("P(" + lat.class_label(c) + "," + std::to_string(p) + ")");
    }

  std::vector<std::pair<std::string, std::string>> spec;
  for (long p : primes)
    for (std::size_t c = 0; c < lat.class_count(); ++c)
      for (std::size_t d = 0; d < lat.class_count(); ++d) {
        // P(H,p) ~> P(K,p) when K is conjugate to a p-subnormal subgroup of H.
        if (lat.class_conjugate_p_subnormal(d, c, p))
          spec.emplace_back(labels[out.point_of[{c, p}]], labels[out.point_of[{d, p}]]);
        // P(K,0) ~> P(H,p) when H is conjugate to a p-subnormal subgroup of K.
        if (lat.class_conjugate_p_subnormal(c, d, p))
          spec.emplace_back(labels[out.point_of[{d, 0}]], labels[out.point_of[{c, p}]]);
      }
  out.space = FiniteSpectralSpace(labels, spec);
  return out;
}

// The map induced by unitation on the derived Mackey spectrum, landing in
// Spec(A(G)): P(H,p) goes to the Dress class of (H,p) and P(H,0) to q(H,0).
// Surjectivity, monotonicity, the quotient property and fiber connectivity
// are theorems checked by the suites, not assumed here (monotonicity is
// validated by the map constructor).
struct DhzComparison {
  DhzSpec dhz;
  BurnsideSpec burnside;
  SpectralMapData map;
};

inline DhzComparison dhzg_comparison(const SubgroupLattice& lat, std::vector<long> primes) {
  DhzSpec dhz = spc_dhzg(lat, primes);
  BurnsideSpec burn = spec_burnside(lat, primes);
  std::vector<PointIndex> assign(dhz.space.size());
  for (std::size_t x = 0; x < dhz.space.size(); ++x) {
    const auto& meta = dhz.meta[x];
    assign[x] = burn.point(meta.class_id, meta.characteristic);
  }
  SpectralMapData map(dhz.space, burn.space, std::move(assign));
  return DhzComparison{std::move(dhz), std::move(burn), std::move(map)};
}

// ---------------------------------------------------------------------------
// Truncated Spc(SH_{C_p}^c): two chromatic fans, one for each subgroup class
// of C_p. Each fan has a generic height-1 point (rational, stored once with
// no prime attached) and, for every prime q in the ambient set, a column at
// heights 2..n_max topped by a height-infinity point. Cross edges exist at
// the prime p only: the C_p-fan point at height n specializes to the
// trivial-fan point at height n+1 (height 1 meaning the fan's generic
// point), and at the top the two height-infinity points are comparable via
// P(C_p,p,inf) ~> P(1,p,inf). The fan orientation is pinned by consistency
// with the derived Mackey inclusion P(1,p) in P(C_p,p), whose closed point
// is P(1,p); the whole cross-edge table lives in this one function so a
// correction is a one-line change.
struct ChromaticPoint {
  std::string subgroup;  // "1" or the C_p label
  long prime;            // 0 for the height-1 generic point
  long height;           // 1, 2, ..., n_max; -1 encodes infinity
};

struct ShgCpSpec {
  FiniteSpectralSpace space;
  std::vector<ChromaticPoint> meta;
  std::string trivial_fan;  // "1"
  std::string cyclic_fan;   // e.g. "C_2"
  long prime;
  long n_max;

  std::string label(const std::string& fan, long q, long height) const {
    if (height == 1) return "P(" + fan + ",1)";
    std::string h = height < 0 ? "inf" : std::to_string(height);
    return "P(" + fan + "," + std::to_string(q) + "," + h + ")";
  }
};

inline ShgCpSpec spc_shg_cp(long p, std::vector<long> primes, long n_max) {
  if (!is_prime(p)) throw InputError("spc_shg_cp: " + std::to_string(p) + " is not prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (std::find(primes.begin(), primes.end(), p) == primes.end())
    throw InputError("spc_shg_cp: the ambient prime set must contain p");
  for (long q : primes)
    if (!is_prime(q)) throw InputError("spc_shg_cp: ambient set contains a non-prime");
  if (n_max < 2) throw InputError("spc_shg_cp: n_max must be at least 2");

  ShgCpSpec out;
  out.trivial_fan = "1";
  out.cyclic_fan = "C_" + std::to_string(p);
  out.prime = p;
  out.n_max = n_max;

  std::vector<std::string> labels;
  auto add_point = [&](const std::string& fan, long q, long height) {
    out.meta.push_back({fan, height == 1 ? 0 : q, height});
    labels.push_back(out.label(fan, q, height));
  };
  for (const std::string& fan : {out.trivial_fan, out.cyclic_fan}) {
    add_point(fan, 0, 1);
    for (long q : primes) {
      for (long h = 2; h <= n_max; ++h) add_point(fan, q, h);
      add_point(fan, q, -1);
    }
  }

  std::vector<std::pair<std::string, std::string>> spec;
  for (const std::string& fan : {out.trivial_fan, out.cyclic_fan}) {
    for (long q : primes) {
      spec.emplace_back(out.label(fan, 0, 1), out.label(fan, q, 2));
      for (long h = 2; h < n_max; ++h)
        spec.emplace_back(out.label(fan, q, h), out.label(fan, q, h + 1));
      spec.emplace_back(out.label(fan, q, n_max), out.label(fan, q, -1));
    }
  }
  // Cross edges at p; the trivial fan's column is entered one height up.
  for (long h = 1; h < n_max; ++h)
    spec.emplace_back(out.label(out.cyclic_fan, h == 1 ? 0 : p, h),
                      out.label(out.trivial_fan, p, h + 1));
  spec.emplace_back(out.label(out.cyclic_fan, p, -1), out.label(out.trivial_fan, p, -1));

  out.space = FiniteSpectralSpace(labels, spec);
  return out;
}

// Unitation of the truncated SH_{C_p}: glues exactly the pair of
// height-infinity points at the prime p and nothing else.
struct ShgCpUnitation {
  ShgCpSpec source;
  FiniteSpectralSpace quotient;
  SpectralMapData map;
};

inline ShgCpUnitation unitation_shg_cp(long p, std::vector<long> primes, long n_max) {
  ShgCpSpec src = spc_shg_cp(p, std::move(primes), n_max);
  auto part = PointPartition::glue(
      src.space, {{src.label(src.trivial_fan, p, -1), src.label(src.cyclic_fan, p, -1)}});
  auto [quotient, map] = quotient_space(src.space, part);
  return ShgCpUnitation{std::move(src), std::move(quotient), std::move(map)};
}

// ---------------------------------------------------------------------------
// The height-infinity gluing of Spc(SH_G^c) for arbitrary small G, as a
// set-level partition of the points (class, p, inf): two points at the same
// prime are glued when representatives H, K (up to conjugacy of both) have
// H n K p-subnormal in each. The full topology beyond C_p needs blue-shift
// data outside the scope of this library, so only the partition is exposed.
struct InfinityGluing {
  // Each block is a list of (class_id, prime), sorted; blocks sorted too.
  std::vector<std::vector<std::pair<std::size_t, long>>> blocks;
};

inline bool infinity_glued_pair(const SubgroupLattice& lat, std::size_t c, std::size_t d,
                                long p) {
  for (auto h : lat.class_members(c))
    for (auto k : lat.class_members(d)) {
      std::size_t inter = lat.intersection(h, k);
      if (lat.is_p_subnormal(inter, h, p) && lat.is_p_subnormal(inter, k, p)) return true;
    }
  return false;
}

inline InfinityGluing shg_infinity_gluing(const SubgroupLattice& lat,
                                          std::vector<long> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  InfinityGluing out;
  for (long p : primes) {
    const std::size_t n = lat.class_count();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = c + 1; d < n; ++d)
        if (infinity_glued_pair(lat, c, d, p)) parent[find(c)] = find(d);
    std::map<std::size_t, std::vector<std::pair<std::size_t, long>>> groups;
    for (std::size_t c = 0; c < n; ++c) groups[find(c)].push_back({c, p});
    for (auto& [root, block] : groups) {
      std::sort(block.begin(), block.end());
      out.blocks.push_back(std::move(block));
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) {
              if (a.front().second != b.front().second)
                return a.front().second < b.front().second;
              return a.front().first < b.front().first;
            });
  return out;
}

// ---------------------------------------------------------------------------
// Unigenic locus of the p-local derived Mackey functors of a p-group:
// exactly {P(G,p)} together with every characteristic-zero point. The result
// is generization-closed (a down-set of the specialization order), which is
// asserted, not assumed.
struct UnigenicLocus {
  DhzSpec spec;
  PointSet locus;
};

inline UnigenicLocus unigenic_locus_dhzg(const SubgroupLattice& lat, long p) {
  if (!is_prime(p)) throw PreconditionError("unigenic_locus_dhzg: not a prime");
  std::size_t order = lat.group().order();
  while (order % static_cast<std::size_t>(p) == 0) order /= static_cast<std::size_t>(p);
  if (order != 1)
    throw PreconditionError("unigenic_locus_dhzg: the group is not a p-group");

  UnigenicLocus out;
  out.spec = spc_dhzg(lat, {p});
  std::size_t full_class = lat.class_of(lat.full_subgroup());
  out.locus.push_back(out.spec.point(full_class, p));
  for (std::size_t c = 0; c < lat.class_count(); ++c)
    out.locus.push_back(out.spec.point(c, 0));
  std::sort(out.locus.begin(), out.locus.end());
  if (!out.spec.space.is_down_set(out.locus))
    throw SelfCheckError("unigenic locus is not generization-closed");
  return out;
}

}  // namespace ttg
