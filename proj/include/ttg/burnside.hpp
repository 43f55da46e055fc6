#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ttg/errors.hpp"
#include "ttg/lattice.hpp"
#include "ttg/space.hpp"

namespace ttg {

// A prime of the Burnside ring: a conjugacy class of subgroups together with
// a residue characteristic (0 or a prime in the chosen finite set).
struct BurnsidePoint {
  std::size_t class_id;
  long characteristic;  // 0 or a prime

  bool operator==(const BurnsidePoint&) const = default;
};

inline std::string burnside_label(const SubgroupLattice& lat, const BurnsidePoint& q) {
  return "q(" + lat.class_label(q.class_id) + "," + std::to_string(q.characteristic) + ")";
}

// Dress gluing: q(H,p) = q(K,p) in Spec(A(G)) exactly when O^p(H) and O^p(K)
// are conjugate. Characteristic-zero points are glued only within a
// conjugacy class.
inline bool dress_equal(const SubgroupLattice& lat, const BurnsidePoint& a,
                        const BurnsidePoint& b) {
  if (a.characteristic != b.characteristic) return false;
  if (a.characteristic == 0) return a.class_id == b.class_id;
  return lat.o_p_class(a.class_id, a.characteristic) ==
         lat.o_p_class(b.class_id, b.characteristic);
}

// Second route, via p-subnormality of the intersection: representatives H
// and K (quantified over conjugates of both) with H' n K' p-subnormal in
// both H' and K'. Must agree with dress_equal; the verify suites enforce it.
inline bool dress_equal_via_subnormality(const SubgroupLattice& lat, const BurnsidePoint& a,
                                         const BurnsidePoint& b) {
  if (a.characteristic != b.characteristic) return false;
  if (a.characteristic == 0) return a.class_id == b.class_id;
  long p = a.characteristic;
  for (auto h : lat.class_members(a.class_id))
    for (auto k : lat.class_members(b.class_id)) {
      std::size_t inter = lat.intersection(h, k);
      if (lat.is_p_subnormal(inter, h, p) && lat.is_p_subnormal(inter, k, p)) return true;
    }
  return false;
}

// Spec(A(G)) over a finite set of primes, as a finite spectral space.
// Points: one per conjugacy class at characteristic 0 (the generic points)
// and one per Dress class at each chosen prime (the closed points). The
// specializations are q(H,0) ~> q(K,p) whenever (H,p) and (K,p) are Dress
// equal. Labels use the O^p representative of each Dress class; `members`
// lists the glued residue-p points of every space point.
struct BurnsideSpec {
  FiniteSpectralSpace space;
  std::vector<std::vector<BurnsidePoint>> members;  // aligned with space points
  std::map<std::pair<std::size_t, long>, PointIndex> point_of;  // (class, char) -> point

  PointIndex point(std::size_t class_id, long characteristic) const {
    auto it = point_of.find({class_id, characteristic});
    if (it == point_of.end()) throw InputError("no such Burnside point");
    return it->second;
  }
};

inline BurnsideSpec spec_burnside(const SubgroupLattice& lat, std::vector<long> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (long p : primes)
    if (!is_prime(p)) throw InputError("spec_burnside: " + std::to_string(p) + " is not prime");

  std::vector<std::string> labels;
  std::vector<std::vector<BurnsidePoint>> members;
  std::map<std::pair<std::size_t, long>, PointIndex> point_of;

  for (std::size_t c = 0; c < lat.class_count(); ++c) {
    point_of[{c, 0}] = labels.size();
    labels.push_back("q(" + lat.class_label(c) + ",0)");
    members.push_back({BurnsidePoint{c, 0}});
  }
  for (long p : primes) {
    // Dress classes at p, keyed by the class of O^p.
    std::map<std::size_t, std::vector<std::size_t>> dress;
    for (std::size_t c = 0; c < lat.class_count(); ++c)
      dress[lat.o_p_class(c, p)].push_back(c);
    for (const auto& [rep, classes] : dress) {
      PointIndex pt = labels.size();
      labels.push_back("q(" + lat.class_label(rep) + "," + std::to_string(p) + ")");
      std::vector<BurnsidePoint> mem;
      for (auto c : classes) {
        point_of[{c, p}] = pt;
        mem.push_back(BurnsidePoint{c, p});
      }
      members.push_back(std::move(mem));
    }
  }

  std::vector<std::pair<std::string, std::string>> specializations;
  for (std::size_t c = 0; c < lat.class_count(); ++c)
    for (long p : primes)
      specializations.emplace_back(labels[point_of[{c, 0}]], labels[point_of[{c, p}]]);

  BurnsideSpec out;
  out.space = FiniteSpectralSpace(labels, specializations);
  out.members = std::move(members);
  out.point_of = std::move(point_of);
  return out;
}

// Primes for the default ambient set.
inline std::vector<long> default_primes(const SubgroupLattice& lat) {
  return primes_dividing(lat.group().order());
}

}  // namespace ttg
