#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ttg/burnside.hpp"
#include "ttg/enumerate.hpp"
#include "ttg/equivariant.hpp"
#include "ttg/io.hpp"
#include "ttg/lattice.hpp"
#include "ttg/marks.hpp"
#include "ttg/perm.hpp"
#include "ttg/predicates.hpp"
#include "ttg/quotient.hpp"
#include "ttg/section.hpp"

namespace ttg {

struct VerifyFailure {
  std::string instance;
  std::string property;
  std::string witness;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  int max_domain = 5;
  int max_codomain = 4;
  std::vector<std::string> groups;  // empty = default catalog
  long prime = 2;
  long height = 4;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t instances = 0;
  std::uint64_t seed = 0;
  std::vector<VerifyFailure> failures;
  double wall_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

// Canonical serialization. Wall time is deliberately excluded so reports are
// byte-identical across runs and worker counts; timing goes to stderr.
inline json report_to_json(const VerifyReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(json{{"instance", f.instance},
                            {"property", f.property},
                            {"witness", f.witness}});
  return json{{"suite", r.suite},
              {"instances", r.instances},
              {"seed", r.seed},
              {"failures", std::move(failures)}};
}

namespace detail {

// Deterministic parallel map: instances are fixed up front, workers take
// static interleaved shares, results are merged in instance order.
inline std::vector<std::vector<VerifyFailure>> run_instances(
    std::size_t count, unsigned jobs,
    const std::function<std::vector<VerifyFailure>(std::size_t)>& run) {
  std::vector<std::vector<VerifyFailure>> results(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = run(i);
    return results;
  }
  unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < count; i += workers) results[i] = run(i);
    });
  for (auto& t : pool) t.join();
  return results;
}

struct Checker {
  std::string instance;
  std::vector<VerifyFailure> failures;

  void require(bool ok, const std::string& property, const std::string& witness = "") {
    if (!ok) failures.push_back({instance, property, witness});
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive suite over all monotone surjections between small posets.
// Checks, per map:
//   - topological quotient <=> heritable weak spectral quotient
//   - weak lifting property => topological quotient
//   - three strong-quotient routes agree
//   - quotient: saturated set open iff image open; injective => order-iso
//   - quotient with connected fibers: preimages of connected open/closed
//     sets are connected
// and, per corpus space:
//   - closure idempotent, extensive, monotone
//   - every partition quotient is a topological quotient unless non-T0
//   - seeded families of Thomason closed sets: if every sub-intersection is
//     connected then so is the whole intersection

namespace detail {

inline std::vector<VerifyFailure> check_corpus_map(const SpectralMapData& m,
                                                   const std::string& instance) {
  Checker c{instance, {}};
  const auto& X = m.domain();
  const auto& Y = m.codomain();

  bool quotient = is_topological_quotient(m);
  bool heritable = is_heritable_weak_spectral_quotient(m);
  c.require(quotient == heritable, "quotient iff heritable-weak");

  bool lifting = has_weak_lifting_property(m);
  c.require(!lifting || quotient, "weak lifting implies quotient");

  auto routes = strong_quotient_routes(m);
  c.require(routes.agree(), "strong quotient routes agree",
            std::to_string(routes.immediate_lifting) +
                std::to_string(routes.corestrictions) +
                std::to_string(routes.weak_lifting));

  if (quotient) {
    // Saturated subsets are the preimages of subsets of Y.
    const std::size_t n = Y.size();
    for (std::uint32_t t = 0; t < (std::uint32_t{1} << n); ++t) {
      std::vector<char> t_mask(n, 0);
      PointSet t_set;
      for (std::size_t y = 0; y < n; ++y)
        if (t & (std::uint32_t{1} << y)) {
          t_mask[y] = 1;
          t_set.push_back(y);
        }
      PointSet s = m.preimage(t_mask);
      c.require(X.is_down_set(s) == Y.is_down_set(t_set),
                "saturated set open iff image open");
    }
    if (m.is_injective()) {
      bool iso = true;
      for (std::size_t a = 0; a < X.size() && iso; ++a)
        for (std::size_t b = 0; b < X.size(); ++b)
          if (X.leq(a, b) != Y.leq(m(a), m(b))) {
            iso = false;
            break;
          }
      c.require(iso, "injective quotient is an order isomorphism");
    }
    if (fibers_connected(m)) {
      for (const auto& u : Y.all_down_sets()) {
        PointSet open_set, closed_set;
        for (std::size_t y = 0; y < Y.size(); ++y)
          (u.test(y) ? open_set : closed_set).push_back(y);
        if (!open_set.empty() && Y.is_connected(open_set))
          c.require(X.is_connected(m.preimage(open_set)),
                    "preimage of connected open set connected");
        if (!closed_set.empty() && Y.is_connected(closed_set))
          c.require(X.is_connected(m.preimage(closed_set)),
                    "preimage of connected closed set connected");
      }
    }
  }
  return std::move(c.failures);
}

inline std::vector<VerifyFailure> check_corpus_space(const FiniteSpectralSpace& S,
                                                     const std::string& instance,
                                                     std::uint64_t seed) {
  Checker c{instance, {}};
  const std::size_t n = S.size();

  // Closure is extensive, idempotent and monotone; exhaustive over subsets.
  std::vector<PointSet> subsets;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    PointSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (bits & (std::uint32_t{1} << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::vector<PointSet> closures;
  closures.reserve(subsets.size());
  for (const auto& s : subsets) closures.push_back(S.closure(s));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    c.require(std::includes(closures[i].begin(), closures[i].end(),
                            subsets[i].begin(), subsets[i].end()),
              "closure is extensive");
    c.require(S.closure(closures[i]) == closures[i], "closure is idempotent");
  }
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      if (!std::includes(subsets[j].begin(), subsets[j].end(), subsets[i].begin(),
                         subsets[i].end()))
        continue;
      c.require(std::includes(closures[j].begin(), closures[j].end(),
                              closures[i].begin(), closures[i].end()),
                "closure is monotone");
    }

  // Every set partition: the projection is a topological quotient whenever
  // the quotient is T0 at all.
  std::vector<std::vector<PointSet>> partitions;
  std::vector<PointSet> current;
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      partitions.push_back(current);
      return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(x);
      self(self, x + 1);
      current[b].pop_back();
    }
    current.push_back({x});
    self(self, x + 1);
    current.pop_back();
  };
  rec(rec, 0);
  for (const auto& blocks : partitions) {
    try {
      auto [q, proj] = quotient_space(S, PointPartition::over(S, blocks));
      c.require(is_topological_quotient(proj),
                "partition quotient is a topological quotient");
    } catch (const NonT0Error&) {
      // Expected for partitions whose quotient preorder is not antisymmetric.
    }
  }

  // Families of Thomason closed sets with connected sub-intersections.
  auto downs = S.all_down_sets();
  std::vector<PointSet> upsets;
  for (const auto& d : downs) {
    PointSet up;
    for (std::size_t i = 0; i < n; ++i)
      if (!d.test(i)) up.push_back(i);
    if (!up.empty()) upsets.push_back(std::move(up));
  }
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
  std::size_t samples = std::min<std::size_t>(48, upsets.size() * upsets.size());
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t k = 2 + rng() % 3;
    std::vector<PointSet> family;
    for (std::size_t i = 0; i < k; ++i) family.push_back(upsets[rng() % upsets.size()]);
    bool hypothesis = true;
    for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << k) && hypothesis; ++sub) {
      std::vector<char> inter(n, 1);
      for (std::size_t i = 0; i < k; ++i)
        if (sub & (std::uint32_t{1} << i)) {
          std::vector<char> mask = S.mask(family[i]);
          for (std::size_t x = 0; x < n; ++x) inter[x] = inter[x] && mask[x];
        }
      PointSet pts;
      for (std::size_t x = 0; x < n; ++x)
        if (inter[x]) pts.push_back(x);
      if (!S.is_connected(pts)) hypothesis = false;
    }
    if (!hypothesis) continue;
    std::vector<char> total(n, 1);
    for (const auto& f : family) {
      auto mask = S.mask(f);
      for (std::size_t x = 0; x < n; ++x) total[x] = total[x] && mask[x];
    }
    PointSet pts;
    for (std::size_t x = 0; x < n; ++x)
      if (total[x]) pts.push_back(x);
    c.require(S.is_connected(pts),
              "intersection of closed family with connected sub-intersections");
  }
  return std::move(c.failures);
}

}  // namespace detail

inline VerifyReport verify_section2(const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.suite = "section2";
  report.seed = opt.seed;

  std::vector<const FiniteSpectralSpace*> domains, codomains;
  for (int n = 1; n <= opt.max_domain; ++n)
    for (const auto& s : enumerate_posets(n)) domains.push_back(&s);
  for (int n = 1; n <= opt.max_codomain; ++n)
    for (const auto& s : enumerate_posets(n)) codomains.push_back(&s);

  struct Instance {
    int kind;  // 0 = pair of spaces, 1 = single space
    std::size_t a, b;
  };
  std::vector<Instance> instances;
  for (std::size_t i = 0; i < domains.size(); ++i)
    for (std::size_t j = 0; j < codomains.size(); ++j)
      if (domains[i]->size() >= codomains[j]->size())
        instances.push_back({0, i, j});
  for (std::size_t i = 0; i < domains.size(); ++i) instances.push_back({1, i, 0});

  std::uint64_t maps_checked = 0;
  std::vector<std::uint64_t> per_instance_count(instances.size(), 0);

  auto run = [&](std::size_t idx) -> std::vector<VerifyFailure> {
    const auto& inst = instances[idx];
    std::vector<VerifyFailure> failures;
    if (inst.kind == 0) {
      const auto& X = *domains[inst.a];
      const auto& Y = *codomains[inst.b];
      auto assignments = enumerate_monotone_surjection_assignments(X, Y);
      per_instance_count[idx] = assignments.size();
      for (std::size_t k = 0; k < assignments.size(); ++k) {
        SpectralMapData m(X, Y, assignments[k]);
        std::string instance = "X" + std::to_string(inst.a) + "/Y" +
                               std::to_string(inst.b) + "/map" + std::to_string(k);
        auto f = detail::check_corpus_map(m, instance);
        failures.insert(failures.end(), f.begin(), f.end());
      }
    } else {
      per_instance_count[idx] = 1;
      auto f = detail::check_corpus_space(*domains[inst.a],
                                          "space" + std::to_string(inst.a), opt.seed);
      failures.insert(failures.end(), f.begin(), f.end());
    }
    return failures;
  };

  auto results = detail::run_instances(instances.size(), opt.jobs, run);
  for (std::size_t i = 0; i < results.size(); ++i) {
    maps_checked += per_instance_count[i];
    report.failures.insert(report.failures.end(), results[i].begin(), results[i].end());
  }
  report.instances = maps_checked;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Group/Burnside suite: three-way Dress agreement and marks invariants.

namespace detail {

inline std::vector<VerifyFailure> check_group_burnside(const std::string& name) {
  Checker c{name, {}};
  SubgroupLattice lat(catalog(name));
  const auto& g = lat.group();
  MarksTable marks = table_of_marks(lat);
  const std::size_t nc = lat.class_count();

  // Marks invariants.
  for (std::size_t h = 0; h < nc; ++h)
    for (std::size_t k = 0; k < nc; ++k) {
      if (marks.m[h][k] != 0) {
        bool subconjugate = false;
        for (auto hh : lat.class_members(h))
          if (lat.leq(hh, lat.class_representative(k))) subconjugate = true;
        c.require(subconjugate, "nonzero mark implies subconjugate",
                  marks.class_labels[h] + "," + marks.class_labels[k]);
      }
    }
  for (std::size_t h = 0; h < nc; ++h) {
    std::size_t rep = lat.class_representative(h);
    std::size_t normalizer = 0;
    for (std::size_t e = 0; e < g.order(); ++e)
      if (lat.conjugate_subgroup(rep, e) == rep) ++normalizer;
    c.require(marks.m[h][h] == static_cast<long>(normalizer / lat.subgroup_order(rep)),
              "diagonal mark equals |N(H)|/|H|", marks.class_labels[h]);
  }
  for (std::size_t k = 0; k < nc; ++k)
    c.require(marks.m[0][k] ==
                  static_cast<long>(g.order() / lat.class_order(k)),
              "trivial row lists coset counts", marks.class_labels[k]);

  // Representative independence of the counting.
  for (std::size_t h = 0; h < nc; ++h) {
    const auto& members = lat.class_members(h);
    if (members.size() < 2) continue;
    std::size_t alt = members.back();
    for (std::size_t k = 0; k < nc; ++k)
      c.require(fixed_cosets(lat, alt, lat.class_representative(k)) == marks.m[h][k],
                "marks independent of representatives", marks.class_labels[h]);
  }

  for (long p : primes_dividing(g.order())) {
    const std::string ps = std::to_string(p);
    // o_p invariants.
    for (std::size_t cl = 0; cl < nc; ++cl) {
      std::size_t h = lat.class_representative(cl);
      std::size_t oph = lat.o_p(h, p);
      c.require(lat.normal_in(oph, h), "o_p is normal", lat.class_label(cl) + ",p=" + ps);
      std::size_t idx = lat.subgroup_order(h) / lat.subgroup_order(oph);
      while (idx % static_cast<std::size_t>(p) == 0) idx /= static_cast<std::size_t>(p);
      c.require(idx == 1, "o_p has p-power index", lat.class_label(cl) + ",p=" + ps);
      c.require(lat.o_p(oph, p) == oph, "o_p is idempotent",
                lat.class_label(cl) + ",p=" + ps);
      for (std::size_t e = 0; e < g.order(); ++e) {
        std::size_t hg = lat.conjugate_subgroup(h, e);
        c.require(lat.conjugate_subgroup(oph, e) == lat.o_p(hg, p),
                  "o_p commutes with conjugation", lat.class_label(cl) + ",p=" + ps);
      }
    }
    // p-subnormal iff equal o_p, for nested subgroups.
    for (std::size_t h = 0; h < lat.subgroup_count(); ++h)
      for (std::size_t k = 0; k < lat.subgroup_count(); ++k) {
        if (!lat.leq(h, k)) continue;
        bool psn = lat.is_p_subnormal(h, k, p);
        bool same_op = lat.o_p(h, p) == lat.o_p(k, p);
        c.require(psn == same_op, "p-subnormal iff equal o_p",
                  std::to_string(h) + "<=" + std::to_string(k) + ",p=" + ps);
      }
    // Three-way agreement on all ordered class pairs.
    for (std::size_t a = 0; a < nc; ++a)
      for (std::size_t b = 0; b < nc; ++b) {
        BurnsidePoint qa{a, p}, qb{b, p};
        bool dress = dress_equal(lat, qa, qb);
        bool subnormal = dress_equal_via_subnormality(lat, qa, qb);
        bool kernel = mark_kernel_contained(marks, a, b, p);
        c.require(dress == subnormal, "Dress equality iff intersection p-subnormality",
                  lat.class_label(a) + "," + lat.class_label(b) + ",p=" + ps);
        c.require(dress == kernel, "Dress equality iff mark-kernel containment",
                  lat.class_label(a) + "," + lat.class_label(b) + ",p=" + ps);
      }
    // dress_equal is an equivalence relation.
    for (std::size_t a = 0; a < nc; ++a) {
      c.require(dress_equal(lat, {a, p}, {a, p}), "dress_equal reflexive");
      for (std::size_t b = 0; b < nc; ++b) {
        c.require(dress_equal(lat, {a, p}, {b, p}) == dress_equal(lat, {b, p}, {a, p}),
                  "dress_equal symmetric");
        for (std::size_t d = 0; d < nc; ++d)
          if (dress_equal(lat, {a, p}, {b, p}) && dress_equal(lat, {b, p}, {d, p}))
            c.require(dress_equal(lat, {a, p}, {d, p}), "dress_equal transitive");
      }
    }
    // Dress congruence: |X^H| = |X^{O^p(H)}| mod p, columnwise.
    for (std::size_t cl = 0; cl < nc; ++cl) {
      std::size_t op_class = lat.o_p_class(cl, p);
      for (std::size_t k = 0; k < nc; ++k)
        c.require((marks.m[cl][k] - marks.m[op_class][k]) % p == 0,
                  "mark congruence against o_p", lat.class_label(cl) + ",p=" + ps);
    }
  }

  // Spectrum shape.
  auto primes = default_primes(lat);
  if (!primes.empty()) {
    BurnsideSpec spec = spec_burnside(lat, primes);
    std::size_t char0 = 0;
    for (const auto& mem : spec.members)
      if (mem.front().characteristic == 0) ++char0;
    c.require(char0 == nc, "one generic point per conjugacy class");
    for (std::size_t pt = 0; pt < spec.space.size(); ++pt) {
      if (spec.members[pt].front().characteristic == 0) continue;
      bool maximal = true;
      for (std::size_t other = 0; other < spec.space.size(); ++other)
        if (other != pt && spec.space.leq(pt, other)) maximal = false;
      c.require(maximal, "residue points are closed", spec.space.id(pt));
    }
    // Every generic point has exactly one residue specialization per prime.
    for (std::size_t cl = 0; cl < nc; ++cl)
      for (long p : primes) {
        PointIndex from = spec.point(cl, 0);
        std::size_t targets = 0;
        for (std::size_t pt = 0; pt < spec.space.size(); ++pt)
          if (pt != from && spec.space.leq(from, pt) &&
              spec.members[pt].front().characteristic == p)
            ++targets;
        c.require(targets == 1, "one residue specialization per prime",
                  spec.space.id(from) + ",p=" + std::to_string(p));
      }
  }
  return std::move(c.failures);
}

}  // namespace detail

inline VerifyReport verify_burnside(const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.suite = "burnside";
  report.seed = opt.seed;
  std::vector<std::string> groups = opt.groups.empty() ? default_catalog() : opt.groups;
  auto results = detail::run_instances(
      groups.size(), opt.jobs,
      [&](std::size_t i) { return detail::check_group_burnside(groups[i]); });
  for (auto& r : results)
    report.failures.insert(report.failures.end(), r.begin(), r.end());
  report.instances = groups.size();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Derived Mackey suite: the comparison with Spec(A(G)).

namespace detail {

inline std::vector<VerifyFailure> check_group_dhz(const std::string& name) {
  Checker c{name, {}};
  SubgroupLattice lat(catalog(name));
  auto primes = default_primes(lat);
  if (primes.empty()) primes = {2};  // trivial group: compare over one prime
  DhzComparison cmp = dhzg_comparison(lat, primes);

  c.require(cmp.map.is_surjective(), "comparison is surjective");
  c.require(is_topological_quotient(cmp.map), "comparison is a topological quotient");
  c.require(fibers_connected(cmp.map), "comparison has connected fibers");

  // Fibers are local: a unique relatively closed (maximal) point each.
  for (std::size_t y = 0; y < cmp.burnside.space.size(); ++y) {
    auto fiber = cmp.map.fiber(y);
    std::size_t maximal = 0;
    for (auto x : fiber) {
      bool is_max = true;
      for (auto x2 : fiber)
        if (x2 != x && cmp.dhz.space.leq(x, x2)) is_max = false;
      if (is_max) ++maximal;
    }
    c.require(maximal == 1, "fiber has a unique relatively closed point",
              cmp.burnside.space.id(y));
  }

  // The comparison factors the Dress relation exactly.
  for (std::size_t x = 0; x < cmp.dhz.space.size(); ++x)
    for (std::size_t x2 = 0; x2 < cmp.dhz.space.size(); ++x2) {
      BurnsidePoint a{cmp.dhz.meta[x].class_id, cmp.dhz.meta[x].characteristic};
      BurnsidePoint b{cmp.dhz.meta[x2].class_id, cmp.dhz.meta[x2].characteristic};
      c.require((cmp.map(x) == cmp.map(x2)) == dress_equal(lat, a, b),
                "comparison identifies exactly Dress-equal points",
                cmp.dhz.space.id(x) + "," + cmp.dhz.space.id(x2));
    }

  if (lat.group().order() == 1)
    c.require(cmp.map.is_injective(), "trivial group comparison is injective");

  return std::move(c.failures);
}

}  // namespace detail

inline VerifyReport verify_dhz(const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.suite = "dhz";
  report.seed = opt.seed;
  std::vector<std::string> groups = opt.groups.empty() ? default_catalog() : opt.groups;
  auto results = detail::run_instances(
      groups.size(), opt.jobs,
      [&](std::size_t i) { return detail::check_group_dhz(groups[i]); });
  for (auto& r : results)
    report.failures.insert(report.failures.end(), r.begin(), r.end());
  report.instances = groups.size();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Truncated SH_{C_p} suite.

namespace detail {

inline std::vector<VerifyFailure> check_shg_cp(long p, long n_max,
                                               const std::vector<long>& primes) {
  std::string tag = "p=" + std::to_string(p) + ",height=" + std::to_string(n_max);
  Checker c{tag, {}};
  ShgCpUnitation uni = unitation_shg_cp(p, primes, n_max);

  std::size_t big_fibers = 0, big_size = 0;
  for (std::size_t y = 0; y < uni.quotient.size(); ++y) {
    auto f = uni.map.fiber(y);
    if (f.size() > 1) {
      ++big_fibers;
      big_size = f.size();
    }
  }
  c.require(big_fibers == 1 && big_size == 2, "unitation glues exactly one pair");

  c.require(is_topological_quotient(uni.map), "unitation is a topological quotient");
  auto routes = strong_quotient_routes(uni.map);
  c.require(routes.immediate_lifting && routes.agree(),
            "unitation is a strong topological quotient by all three routes");
  c.require(fibers_connected(uni.map), "unitation has connected fibers");

  // Injectivity and order-isomorphism away from height infinity.
  PointSet finite_src;
  for (std::size_t x = 0; x < uni.source.space.size(); ++x)
    if (uni.source.meta[x].height != -1) finite_src.push_back(x);
  for (auto x : finite_src) {
    auto fiber = uni.map.fiber(uni.map(x));
    c.require(fiber.size() == 1, "unitation injective below the truncation height",
              uni.source.space.id(x));
  }
  bool iso = true;
  for (auto x : finite_src)
    for (auto x2 : finite_src)
      if (uni.source.space.leq(x, x2) != uni.quotient.leq(uni.map(x), uni.map(x2)))
        iso = false;
  c.require(iso, "unitation restricts to an order isomorphism below the truncation");
  return std::move(c.failures);
}

}  // namespace detail

inline VerifyReport verify_shg_cp(const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.suite = "shg-cp";
  report.seed = opt.seed;

  struct Instance {
    long p;
    long n_max;
    std::vector<long> primes;
    std::string group;  // nonempty = gluing cross-check instance
  };
  std::vector<Instance> instances;
  long q = opt.prime == 2 ? 3 : 2;
  instances.push_back({opt.prime, opt.height, {opt.prime}, ""});
  instances.push_back({opt.prime, opt.height, {opt.prime, q}, ""});
  std::vector<std::string> groups = opt.groups.empty() ? default_catalog() : opt.groups;
  for (const auto& g : groups) instances.push_back({0, 0, {}, g});

  auto run = [&](std::size_t i) -> std::vector<VerifyFailure> {
    const auto& inst = instances[i];
    if (inst.group.empty()) return detail::check_shg_cp(inst.p, inst.n_max, inst.primes);
    // Height-infinity gluing equals the Dress partition.
    detail::Checker c{inst.group, {}};
    SubgroupLattice lat(catalog(inst.group));
    auto primes = default_primes(lat);
    if (primes.empty()) primes = {2};
    InfinityGluing gluing = shg_infinity_gluing(lat, primes);
    std::vector<std::vector<std::pair<std::size_t, long>>> dress_blocks;
    for (long p : primes) {
      std::map<std::size_t, std::vector<std::pair<std::size_t, long>>> by_rep;
      for (std::size_t cl = 0; cl < lat.class_count(); ++cl)
        by_rep[lat.o_p_class(cl, p)].push_back({cl, p});
      for (auto& [rep, block] : by_rep) dress_blocks.push_back(block);
    }
    std::sort(dress_blocks.begin(), dress_blocks.end(),
              [](const auto& a, const auto& b) {
                if (a.front().second != b.front().second)
                  return a.front().second < b.front().second;
                return a.front().first < b.front().first;
              });
    c.require(gluing.blocks == dress_blocks,
              "height-infinity gluing equals the Dress partition");
    return std::move(c.failures);
  };

  auto results = detail::run_instances(instances.size(), opt.jobs, run);
  for (auto& r : results)
    report.failures.insert(report.failures.end(), r.begin(), r.end());
  report.instances = instances.size();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------

inline VerifyReport verify_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "section2") return verify_section2(opt);
  if (suite == "burnside") return verify_burnside(opt);
  if (suite == "dhz") return verify_dhz(opt);
  if (suite == "shg-cp") return verify_shg_cp(opt);
  if (suite == "all") {
    VerifyReport all;
    all.suite = "all";
    all.seed = opt.seed;
    for (const char* name : {"section2", "burnside", "dhz", "shg-cp"}) {
      VerifyReport r = verify_suite(name, opt);
      all.instances += r.instances;
      all.wall_seconds += r.wall_seconds;
      all.failures.insert(all.failures.end(), r.failures.begin(), r.failures.end());
    }
    return all;
  }
  throw InputError("unknown suite '" + suite + "'");
}

}  // namespace ttg
