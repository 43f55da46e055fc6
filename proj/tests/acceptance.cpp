// Acceptance suite: every criterion prints one [PASS]/[FAIL] line; the
// process exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ttg/burnside.hpp"
#include "ttg/enumerate.hpp"
#include "ttg/equivariant.hpp"
#include "ttg/fixtures.hpp"
#include "ttg/io.hpp"
#include "ttg/lattice.hpp"
#include "ttg/marks.hpp"
#include "ttg/perm.hpp"
#include "ttg/predicates.hpp"
#include "ttg/quotient.hpp"
#include "ttg/verify.hpp"

using namespace ttg;

namespace {

int criteria_failed = 0;

void report(int criterion, const std::string& description, bool pass,
            const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": "
            << description << " (" << detail << ")\n";
  if (!pass) ++criteria_failed;
}

struct CorpusStats {
  std::uint64_t maps = 0;
  std::uint64_t equivalence_failures = 0;   // quotient <=> heritable
  std::uint64_t lifting_failures = 0;       // weak lifting => quotient
  std::uint64_t route_failures = 0;         // three strong routes agree
  std::uint64_t connectivity_failures = 0;  // preimages of connected sets
  std::uint64_t lemma_failures = 0;         // closed families
  double seconds = 0;
};

CorpusStats run_corpus(unsigned jobs) {
  auto start = std::chrono::steady_clock::now();
  CorpusStats stats;

  std::vector<const FiniteSpectralSpace*> domains, codomains;
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : enumerate_posets(n)) domains.push_back(&s);
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_posets(n)) codomains.push_back(&s);

  struct Slot {
    std::uint64_t maps = 0, equivalence = 0, lifting = 0, routes = 0, connectivity = 0;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < domains.size(); ++i)
    for (std::size_t j = 0; j < codomains.size(); ++j)
      if (domains[i]->size() >= codomains[j]->size()) pairs.emplace_back(i, j);
  std::vector<Slot> slots(pairs.size());

  auto run_pair = [&](std::size_t idx) {
    const auto& X = *domains[pairs[idx].first];
    const auto& Y = *codomains[pairs[idx].second];
    Slot& slot = slots[idx];
    for (auto& assign : enumerate_monotone_surjection_assignments(X, Y)) {
      SpectralMapData m(X, Y, std::move(assign));
      ++slot.maps;
      bool quotient = is_topological_quotient(m);
      if (quotient != is_heritable_weak_spectral_quotient(m)) ++slot.equivalence;
      bool lifting = has_weak_lifting_property(m);
      if (lifting && !quotient) ++slot.lifting;
      if (!strong_quotient_routes(m).agree()) ++slot.routes;
      if (quotient && fibers_connected(m)) {
        for (const auto& u : Y.all_down_sets()) {
          PointSet open_set, closed_set;
          for (std::size_t y = 0; y < Y.size(); ++y)
            (u.test(y) ? open_set : closed_set).push_back(y);
          if (!open_set.empty() && Y.is_connected(open_set) &&
              !X.is_connected(m.preimage(open_set)))
            ++slot.connectivity;
          if (!closed_set.empty() && Y.is_connected(closed_set) &&
              !X.is_connected(m.preimage(closed_set)))
            ++slot.connectivity;
        }
      }
    }
  };
  detail::run_instances(pairs.size(), jobs, [&](std::size_t i) {
    run_pair(i);
    return std::vector<VerifyFailure>{};
  });
  for (const auto& slot : slots) {
    stats.maps += slot.maps;
    stats.equivalence_failures += slot.equivalence;
    stats.lifting_failures += slot.lifting;
    stats.route_failures += slot.routes;
    stats.connectivity_failures += slot.connectivity;
  }

  // Families of Thomason closed sets: whenever every subfamily intersection
  // is connected, so is the whole intersection. Deterministic family list:
  // all pairs and all triples from the up-set lattice of each corpus space.
  for (const auto* S : domains) {
    const std::size_t n = S->size();
    std::vector<PointSet> upsets;
    for (const auto& d : S->all_down_sets()) {
      PointSet up;
      for (std::size_t i = 0; i < n; ++i)
        if (!d.test(i)) up.push_back(i);
      if (!up.empty()) upsets.push_back(std::move(up));
    }
    auto intersect_connected = [&](const std::vector<const PointSet*>& family,
                                   std::uint32_t take) {
      std::vector<char> inter(n, 1);
      for (std::size_t i = 0; i < family.size(); ++i)
        if (take & (std::uint32_t{1} << i)) {
          auto mask = S->mask(*family[i]);
          for (std::size_t x = 0; x < n; ++x) inter[x] = inter[x] && mask[x];
        }
      PointSet pts;
      for (std::size_t x = 0; x < n; ++x)
        if (inter[x]) pts.push_back(x);
      return S->is_connected(pts);
    };
    auto check_family = [&](std::vector<const PointSet*> family) {
      const std::uint32_t all = (std::uint32_t{1} << family.size()) - 1;
      for (std::uint32_t take = 1; take <= all; ++take)
        if (!intersect_connected(family, take)) return;  // hypothesis fails
      if (!intersect_connected(family, all)) ++stats.lemma_failures;
    };
    for (std::size_t i = 0; i < upsets.size(); ++i)
      for (std::size_t j = i; j < upsets.size(); ++j) {
        check_family({&upsets[i], &upsets[j]});
        for (std::size_t k = j; k < upsets.size() && upsets.size() <= 16; ++k)
          check_family({&upsets[i], &upsets[j], &upsets[k]});
      }
  }

  stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

std::string count_detail(std::uint64_t checked, std::uint64_t failures,
                         const std::string& unit) {
  std::ostringstream out;
  out << checked << " " << unit << ", " << failures << " failures";
  return out.str();
}

}  // namespace

int main() {
  unsigned jobs = std::max(2u, std::thread::hardware_concurrency());

  // Criteria 1, 2, 4: the exhaustive corpus.
  CorpusStats corpus = run_corpus(jobs);
  {
    std::ostringstream detail;
    detail << corpus.maps << " monotone surjections, " << corpus.equivalence_failures
           << " discrepancies, " << corpus.seconds << "s";
    report(1, "quotient iff heritable-weak over the exhaustive corpus",
           corpus.equivalence_failures == 0 && corpus.seconds < 300.0, detail.str());
  }
  report(2, "weak lifting implies quotient; strong-quotient routes agree",
         corpus.lifting_failures == 0 && corpus.route_failures == 0,
         count_detail(corpus.maps, corpus.lifting_failures + corpus.route_failures,
                      "maps"));

  // Criterion 3: the weak-but-not-spectral counterexample fixture.
  {
    auto fx = fixtures();
    bool weak = is_weak_spectral_quotient(fx.vee_over_chain);
    bool quotient = is_topological_quotient(fx.vee_over_chain);
    bool core_weak = is_weak_spectral_quotient(fx.vee_over_chain_corestriction);
    report(3, "vee-over-chain fixture: weak, not a quotient, corestriction not weak",
           weak && !quotient && !core_weak,
           "weak=" + std::to_string(weak) + " quotient=" + std::to_string(quotient) +
               " corestriction_weak=" + std::to_string(core_weak));
  }

  report(4, "connectivity: preimages of connected sets and closed-family intersections",
         corpus.connectivity_failures == 0 && corpus.lemma_failures == 0,
         count_detail(corpus.maps, corpus.connectivity_failures + corpus.lemma_failures,
                      "maps+families"));

  // Criterion 5: three-way agreement for every catalog group and p | |G|.
  {
    std::uint64_t checked = 0, failures = 0;
    for (const auto& name : default_catalog()) {
      SubgroupLattice lat(catalog(name));
      MarksTable marks = table_of_marks(lat);
      for (long p : primes_dividing(lat.group().order()))
        for (std::size_t a = 0; a < lat.class_count(); ++a)
          for (std::size_t b = 0; b < lat.class_count(); ++b) {
            ++checked;
            bool dress = dress_equal(lat, {a, p}, {b, p});
            if (dress != dress_equal_via_subnormality(lat, {a, p}, {b, p})) ++failures;
            if (dress != mark_kernel_contained(marks, a, b, p)) ++failures;
          }
    }
    report(5, "Dress gluing: O^p conjugacy, intersection p-subnormality, mark kernels",
           failures == 0, count_detail(checked, failures, "class pairs"));
  }

  // Criterion 6: Burnside spectra of S_3 and C_p.
  {
    bool ok = true;
    std::ostringstream detail;
    SubgroupLattice s3(catalog("S_3"));
    auto spec = spec_burnside(s3, {2, 3});
    ok &= spec.space.size() == 9;
    auto covers = spec.space.covering_pairs();
    ok &= covers.size() == 8;
    // Each generic point q(H,0) covers exactly the Dress point of (H,p).
    for (std::size_t c = 0; c < s3.class_count() && ok; ++c)
      for (long p : {2L, 3L}) {
        PointIndex from = spec.point(c, 0), to = spec.point(c, p);
        ok &= spec.space.leq(from, to);
      }
    detail << "S_3: " << spec.space.size() << " points, " << covers.size() << " edges";
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
      SubgroupLattice cp(catalog("C_" + std::to_string(p)));
      auto cps = spec_burnside(cp, {p});
      ok &= cps.space.size() == 3 && cps.space.covering_pairs().size() == 2;
    }
    detail << "; C_p over {p}: 3 points, 2 edges for p in {2,3,5,7,11}";
    report(6, "Burnside spectra match the computed gluing", ok, detail.str());
  }

  // Criterion 7: the derived Mackey comparison is a connected-fiber quotient.
  {
    std::uint64_t failures = 0;
    for (const auto& name : default_catalog()) {
      SubgroupLattice lat(catalog(name));
      auto cmp = dhzg_comparison(lat, default_primes(lat));
      if (!cmp.map.is_surjective() || !is_topological_quotient(cmp.map) ||
          !fibers_connected(cmp.map))
        ++failures;
    }
    bool cp_fiber_ok = true;
    for (long p : {2L, 3L, 5L}) {
      SubgroupLattice lat(catalog("C_" + std::to_string(p)));
      auto cmp = dhzg_comparison(lat, {p});
      auto fiber = cmp.map.fiber(cmp.burnside.point(0, p));
      PointIndex p1p = cmp.dhz.point(0, p), pcpp = cmp.dhz.point(1, p);
      // The fiber is the 2-chain on {P(1,p), P(C_p,p)}; its closed point is
      // P(1,p), so P(C_p,p) specializes to P(1,p).
      cp_fiber_ok &= fiber.size() == 2 && cmp.dhz.space.leq(pcpp, p1p) &&
                     !cmp.dhz.space.leq(p1p, pcpp);
    }
    report(7, "derived Mackey comparison: surjective quotient with connected fibers",
           failures == 0 && cp_fiber_ok,
           count_detail(default_catalog().size(), failures, "groups") +
               (cp_fiber_ok ? "; C_p residue fiber is a 2-chain"
                            : "; C_p residue fiber wrong"));
  }

  // Criterion 8: unitation of truncated SH_{C_p} and the infinity gluing.
  {
    bool ok = true;
    std::ostringstream detail;
    for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {3, 2}}) {
      auto uni = unitation_shg_cp(p, {p, q}, 4);
      std::size_t nontrivial = 0, size = 0;
      for (std::size_t y = 0; y < uni.quotient.size(); ++y) {
        auto f = uni.map.fiber(y);
        if (f.size() > 1) {
          ++nontrivial;
          size = f.size();
        }
      }
      ok &= nontrivial == 1 && size == 2;
      auto routes = strong_quotient_routes(uni.map);
      ok &= routes.immediate_lifting && routes.agree();
      ok &= fibers_connected(uni.map);
      PointSet finite;
      for (std::size_t x = 0; x < uni.source.space.size(); ++x)
        if (uni.source.meta[x].height != -1) finite.push_back(x);
      for (auto x : finite)
        for (auto x2 : finite) {
          if (x != x2 && uni.map(x) == uni.map(x2)) ok = false;
          if (uni.source.space.leq(x, x2) != uni.quotient.leq(uni.map(x), uni.map(x2)))
            ok = false;
        }
    }
    detail << "p=2,3 with one auxiliary prime, height 4";
    std::uint64_t gluing_failures = 0;
    for (const auto& name : default_catalog()) {
      SubgroupLattice lat(catalog(name));
      auto primes = default_primes(lat);
      if (primes.empty()) primes = {2};
      auto gluing = shg_infinity_gluing(lat, primes);
      for (long p : primes) {
        std::map<std::size_t, std::set<std::size_t>> dress;
        for (std::size_t c = 0; c < lat.class_count(); ++c)
          dress[lat.o_p_class(c, p)].insert(c);
        std::set<std::set<std::size_t>> dress_blocks, glue_blocks;
        for (auto& [rep, block] : dress) dress_blocks.insert(block);
        for (const auto& block : gluing.blocks) {
          if (block.front().second != p) continue;
          std::set<std::size_t> b;
          for (auto [c, pp] : block) b.insert(c);
          glue_blocks.insert(b);
        }
        if (dress_blocks != glue_blocks) ++gluing_failures;
      }
    }
    detail << "; gluing equals Dress partition on " << default_catalog().size()
           << " groups";
    report(8, "truncated SH_{C_p} unitation glues one pair; gluing matches Dress",
           ok && gluing_failures == 0, detail.str());
  }

  // Criterion 9: the three-point scheme fixture.
  {
    auto fx = fixtures();
    const auto& m = fx.three_point_affinization;
    auto fiber = m.fiber(m.codomain().index("closed"));
    bool ok = is_topological_quotient(m) &&
              m.domain().connected_components(fiber).size() == 2;
    report(9, "three-point scheme affinization: quotient with a disconnected fiber", ok,
           "fiber components=" +
               std::to_string(m.domain().connected_components(fiber).size()));
  }

  // Criterion 10: unigenic locus for every catalog p-group.
  {
    std::uint64_t checked = 0, failures = 0;
    for (const auto& name : default_catalog()) {
      SubgroupLattice lat(catalog(name));
      auto primes = primes_dividing(lat.group().order());
      if (primes.size() != 1) continue;  // p-groups only
      long p = primes.front();
      ++checked;
      try {
        auto locus = unigenic_locus_dhzg(lat, p);
        // Exactly {P(G,p)} together with all characteristic-zero points.
        if (locus.locus.size() != lat.class_count() + 1) ++failures;
        if (!locus.spec.space.is_down_set(locus.locus)) ++failures;
        PointIndex full_point =
            locus.spec.point(lat.class_of(lat.full_subgroup()), p);
        bool has_full = std::binary_search(locus.locus.begin(), locus.locus.end(),
                                           full_point);
        if (!has_full) ++failures;
      } catch (const std::exception&) {
        ++failures;
      }
    }
    report(10, "unigenic locus of p-local derived Mackey functors", failures == 0,
           count_detail(checked, failures, "p-groups"));
  }

  // Criterion 11: verify reports are byte-identical across worker counts.
  {
    VerifyOptions a, b;
    a.seed = b.seed = 12345;
    a.jobs = 1;
    b.jobs = 4;
    auto ra = verify_suite("all", a);
    auto rb = verify_suite("all", b);
    std::string sa = dump_json(report_to_json(ra));
    std::string sb = dump_json(report_to_json(rb));
    report(11, "verify reports are deterministic across --jobs",
           sa == sb && ra.ok() && rb.ok(),
           std::to_string(ra.instances) + " instances, reports " +
               (sa == sb ? "identical" : "differ"));
  }

  if (criteria_failed == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << criteria_failed << " criteria failed\n";
  return 1;
}
