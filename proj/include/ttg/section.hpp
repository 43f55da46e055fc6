#pragma once

#include <string>
#include <vector>

#include "ttg/errors.hpp"
#include "ttg/map.hpp"
#include "ttg/predicates.hpp"
#include "ttg/space.hpp"

namespace ttg {

// Checker for the split-section situation: g : X -> Y a spectral map and
// f : Y -> X a (set-level) section of g. When f preserves specializations
// and x <= f(g(x)) for every x, then g is a closed quotient map, f is an
// order-embedding, and g(Z) = f^{-1}(Z) for every up-set Z of X.
//
// A failed hypothesis is a reported state, not an error: it means the lemma
// does not apply to this input. A violated conclusion means the input
// falsifies the statement and is surfaced for the test suite to flag.
struct SectionLemmaReport {
  bool hypotheses_hold = false;
  int failed_hypothesis = 0;       // 0 none, 1 or 2 otherwise
  std::string hypothesis_witness;  // point (or pair) where it fails

  bool closed_quotient = false;
  bool order_embedding = false;
  bool image_matches_section_preimage = false;
  std::vector<std::string> violated_conclusions;

  bool conclusions_hold() const { return hypotheses_hold && violated_conclusions.empty(); }
};

inline SectionLemmaReport check_section_lemma(const SpectralMapData& g,
                                              const std::vector<PointIndex>& f) {
  const auto& X = g.domain();
  const auto& Y = g.codomain();
  if (f.size() != Y.size())
    throw InputError("section must be total on the codomain");
  for (auto x : f)
    if (x >= X.size()) throw InputError("section value out of range");
  for (std::size_t y = 0; y < Y.size(); ++y)
    if (g(f[y]) != y)
      throw PreconditionError("f is not a section of g at '" + Y.id(y) + "'");

  SectionLemmaReport report;

  // Hypothesis (i): f preserves specializations.
  for (std::size_t y = 0; y < Y.size(); ++y)
    for (std::size_t y2 = 0; y2 < Y.size(); ++y2)
      if (Y.leq(y, y2) && !X.leq(f[y], f[y2])) {
        report.failed_hypothesis = 1;
        report.hypothesis_witness = "('" + Y.id(y) + "','" + Y.id(y2) + "')";
        return report;
      }
  // Hypothesis (ii): x specializes to f(g(x)).
  for (std::size_t x = 0; x < X.size(); ++x)
    if (!X.leq(x, f[g(x)])) {
      report.failed_hypothesis = 2;
      report.hypothesis_witness = X.id(x);
      return report;
    }
  report.hypotheses_hold = true;

  // (a) g is a closed map (hence, being surjective, a closed quotient, and
  // in particular a topological quotient). Since every up-set is the union
  // of the point closures it contains, it is enough that g maps each point
  // closure to an up-set.
  bool closed_map = true;
  for (std::size_t x = 0; x < X.size() && closed_map; ++x) {
    auto image = g.image_set(X.closure({x}));
    if (!Y.is_up_set(image)) closed_map = false;
  }
  report.closed_quotient = closed_map && is_topological_quotient(g);
  if (!report.closed_quotient)
    report.violated_conclusions.push_back("g is a closed quotient map");

  // (b) f is an order-embedding.
  report.order_embedding = true;
  for (std::size_t y = 0; y < Y.size() && report.order_embedding; ++y)
    for (std::size_t y2 = 0; y2 < Y.size(); ++y2)
      if (Y.leq(y, y2) != X.leq(f[y], f[y2])) {
        report.order_embedding = false;
        break;
      }
  if (!report.order_embedding)
    report.violated_conclusions.push_back("f is an order-embedding");

  // (c) g(Z) = f^{-1}(Z) for every up-set Z; by the same union argument it
  // suffices to compare on point closures.
  report.image_matches_section_preimage = true;
  for (std::size_t x = 0; x < X.size(); ++x) {
    auto z = X.closure({x});
    auto z_mask = X.mask(z);
    PointSet image = g.image_set(z);
    PointSet section_preimage;
    for (std::size_t y = 0; y < Y.size(); ++y)
      if (z_mask[f[y]]) section_preimage.push_back(y);
    if (image != section_preimage) {
      report.image_matches_section_preimage = false;
      break;
    }
  }
  if (!report.image_matches_section_preimage)
    report.violated_conclusions.push_back("g(Z) = f^{-1}(Z) for up-sets Z");

  return report;
}

}  // namespace ttg
