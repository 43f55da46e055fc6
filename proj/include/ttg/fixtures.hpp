#pragma once

#include <map>
#include <string>

#include "ttg/map.hpp"
#include "ttg/space.hpp"

namespace ttg {

// Small hand-pinned spaces and maps used throughout the test suites.
//
// vee_over_chain: the V-shaped space with two generic points b, c under a
// single closed point a, mapped onto the 3-chain r <= q <= p by b -> r,
// c -> q, a -> p. It is a weak spectral quotient that is neither a
// topological quotient nor heritable; its corestriction away from the closed
// point p is not even weak. The assignment is pinned by those three
// properties, which determine it uniquely up to swapping the two generic
// points b and c; the test suite re-derives all three.
//
// three_point_scheme: the smallest nonaffine scheme {p <= q1, p <= q2} (one
// generic point under two closed points) with its affinization onto the
// 2-chain generic <= closed. The affinization is a topological quotient
// whose fiber over the closed point has two connected components.
struct Fixtures {
  FiniteSpectralSpace vee;          // {b <= a, c <= a}
  FiniteSpectralSpace three_chain;  // r <= q <= p
  SpectralMapData vee_over_chain;
  SpectralMapData vee_over_chain_corestriction;  // away from the closed point p

  FiniteSpectralSpace three_point_scheme;  // {p <= q1, p <= q2}
  FiniteSpectralSpace two_chain;           // generic <= closed
  SpectralMapData three_point_affinization;
};

inline Fixtures fixtures() {
  FiniteSpectralSpace vee({"a", "b", "c"}, {{"b", "a"}, {"c", "a"}});
  FiniteSpectralSpace chain3({"r", "q", "p"}, {{"r", "q"}, {"q", "p"}});
  SpectralMapData vee_map(vee, chain3,
                          std::map<std::string, std::string>{
                              {"b", "r"}, {"c", "q"}, {"a", "p"}});
  PointSet away_from_p = {chain3.index("r"), chain3.index("q")};
  SpectralMapData corestriction = vee_map.corestrict(away_from_p);

  FiniteSpectralSpace scheme({"p", "q1", "q2"}, {{"p", "q1"}, {"p", "q2"}});
  FiniteSpectralSpace chain2({"generic", "closed"}, {{"generic", "closed"}});
  SpectralMapData affinization(scheme, chain2,
                               std::map<std::string, std::string>{
                                   {"p", "generic"}, {"q1", "closed"}, {"q2", "closed"}});

  return Fixtures{std::move(vee),    std::move(chain3),
                       std::move(vee_map), std::move(corestriction),
                       std::move(scheme), std::move(chain2),
                       std::move(affinization)};
}

}  // namespace ttg
