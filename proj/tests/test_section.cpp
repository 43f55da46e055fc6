#include <catch2/catch_amalgamated.hpp>

#include "ttg/section.hpp"

using namespace ttg;

TEST_CASE("identity section satisfies every conclusion") {
  FiniteSpectralSpace chain({"a", "b"}, {{"a", "b"}});
  std::vector<PointIndex> id{0, 1};
  SpectralMapData g(chain, chain, id);
  auto report = check_section_lemma(g, id);
  CHECK(report.hypotheses_hold);
  CHECK(report.conclusions_hold());
  CHECK(report.closed_quotient);
  CHECK(report.order_embedding);
  CHECK(report.image_matches_section_preimage);
}

TEST_CASE("three-chain onto two-chain with the upper section") {
  // x0 <= x0' <= x1 mapping onto y0 <= y1 by x0, x0' -> y0 and x1 -> y1;
  // the section picks the closed ends f(y0) = x0', f(y1) = x1.
  FiniteSpectralSpace X({"x0", "x0p", "x1"}, {{"x0", "x0p"}, {"x0p", "x1"}});
  FiniteSpectralSpace Y({"y0", "y1"}, {{"y0", "y1"}});
  SpectralMapData g(X, Y, std::vector<PointIndex>{0, 0, 1});
  std::vector<PointIndex> f{X.index("x0p"), X.index("x1")};
  auto report = check_section_lemma(g, f);
  CHECK(report.hypotheses_hold);
  CHECK(report.conclusions_hold());
  CHECK(report.closed_quotient);
}

TEST_CASE("vee onto two-chain fails hypothesis (ii) with witness c") {
  // b <= a, c <= a onto y0 <= y1 by b, c -> y0 and a -> y1, with f(y0) = b:
  // then c does not specialize to f(g(c)) = b.
  FiniteSpectralSpace X({"a", "b", "c"}, {{"b", "a"}, {"c", "a"}});
  FiniteSpectralSpace Y({"y0", "y1"}, {{"y0", "y1"}});
  SpectralMapData g(X, Y,
                    std::map<std::string, std::string>{
                        {"b", "y0"}, {"c", "y0"}, {"a", "y1"}});
  std::vector<PointIndex> f{X.index("b"), X.index("a")};
  auto report = check_section_lemma(g, f);
  CHECK_FALSE(report.hypotheses_hold);
  CHECK(report.failed_hypothesis == 2);
  CHECK(report.hypothesis_witness == "c");
}

TEST_CASE("non-sections are rejected") {
  FiniteSpectralSpace chain({"a", "b"}, {{"a", "b"}});
  SpectralMapData g(chain, chain, std::vector<PointIndex>{0, 1});
  CHECK_THROWS_AS(check_section_lemma(g, std::vector<PointIndex>{1, 1}),
                  PreconditionError);
}
