#include <catch2/catch_amalgamated.hpp>

#include "ttg/fixtures.hpp"
#include "ttg/quotient.hpp"
#include "ttg/space.hpp"

using namespace ttg;

TEST_CASE("closure on a chain") {
  FiniteSpectralSpace chain({"r", "q", "p"}, {{"r", "q"}, {"q", "p"}});
  CHECK(closure_labels(chain, {"r"}) == std::vector<std::string>{"p", "q", "r"});
  CHECK(closure_labels(chain, {"q"}) == std::vector<std::string>{"p", "q"});
  CHECK(closure_labels(chain, {}) == std::vector<std::string>{});
}

TEST_CASE("closure of the generic point of the three-point scheme") {
  auto fx = fixtures();
  CHECK(closure_labels(fx.three_point_scheme, {"p"}) ==
        std::vector<std::string>{"p", "q1", "q2"});
}

TEST_CASE("closure rejects unknown ids") {
  FiniteSpectralSpace chain({"a", "b"}, {{"a", "b"}});
  CHECK_THROWS_AS(chain.index("zz"), InputError);
}

TEST_CASE("construction normalizes and enforces antisymmetry") {
  // Transitive closure is applied on load.
  FiniteSpectralSpace s({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(s.leq(s.index("a"), s.index("c")));
  CHECK_THROWS_AS(FiniteSpectralSpace({"a", "b"}, {{"a", "b"}, {"b", "a"}}), NonT0Error);
  CHECK_THROWS_AS(FiniteSpectralSpace({"a", "a"}, {}), InputError);
}

TEST_CASE("connected components") {
  auto fx = fixtures();
  const auto& scheme = fx.three_point_scheme;
  PointSet closed_pair = {scheme.index("q1"), scheme.index("q2")};
  CHECK(scheme.connected_components(closed_pair).size() == 2);

  FiniteSpectralSpace chain({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(chain.connected_components(chain.all_points()).size() == 1);
  CHECK(chain.connected_components({}).empty());
}

TEST_CASE("covering pairs of a vee") {
  auto fx = fixtures();
  auto covers = fx.vee.covering_pairs();
  CHECK(covers.size() == 2);  // b -> a and c -> a
}

TEST_CASE("down-set enumeration") {
  FiniteSpectralSpace chain({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(chain.all_down_sets().size() == 4);  // {}, {a}, {a,b}, {a,b,c}
  FiniteSpectralSpace anti({"a", "b", "c"}, {});
  CHECK(anti.all_down_sets().size() == 8);
}

TEST_CASE("quotient of a chain collapse is a space") {
  FiniteSpectralSpace chain({"x0", "x1"}, {{"x0", "x1"}});
  auto part = PointPartition::glue(chain, {{"x0", "x1"}});
  auto [q, proj] = quotient_space(chain, part);
  CHECK(q.size() == 1);
  CHECK(proj.is_surjective());
}

TEST_CASE("identity partition gives an isomorphic copy") {
  auto fx = fixtures();
  const auto& vee = fx.vee;
  std::vector<PointSet> blocks;
  for (std::size_t i = 0; i < vee.size(); ++i) blocks.push_back({i});
  auto [q, proj] = quotient_space(vee, PointPartition::over(vee, blocks));
  CHECK(q.size() == vee.size());
  for (std::size_t i = 0; i < vee.size(); ++i)
    for (std::size_t j = 0; j < vee.size(); ++j)
      CHECK(vee.leq(i, j) == q.leq(proj(i), proj(j)));
}

TEST_CASE("non-T0 quotient is an error") {
  // Two chains a<=b, c<=d; blocks {a,d} and {b,c} become mutually comparable.
  FiniteSpectralSpace s({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  auto part = PointPartition::glue(s, {{"a", "d"}, {"b", "c"}});
  CHECK_THROWS_AS(quotient_space(s, part), NonT0Error);
}

TEST_CASE("partition validation") {
  FiniteSpectralSpace s({"a", "b"}, {});
  CHECK_THROWS_AS(PointPartition::over(s, {{0}}), InputError);           // not covering
  CHECK_THROWS_AS(PointPartition::over(s, {{0, 1}, {1}}), InputError);   // overlap
  CHECK_THROWS_AS(PointPartition::over(s, {{0, 1}, {}}), InputError);    // empty block
}

TEST_CASE("restriction keeps the induced order") {
  FiniteSpectralSpace chain({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto [sub, old_idx] = chain.restrict_to({0, 2});
  CHECK(sub.size() == 2);
  CHECK(sub.leq(sub.index("a"), sub.index("c")));
  CHECK_FALSE(sub.leq(sub.index("c"), sub.index("a")));
}
