#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ttg/enumerate.hpp"
#include "ttg/fixtures.hpp"

using namespace ttg;

TEST_CASE("poset counts up to isomorphism") {
  CHECK(enumerate_posets(1).size() == 1);
  CHECK(enumerate_posets(2).size() == 2);
  CHECK(enumerate_posets(3).size() == 5);
  CHECK(enumerate_posets(4).size() == 16);
  CHECK(enumerate_posets(5).size() == 63);
}

TEST_CASE("six-point count and range checks") {
  CHECK(enumerate_posets(6).size() == 318);
  CHECK_THROWS_AS(enumerate_posets(0), InputError);
  CHECK_THROWS_AS(enumerate_posets(7), InputError);
}

TEST_CASE("enumerated posets are pairwise non-isomorphic") {
  std::set<std::string> canon;
  for (const auto& s : enumerate_posets(4)) canon.insert(canonical_form(s));
  CHECK(canon.size() == 16);
}

TEST_CASE("canonical form is a relabeling invariant") {
  FiniteSpectralSpace a({"u", "v", "w"}, {{"u", "v"}, {"u", "w"}});
  FiniteSpectralSpace b({"x", "y", "z"}, {{"z", "x"}, {"z", "y"}});
  CHECK(are_isomorphic(a, b));
  FiniteSpectralSpace chain({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  CHECK_FALSE(are_isomorphic(a, chain));
}

TEST_CASE("monotone surjections between chains") {
  FiniteSpectralSpace chain2({"a", "b"}, {{"a", "b"}});
  auto maps = enumerate_monotone_surjections(chain2, chain2);
  CHECK(maps.size() == 1);  // only the identity is monotone and onto
}

TEST_CASE("monotone surjections respect both orders") {
  auto fx = fixtures();
  auto maps = enumerate_monotone_surjections(fx.vee, fx.three_chain);
  for (const auto& m : maps) {
    CHECK(m.is_surjective());
    for (std::size_t x = 0; x < fx.vee.size(); ++x)
      for (std::size_t y = 0; y < fx.vee.size(); ++y)
        if (fx.vee.leq(x, y)) CHECK(fx.three_chain.leq(m(x), m(y)));
  }
  // A vee has two monotone surjections onto a 3-chain (swap the generics).
  CHECK(maps.size() == 2);
}
