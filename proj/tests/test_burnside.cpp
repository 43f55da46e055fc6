#include <catch2/catch_amalgamated.hpp>

#include "ttg/burnside.hpp"
#include "ttg/lattice.hpp"
#include "ttg/marks.hpp"

using namespace ttg;

TEST_CASE("table of marks of the trivial group") {
  SubgroupLattice lat(catalog("1"));
  auto t = table_of_marks(lat);
  REQUIRE(t.m.size() == 1);
  CHECK(t.m[0][0] == 1);
}

TEST_CASE("table of marks of C_2") {
  SubgroupLattice lat(catalog("C_2"));
  auto t = table_of_marks(lat);
  REQUIRE(t.m.size() == 2);
  CHECK(t.m[0] == std::vector<long>{2, 1});
  CHECK(t.m[1] == std::vector<long>{0, 1});
}

TEST_CASE("table of marks of S_3") {
  SubgroupLattice lat(catalog("S_3"));
  auto t = table_of_marks(lat);
  REQUIRE(t.class_labels == std::vector<std::string>{"1", "C_2", "C_3", "S_3"});
  CHECK(t.m[0] == std::vector<long>{6, 3, 2, 1});
  CHECK(t.m[1] == std::vector<long>{0, 1, 0, 1});
  CHECK(t.m[2] == std::vector<long>{0, 0, 2, 1});
  CHECK(t.m[3] == std::vector<long>{0, 0, 0, 1});
}

TEST_CASE("Dress equality in A(C_p)") {
  for (long p : {2L, 3L, 5L}) {
    SubgroupLattice lat(catalog("C_" + std::to_string(p)));
    BurnsidePoint trivial{0, p}, full{1, p};
    CHECK(dress_equal(lat, trivial, full));
    CHECK(dress_equal_via_subnormality(lat, trivial, full));
    CHECK(dress_equal(lat, {0, 0}, {0, 0}));
    CHECK_FALSE(dress_equal(lat, {0, 0}, {1, 0}));
  }
}

TEST_CASE("Dress equality in A(S_3)") {
  SubgroupLattice lat(catalog("S_3"));
  std::size_t c2 = lat.class_by_label("C_2");
  std::size_t c3 = lat.class_by_label("C_3");
  std::size_t s3 = lat.class_by_label("S_3");
  CHECK(dress_equal(lat, {c3, 2}, {s3, 2}));
  CHECK_FALSE(dress_equal(lat, {c2, 3}, {s3, 3}));
  CHECK(dress_equal_via_subnormality(lat, {c3, 2}, {s3, 2}));
  CHECK_FALSE(dress_equal_via_subnormality(lat, {c2, 3}, {s3, 3}));
}

TEST_CASE("mark-kernel oracle on S_3") {
  SubgroupLattice lat(catalog("S_3"));
  auto t = table_of_marks(lat);
  std::size_t one = lat.class_by_label("1");
  std::size_t c2 = lat.class_by_label("C_2");
  std::size_t c3 = lat.class_by_label("C_3");
  CHECK(mark_kernel_contained(t, one, c2, 2));
  CHECK_FALSE(mark_kernel_contained(t, c3, c2, 2));
  CHECK(mark_kernel_contained(t, c2, c2, 2));
  // Agreement with the subgroup-theoretic gluing, both directions.
  for (long p : {2L, 3L})
    for (std::size_t a = 0; a < lat.class_count(); ++a)
      for (std::size_t b = 0; b < lat.class_count(); ++b)
        CHECK(mark_kernel_contained(t, a, b, p) ==
              dress_equal(lat, {a, p}, {b, p}));
}

TEST_CASE("Spec of the Burnside ring of C_p") {
  SubgroupLattice lat(catalog("C_3"));
  auto spec = spec_burnside(lat, {3});
  CHECK(spec.space.size() == 3);
  CHECK(spec.space.covering_pairs().size() == 2);
  // The glued residue point collects both subgroup classes.
  PointIndex glued = spec.point(0, 3);
  CHECK(glued == spec.point(1, 3));
  CHECK(spec.members[glued].size() == 2);
}

TEST_CASE("Spec of the Burnside ring of S_3 over {2,3}") {
  SubgroupLattice lat(catalog("S_3"));
  auto spec = spec_burnside(lat, {2, 3});
  CHECK(spec.space.size() == 9);
  std::size_t char0 = 0, char2 = 0, char3 = 0;
  for (const auto& mem : spec.members) {
    long c = mem.front().characteristic;
    if (c == 0) ++char0;
    if (c == 2) ++char2;
    if (c == 3) ++char3;
  }
  CHECK(char0 == 4);
  CHECK(char2 == 2);
  CHECK(char3 == 3);
  // Every residue point is closed, every generic point has one residue
  // specialization per prime; 8 covering edges total.
  CHECK(spec.space.covering_pairs().size() == 8);
}

TEST_CASE("Spec of the Burnside ring of the trivial group") {
  SubgroupLattice lat(catalog("1"));
  auto spec = spec_burnside(lat, {2});
  CHECK(spec.space.size() == 2);
  CHECK(spec.space.covering_pairs().size() == 1);
}

TEST_CASE("a prime not dividing the order gives an unglued layer") {
  SubgroupLattice lat(catalog("S_3"));
  auto spec = spec_burnside(lat, {5});
  // No gluing at 5: one residue point per class, 4 + 4 points in total.
  CHECK(spec.space.size() == 8);
  for (const auto& mem : spec.members) CHECK(mem.size() == 1);
}

TEST_CASE("mark congruence modulo p") {
  for (const char* name : {"S_3", "A_4", "Q_8", "D_6"}) {
    SubgroupLattice lat(catalog(name));
    auto t = table_of_marks(lat);
    for (long p : primes_dividing(lat.group().order()))
      for (std::size_t h = 0; h < lat.class_count(); ++h) {
        std::size_t oph = lat.o_p_class(h, p);
        for (std::size_t k = 0; k < lat.class_count(); ++k)
          CHECK((t.m[h][k] - t.m[oph][k]) % p == 0);
      }
  }
}
