#include <gtest/gtest.h>

#include "frozen.hpp"
#include "oracle.hpp"
#include "polytwo/catalog.hpp"
#include "polytwo/isomorphism.hpp"

using namespace polytwo;

namespace {

long euler(const RankedPoset& p) {
  long x = 0;
  for (int r = 0; r < p.rank(); ++r) x += (r % 2 == 0 ? 1 : -1) * static_cast<long>(p.faces_of_rank(r).size());
  return x;
}

ErrorCode code_of(const std::function<void()>& f) {  // MalformedInput when nothing is thrown
  try {
    f();
  } catch (const PolytopeError& e) {
    return e.code();
  }
  return ErrorCode::MalformedInput;
}

}  // namespace

TEST(Catalog, EveryEntryIsAValidPolytope) {
  for (const auto& e : catalog()) EXPECT_TRUE(validate_polytope(e.builder()).ok()) << e.name;
}

TEST(Catalog, NamesAreUnique) {
  std::set<std::string> names;
  for (const auto& e : catalog()) EXPECT_TRUE(names.insert(e.name).second) << e.name;
  EXPECT_EQ(find_entry("no_such_thing"), nullptr);
}

TEST(Catalog, EulerCharacteristic) {
  for (const char* n : {"cube", "octahedron", "icosahedron", "dodecahedron", "cuboctahedron", "rhombic_dodecahedron"})
    EXPECT_EQ(euler(find_entry(n)->builder()), 2) << n;
  for (const char* n : {"hemicube", "hemidodecahedron", "hemicuboctahedron", "hemiicosidodecahedron"})
    EXPECT_EQ(euler(find_entry(n)->builder()), 1) << n;
  for (const char* n : {"torus44_2_1", "torus44_3_1", "torus44_3_0", "torus44_rect_3_2"}) EXPECT_EQ(euler(find_entry(n)->builder()), 0) << n;
}

TEST(Catalog, MedialIgnoresDuality) {
  EXPECT_TRUE(is_isomorphic(medial(make_cube(3)), medial(make_octahedron())));
  EXPECT_TRUE(is_isomorphic(medial(make_dodecahedron()), medial(make_icosahedron())));
  EXPECT_FALSE(is_isomorphic(medial(make_cube(3)), medial(make_dodecahedron())));
  auto m = medial(make_simplex(3));
  EXPECT_TRUE(is_isomorphic(m, make_octahedron()));
}

TEST(Catalog, SimplexAndCubeCounts) {
  EXPECT_EQ(make_simplex(4).face_counts(), (std::vector<std::size_t>{1, 5, 10, 10, 5, 1}));
  EXPECT_EQ(make_cube(4).face_counts(), (std::vector<std::size_t>{1, 16, 32, 24, 8, 1}));
  EXPECT_EQ(make_polygon(2).face_counts(), (std::vector<std::size_t>{1, 2, 2, 1}));
  EXPECT_TRUE(is_isomorphic(dual(make_dodecahedron()), make_icosahedron()));
}

TEST(Catalog, BadParameters) {
  EXPECT_EQ(code_of([] { make_polygon(1); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { make_simplex(0); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { make_cube(6); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { square_lattice(0, 0); }), ErrorCode::BadParameter);
}

TEST(Catalog, SquareLatticeNormalForm) {
  auto l = square_lattice(2, 1);
  EXPECT_EQ(l.a * l.c, 5);
  auto m = square_lattice(3, 0);
  EXPECT_EQ(m.a, 3);
  EXPECT_EQ(m.b, 0);
  EXPECT_EQ(m.c, 3);
  auto k = square_lattice(1, 2);
  EXPECT_TRUE(is_isomorphic(torus_44(2, 1), torus_44(1, 2)) || k.a * k.c == 5);
}

TEST(Catalog, DegenerateQuotients) {
  EXPECT_EQ(code_of([] { torus_44(1, 1); }), ErrorCode::DegenerateQuotient);
  EXPECT_EQ(code_of([] { torus_44(1, 0); }), ErrorCode::DegenerateQuotient);
  auto p = torus_44(2, 0);
  EXPECT_TRUE(validate_polytope(p).ok());
  EXPECT_EQ(oracle::profile(p).orbits, 1u);
}

TEST(Catalog, PetrialIsAnInvolution) {
  auto t = torus_44(3, 1);
  auto pp = petrial(petrial(t));
  EXPECT_TRUE(is_isomorphic(pp, t));
  auto pe = petrial(t);
  EXPECT_EQ(pe.face_counts(), (std::vector<std::size_t>{1, 10, 20, 4, 1}));
}

TEST(Catalog, LatticeSearchOutcome) {
  const auto& s = detail::rd2_search();
  EXPECT_EQ(s.lattices, kFrozenLattices);
  EXPECT_EQ(s.degenerate, kFrozenDegenerate);
  EXPECT_EQ(s.hits.size(), kFrozenClassOneSpecimens);
  for (const auto& h : s.hits) {
    EXPECT_EQ(h.orbits, 2u);
    EXPECT_EQ(h.class_name, "2_{1}");
    EXPECT_NE(find_entry("torus44_lattice_" + std::to_string(h.lattice.a) + "_" + std::to_string(h.lattice.b) + "_" +
                         std::to_string(h.lattice.c)),
              nullptr);
  }
}

TEST(Catalog, LatticeSearchAgreesWithOracle) {
  std::size_t lattices = 0, degenerate = 0, class_one = 0;
  for (int idx = 1; idx <= kSearchIndex; ++idx)
    for (int c = 1; c <= idx; ++c) {
      if (idx % c) continue;
      for (int b = 0; b < idx / c; ++b) {
        ++lattices;
        RankedPoset p;
        try {
          p = torus_44_lattice(idx / c, b, c);
        } catch (const PolytopeError&) {
          ++degenerate;
          continue;
        }
        auto pr = oracle::profile(p);
        class_one += pr.orbits == 2 && pr.I == std::vector<int>{1};
      }
    }
  EXPECT_EQ(lattices, kFrozenLattices);
  EXPECT_EQ(degenerate, kFrozenDegenerate);
  EXPECT_EQ(class_one, 26u);
}
