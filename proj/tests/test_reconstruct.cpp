#include <gtest/gtest.h>

#include "polytwo/catalog.hpp"
#include "polytwo/isomorphism.hpp"
#include "polytwo/reconstruct.hpp"

using namespace polytwo;

TEST(Reconstruct, CuboctahedronCosetCounts) {
  auto an = analyze(find_entry("cuboctahedron")->builder());
  auto rec = rebuild_order(an);
  EXPECT_EQ(rec.base_counts, (std::vector<std::size_t>{1, 12, 24, 8, 1}));
  EXPECT_EQ(rec.adjacent_counts, (std::vector<std::size_t>{0, 0, 0, 6, 0}));
  EXPECT_EQ(rec.poset.face_counts(), an.poset().face_counts());
  EXPECT_TRUE(is_isomorphic(rec.poset, an.poset()));
  EXPECT_TRUE(coset_count_check(an, rec).pass());
}

TEST(Reconstruct, ChiralTorusCosetCounts) {
  auto an = analyze(torus_44(2, 1));
  auto rec = rebuild_order(an);
  EXPECT_EQ(rec.base_counts, (std::vector<std::size_t>{1, 5, 10, 5, 1}));
  EXPECT_EQ(rec.adjacent_counts, (std::vector<std::size_t>{0, 0, 0, 0, 0}));
  EXPECT_TRUE(is_isomorphic(rec.poset, an.poset()));
}

TEST(Reconstruct, OracleMatchesOrderOnEveryPair) {
  for (const auto& e : catalog()) {
    auto an = analyze(e.builder());
    if (an.profile.orbit_count > 2) continue;
    auto d = make_order_data(an);
    auto c = oracle_agreement(an, d);
    EXPECT_TRUE(c.pass()) << e.name << ": " << c.detail;
    EXPECT_GT(c.instances, 0u) << e.name;
  }
}

TEST(Reconstruct, BaseFaceIsTheStabilizerCoset) {
  auto an = analyze(find_entry("cuboctahedron")->builder());
  auto d = make_order_data(an);
  for (int r = 0; r < 3; ++r) {
    auto cf = coset_face_of(an, d, an.graph.face(0, r));
    EXPECT_EQ(cf.family, CosetFamily::Base);
    EXPECT_TRUE(cf.rep.is_identity());
  }
  auto other = coset_face_of(an, d, an.graph.face(an.graph.adjacent(0, 2), 2));
  EXPECT_EQ(other.family, CosetFamily::Adjacent);
  EXPECT_EQ(other.rank, 2);
}

TEST(Reconstruct, RoundTripAcrossCatalog) {
  for (const auto& e : catalog()) {
    auto p = e.builder();
    auto an = analyze(p);
    if (an.profile.orbit_count > 2) {
      EXPECT_THROW(rebuild_order(an), PolytopeError) << e.name;
      continue;
    }
    EXPECT_TRUE(roundtrip_check(an)) << e.name;
    EXPECT_TRUE(order_suite(an).pass()) << e.name;
  }
}

TEST(Reconstruct, AdjacentFamilyOutsideSpecialRankIsUndefined) {
  auto an = analyze(find_entry("cuboctahedron")->builder());
  auto d = make_order_data(an);
  const auto id = Automorphism::identity(an.graph.size());
  CosetFace bad{0, CosetFamily::Adjacent, id};
  CosetFace edge{1, CosetFamily::Base, id};
  try {
    incidence_oracle(d, bad, edge);
    FAIL();
  } catch (const PolytopeError& e) {
    EXPECT_EQ(e.code(), ErrorCode::CaseUndefined);
  }
  EXPECT_THROW(d.stabilizer(-1, CosetFamily::Adjacent), PolytopeError);
  auto torus = analyze(torus_44(2, 1));
  auto dt = make_order_data(torus);
  EXPECT_FALSE(dt.special.has_value());
  EXPECT_THROW(dt.stabilizer(1, CosetFamily::Adjacent), PolytopeError);
}

TEST(Reconstruct, RegularPolytopesNeedOneFamily) {
  for (auto p : {make_cube(3), make_simplex(4), make_icosahedron(), make_polygon(7)}) {
    auto rec = rebuild_order(p);
    for (auto n : rec.adjacent_counts) EXPECT_EQ(n, 0u);
    EXPECT_TRUE(is_isomorphic(rec.poset, p));
  }
}
