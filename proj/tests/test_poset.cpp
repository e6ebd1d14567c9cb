#include <gtest/gtest.h>

#include "polytwo/catalog.hpp"
#include "polytwo/isomorphism.hpp"
#include "polytwo/poset.hpp"

using namespace polytwo;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const PolytopeError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no PolytopeError thrown";
  return ErrorCode::MalformedInput;
}

RankedPoset two_triangles() {
  std::vector<ProperFace> f;
  for (int t = 0; t < 2; ++t)
    for (int k = 0; k < 3; ++k) {
      const std::string v = "v" + std::to_string(t) + std::to_string(k);
      const std::string w = "v" + std::to_string(t) + std::to_string((k + 1) % 3);
      f.push_back({v, 0, {}});
      f.push_back({"e" + std::to_string(t) + std::to_string(k), 1, {v, w}});
    }
  return make_polytope(2, f);
}

}  // namespace

TEST(Poset, CubeFaceCounts) {
  auto c = make_cube(3);
  EXPECT_EQ(c.face_counts(), (std::vector<std::size_t>{1, 8, 12, 6, 1}));
  EXPECT_EQ(c.rank_of(c.bottom()), -1);
  EXPECT_EQ(c.rank_of(c.top()), 3);
}

TEST(Poset, LeqIsTransitiveClosure) {
  auto c = make_cube(3);
  const int v = c.index_of("c000");
  const int e = c.index_of("c00x");
  const int f = c.index_of("c0xx");
  EXPECT_TRUE(c.leq(v, e));
  EXPECT_TRUE(c.leq(e, f));
  EXPECT_TRUE(c.leq(v, f));
  EXPECT_FALSE(c.leq(f, v));
  EXPECT_FALSE(c.leq(c.index_of("c111"), f));
  EXPECT_TRUE(c.comparable(f, v));
}

TEST(Poset, ConstructionErrors) {
  EXPECT_EQ(code_of([] { make_polytope(2, {{"a", 0, {}}, {"a", 0, {}}}); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { make_polytope(2, {{"a", 0, {}}, {"e", 1, {"zz"}}}); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { make_polytope(2, {{"BOT", 0, {}}}); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { make_cube(3).index_of("nope"); }), ErrorCode::UnknownFaceId);
  EXPECT_EQ(code_of([] { make_cube(3).faces_of_rank(7); }), ErrorCode::BadRank);
}

TEST(Poset, ValidatorAcceptsCatalog) {
  for (const auto& e : catalog()) {
    auto rep = validate_polytope(e.builder());
    EXPECT_TRUE(rep.ok()) << e.name;
  }
}

TEST(Poset, ValidatorRejectsDisconnectedUnion) {
  auto rep = validate_polytope(two_triangles());
  EXPECT_TRUE(rep.p1.pass);
  EXPECT_TRUE(rep.p3.pass);
  EXPECT_FALSE(rep.p4.pass);
  EXPECT_FALSE(rep.ok());
}

TEST(Poset, ValidatorRejectsBrokenDiamond) {
  // a triangle with an extra edge on two of its vertices: three edges meet v0 and v1
  std::vector<ProperFace> f{{"v0", 0, {}}, {"v1", 0, {}}, {"v2", 0, {}},
                            {"a", 1, {"v0", "v1"}}, {"b", 1, {"v1", "v2"}}, {"c", 1, {"v2", "v0"}}, {"d", 1, {"v0", "v1"}}};
  auto rep = validate_polytope(make_polytope(2, f));
  EXPECT_FALSE(rep.p3.pass);
}

TEST(Poset, ValidatorRejectsShortChain) {
  // an edge with no vertex below it: its chain to the bottom is too short
  std::vector<Face> faces{{"BOT", -1}, {"TOP", 2}, {"v0", 0}, {"v1", 0}, {"e0", 1}, {"e1", 1}};
  std::vector<RankedPoset::Cover> covers{{"v0", "BOT"}, {"v1", "BOT"}, {"e0", "v0"}, {"e0", "v1"}, {"TOP", "e0"}, {"TOP", "e1"}};
  auto rep = validate_polytope(RankedPoset(2, faces, covers));
  EXPECT_FALSE(rep.ok());
}

TEST(Poset, SectionOfCubeIsSquareAndVertexFigureIsTriangle) {
  auto c = make_cube(3);
  auto sq = section(c, c.index_of("BOT"), c.index_of("c0xx"));
  EXPECT_EQ(sq.rank(), 2);
  EXPECT_EQ(sq.face_counts(), (std::vector<std::size_t>{1, 4, 4, 1}));
  auto vf = section(c, c.index_of("c000"), c.index_of("TOP"));
  EXPECT_TRUE(is_isomorphic(vf, make_polygon(3)));
  EXPECT_THROW(section(c, c.index_of("c111"), c.index_of("c0xx")), PolytopeError);
}

TEST(Poset, SectionsOfValidPolytopesAreValid) {
  for (const char* name : {"cube", "cuboctahedron", "hemicube", "torus44_2_1", "rhombic_dodecahedron"}) {
    auto p = find_entry(name)->builder();
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (a == b || !p.leq(static_cast<int>(a), static_cast<int>(b))) continue;
        EXPECT_TRUE(validate_polytope(section(p, static_cast<int>(a), static_cast<int>(b))).ok()) << name;
      }
  }
}

TEST(Poset, DualIsAnInvolution) {
  for (const auto& e : catalog()) {
    auto p = e.builder();
    auto d = dual(p);
    auto fc = p.face_counts();
    std::reverse(fc.begin(), fc.end());
    EXPECT_EQ(d.face_counts(), fc) << e.name;
    EXPECT_TRUE(is_isomorphic(dual(d), p)) << e.name;
  }
}

TEST(Poset, LowRanks) {
  auto point = make_polytope(0, {});
  EXPECT_EQ(point.face_counts(), (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(validate_polytope(point).ok());
  auto segment = make_polytope(1, {{"a", 0, {}}, {"b", 0, {}}});
  EXPECT_TRUE(validate_polytope(segment).ok());
}
