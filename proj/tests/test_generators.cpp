#include <gtest/gtest.h>

#include <random>

#include "polytwo/catalog.hpp"
#include "polytwo/generators.hpp"
#include "polytwo/suites.hpp"

using namespace polytwo;

namespace {

const Analysis& cubo() {
  static const Analysis an = analyze(find_entry("cuboctahedron")->builder());
  return an;
}

const Analysis& chiral_torus() {
  static const Analysis an = analyze(torus_44(2, 1));
  return an;
}

}  // namespace

TEST(Generators, EachGeneratorHitsItsWord) {
  for (const auto* an : {&cubo(), &chiral_torus()}) {
    auto gs = distinguished_generators(*an);
    EXPECT_TRUE(defining_actions(gs, an->graph).pass());
    for (const auto& [i, a] : gs.rho) EXPECT_EQ(a(0), an->graph.adjacent(0, i));
  }
}

TEST(Generators, CuboctahedronSystem) {
  auto gs = distinguished_generators(cubo());
  EXPECT_EQ(gs.I, (RankSet{0, 1}));
  EXPECT_EQ(gs.rho.size(), 2u);
  // the word 2,0,2 reaches the same flag as 0
  EXPECT_EQ(gs.a(2, 0, 2), gs.r(0));
  EXPECT_EQ(gs.a(2, 2), Automorphism::identity(cubo().graph.size()));
  EXPECT_THROW(gs.r(2), PolytopeError);
  EXPECT_THROW(gs.a(2, 0, 1), PolytopeError);
}

TEST(Generators, ChiralTorusHasNoReflections) {
  auto gs = distinguished_generators(chiral_torus());
  EXPECT_TRUE(gs.rho.empty());
  EXPECT_TRUE(gs.alpha3.empty());
  EXPECT_EQ(gs.alpha2.size(), 9u);
  EXPECT_EQ(gs.a(0, 1) * gs.a(1, 0), Automorphism::identity(chiral_torus().graph.size()));
}

TEST(Generators, GenerateTheWholeGroup) {
  EXPECT_TRUE(verify_generation(distinguished_generators(cubo()), cubo().group));
  EXPECT_EQ(generate_subgroup(cubo().group, distinguished_generators(cubo()).all()).order(), 48u);
  EXPECT_EQ(generate_subgroup(chiral_torus().group, distinguished_generators(chiral_torus()).all()).order(), 20u);
  for (const auto& e : catalog()) {
    auto an = analyze(e.builder());
    if (an.profile.orbit_count > 2) continue;
    EXPECT_TRUE(verify_generation(distinguished_generators(an), an.group)) << e.name;
  }
}

TEST(Generators, Factorization) {
  const auto& an = cubo();
  auto gs = distinguished_generators(an);
  const auto id = Automorphism::identity(an.graph.size());
  auto t0 = factorize(gs, an.graph, id);
  EXPECT_TRUE(t0.word.empty());
  EXPECT_TRUE(t0.factors.empty());
  auto t1 = factorize(gs, an.graph, gs.r(0));
  EXPECT_EQ(t1.word, (std::vector<int>{0}));
  EXPECT_EQ(t1.product(an.graph.size()), gs.r(0));
  for (const auto& psi : an.group.elements()) {
    auto tr = factorize(gs, an.graph, psi);
    EXPECT_EQ(tr.product(an.graph.size()), psi);
    EXPECT_EQ(tr.split_points.size() % 2, 0u);
    EXPECT_EQ(an.graph.apply_word(0, tr.word), psi(0));
  }
}

TEST(Generators, FactorizationOnChiralTorus) {
  const auto& an = chiral_torus();
  auto gs = distinguished_generators(an);
  for (const auto& psi : an.group.elements()) EXPECT_EQ(factorize(gs, an.graph, psi).product(an.graph.size()), psi);
}

TEST(Generators, Bookkeeping) {
  std::mt19937_64 rng(7);
  for (const auto* an : {&cubo(), &chiral_torus()})
    EXPECT_TRUE(bookkeeping_check(distinguished_generators(*an), an->graph, an->group, rng).pass());
}

TEST(Generators, RelationsHoldAcrossTheCatalog) {
  std::map<std::string, std::size_t> seen;
  for (const auto& e : catalog()) {
    auto an = analyze(e.builder());
    if (an.profile.orbit_count > 2) continue;
    auto rep = verify_relations(distinguished_generators(an), *an.profile.symbol, an.group);
    for (const auto& r : rep.entries) {
      EXPECT_TRUE(r.pass) << e.name << " " << r.relation << " expected " << r.expected << " observed " << r.observed;
      ++seen[r.family];
    }
  }
  for (const char* fam : {"string", "a", "b", "c", "d", "e", "f"}) EXPECT_GT(seen[fam], 0u) << fam;
}

TEST(Generators, DihedralPairOrder) {
  const auto& an = cubo();
  auto gs = distinguished_generators(an);
  EXPECT_EQ(generate_subgroup(an.group, {gs.r(1), gs.a(2, 1, 2)}).order(), 4u);
}

TEST(Generators, Rebase) {
  const auto& an = chiral_torus();
  auto gs = distinguished_generators(an);
  auto moved = rebase(gs, an, 0);
  EXPECT_EQ(moved.base_flag, an.graph.adjacent(0, 0));
  EXPECT_EQ(moved.a(1, 2), gs.a(2, 0) * gs.a(0, 1));
  EXPECT_EQ(moved.a(1, 2)(moved.base_flag), an.graph.apply_word(moved.base_flag, {1, 2}));
  EXPECT_EQ(rebase(moved, an, 0).labelled(), gs.labelled());
  EXPECT_THROW(rebase(distinguished_generators(cubo()), cubo(), 0), PolytopeError);
}

TEST(Generators, RelationsSuiteIsSeeded) {
  auto a = relations_suite(cubo());
  auto b = relations_suite(cubo());
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t k = 0; k < a.checks.size(); ++k) {
    EXPECT_EQ(a.checks[k].instances, b.checks[k].instances);
    EXPECT_TRUE(a.checks[k].pass()) << a.checks[k].name;
  }
  EXPECT_EQ(a.find("factorization")->instances, kFactorSamples);
}
