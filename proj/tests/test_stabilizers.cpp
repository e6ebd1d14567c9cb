#include <gtest/gtest.h>

#include "oracle.hpp"
#include "polytwo/catalog.hpp"
#include "polytwo/stabilizers.hpp"
#include "polytwo/suites.hpp"

using namespace polytwo;

namespace {

const Analysis& cubo() {
  static const Analysis an = analyze(find_entry("cuboctahedron")->builder());
  return an;
}

}  // namespace

TEST(Stabilizers, CuboctahedronOrders) {
  const auto& an = cubo();
  auto gs = distinguished_generators(an);
  auto fam = build_family(gs, an.group);
  auto primed = build_family(rebase(gs, an, 2), an.group, 2);
  EXPECT_EQ(fam.at(RankSet{0}).order(), 4u);
  EXPECT_EQ(fam.at(RankSet{1}).order(), 2u);
  EXPECT_EQ(fam.at(RankSet{2}).order(), 6u);
  EXPECT_EQ(primed.at(RankSet{2}).order(), 8u);
  EXPECT_EQ(fam.at(RankSet{}).order(), 48u);
  EXPECT_EQ(fam.at(RankSet{0, 1, 2}).order(), 1u);
  EXPECT_EQ(fam.upper(RankSet{0, 1}).elements(), fam.at(RankSet{2}).elements());
  EXPECT_EQ(primed.name(), "Gamma'");
}

TEST(Stabilizers, OrdersMatchOracleChainStabilizers) {
  for (const auto& e : catalog()) {
    auto p = e.builder();
    auto an = analyze(p);
    if (an.profile.orbit_count > 2 || p.rank() > 3) continue;
    auto fam = build_family(distinguished_generators(an), an.group);
    for (std::uint32_t mask = 0; mask < (1u << p.rank()); ++mask) {
      RankSet J = RankSet::from_mask(mask);
      std::vector<int> chain;
      for (int j : J.to_vector()) chain.push_back(an.graph.face(0, j));
      EXPECT_EQ(fam.at(J).order(), oracle::stabilizer_order(p, chain)) << e.name << " " << J.to_string();
    }
  }
}

TEST(Stabilizers, FamiliesAreChainStabilizers) {
  for (const auto& e : catalog()) {
    auto an = analyze(e.builder());
    if (an.profile.orbit_count > 2) continue;
    auto gs = distinguished_generators(an);
    auto fam = build_family(gs, an.group);
    EXPECT_TRUE(verify_stabilizers(fam, an.graph, an.group).pass()) << e.name;
    EXPECT_TRUE(verify_intersection_property(fam).pass()) << e.name;
    EXPECT_TRUE(verify_section_transitivity(fam, an).pass()) << e.name;
    for (int j0 : an.deficient_set().to_vector()) {
      auto pf = build_family(rebase(gs, an, j0), an.group, j0);
      EXPECT_TRUE(verify_stabilizers(pf, an.graph, an.group).pass()) << e.name << " at " << j0;
      EXPECT_TRUE(verify_intersection_property(pf).pass()) << e.name << " at " << j0;
      EXPECT_TRUE(verify_intertwine(fam, pf, j0).pass()) << e.name << " at " << j0;
    }
  }
}

TEST(Stabilizers, GammaLOnChiralTorus) {
  auto an = analyze(torus_44(2, 1));
  auto gs = distinguished_generators(an);
  auto fam = build_family(gs, an.group);
  auto d = gamma_l_decomposition(gs, fam, an.group, 1);
  EXPECT_EQ(d.index, 2u);
  EXPECT_EQ(d.pm_generators, (std::vector<std::pair<int, int>>{{0, 2}}));
  EXPECT_TRUE(d.checks.pass());
  auto d0 = gamma_l_decomposition(gs, fam, an.group, 0);
  EXPECT_EQ(d0.index, 1u);
  EXPECT_TRUE(d0.checks.pass());
}

TEST(Stabilizers, GammaLWithoutStraddlingRanks) {
  const auto& an = cubo();
  auto gs = distinguished_generators(an);
  auto fam = build_family(gs, an.group);
  auto d = gamma_l_decomposition(gs, fam, an.group, 1);
  EXPECT_TRUE(d.pm_generators.empty());
  EXPECT_EQ(d.index, 1u);
  bool some_not_applicable = false;
  for (const auto& c : d.checks.checks) some_not_applicable = some_not_applicable || c.verdict == Verdict::NotApplicable;
  EXPECT_TRUE(some_not_applicable);
}

TEST(Stabilizers, DeficiencyIdentities) {
  struct Case {
    const char* name;
    bool expect_checked;
  };
  for (auto [name, checked] : {Case{"cuboctahedron", true}, Case{"rhombic_dodecahedron", true}, Case{"torus44_lattice_6_2_1", false},
                               Case{"icosidodecahedron", true}}) {
    const auto* e = find_entry(name);
    if (!e) continue;
    auto an = analyze(e->builder());
    if (an.profile.orbit_count > 2) continue;
    auto rep = deficiency_suite(an);
    EXPECT_TRUE(rep.pass()) << name;
    bool any = false;
    for (const auto& c : rep.checks) any = any || (c.verdict == Verdict::Pass && c.instances > 0);
    EXPECT_EQ(any, checked) << name;
  }
  bool rd2_checked = false;
  for (const auto& e : catalog()) {
    auto an = analyze(e.builder());
    if (!an.profile.two_orbit() || an.deficient_set().size() != 2) continue;
    auto rep = deficiency_suite(an);
    EXPECT_TRUE(rep.pass()) << e.name;
    for (const auto& c : rep.checks) rd2_checked = rd2_checked || (c.verdict == Verdict::Pass && c.instances > 0);
  }
  EXPECT_TRUE(rd2_checked);
}

TEST(Stabilizers, SuitesPassOnCatalog) {
  for (const auto& e : catalog()) {
    auto an = analyze(e.builder());
    if (an.profile.orbit_count > 2) continue;
    for (const auto& rep : {stabilizers_suite(an), intersections_suite(an)})
      for (const auto& c : rep.checks) EXPECT_TRUE(c.pass()) << e.name << " " << c.name << ": " << c.detail;
  }
}
