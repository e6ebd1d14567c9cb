#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polytwo/check.hpp"
#include "polytwo/error.hpp"
#include "polytwo/flag_graph.hpp"
#include "polytwo/group.hpp"
#include "polytwo/poset.hpp"
#include "polytwo/rank_set.hpp"

namespace polytwo {

struct DoubleSchlafli {
  std::vector<int> top;
  std::vector<int> bottom;

  bool equivelar() const { return top == bottom; }

  /// Class invariant form: lexicographically smaller row on top.
  DoubleSchlafli normalized() const {
    if (bottom < top) return {bottom, top};
    return *this;
  }

  static std::string row_string(const std::vector<int>& row) {
    std::string out = "(";
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(row[i]);
    }
    return out + ")";
  }
  std::string to_string() const { return row_string(top) + "/" + row_string(bottom); }

  friend bool operator==(const DoubleSchlafli&, const DoubleSchlafli&) = default;
};

struct ClassProfile {
  int rank = -1;
  std::size_t flag_count = 0;
  std::size_t group_order = 0;
  std::size_t orbit_count = 0;
  std::optional<RankSet> class_type_set;
  std::optional<int> reflection_deficiency;
  bool chiral = false;
  std::optional<DoubleSchlafli> symbol;

  bool regular() const { return orbit_count == 1; }
  bool two_orbit() const { return orbit_count == 2; }

  /// "regular", "2_{0,1}", or "orbits:<k>".
  std::string class_name() const {
    if (orbit_count == 1) return "regular";
    if (orbit_count == 2 && class_type_set) return "2_" + class_type_set->to_string();
    return "orbits:" + std::to_string(orbit_count);
  }

  void require_two_or_fewer() const {
    if (orbit_count > 2)
      throw PolytopeError(ErrorCode::TooManyOrbits, "polytope has " + std::to_string(orbit_count) + " flag orbits");
  }
};

/// Everything the later modules derive from a polytope: flags, group, orbits, class.
struct Analysis {
  FlagGraph graph;
  Group group;
  OrbitPartition flag_orbit;
  ClassProfile profile;

  const RankedPoset& poset() const { return graph.poset(); }
  int rank() const { return graph.rank(); }
  RankSet class_set() const { return profile.class_type_set.value_or(RankSet{}); }
  RankSet deficient_set() const { return class_set().complement(rank()); }
  bool same_orbit(FlagIndex a, FlagIndex b) const { return flag_orbit.same(a, b); }

  /// Least flag outside the base orbit (the base flag itself when regular).
  FlagIndex other_orbit_flag() const {
    for (std::size_t f = 0; f < graph.size(); ++f)
      if (!flag_orbit.same(0, f)) return static_cast<FlagIndex>(f);
    return 0;
  }
};

namespace detail {

/// Number of i-faces in the 2-section F_{i+1}/F_{i-2} of flag f.
inline int two_section_size(const FlagGraph& g, FlagIndex f, int i) {
  const RankedPoset& p = g.poset();
  const int lo = g.face(f, i - 2);
  const int hi = g.face(f, i + 1);
  int count = 0;
  for (int h : p.faces_of_rank(i))
    if (p.leq(lo, h) && p.leq(h, hi)) ++count;
  return count;
}

inline std::vector<int> schlafli_row(const FlagGraph& g, FlagIndex f) {
  std::vector<int> row;
  for (int i = 1; i < g.rank(); ++i) row.push_back(two_section_size(g, f, i));
  return row;
}

inline std::string validation_summary(const ValidationReport& rep) {
  std::string out;
  auto add = [&](const char* name, const AxiomResult& a) {
    if (a.pass) return;
    if (!out.empty()) out += "; ";
    out += name;
    out += " fails";
    if (!a.failures.empty()) out += " (" + a.failures.front() + ")";
  };
  add("P1", rep.p1);
  add("P2", rep.p2);
  add("P3", rep.p3);
  add("P4", rep.p4);
  return out;
}

}  // namespace detail

inline Analysis analyze(const RankedPoset& p, bool validate = true) {
  if (validate) {
    auto rep = validate_polytope(p);
    if (!rep.ok()) throw PolytopeError(ErrorCode::MalformedInput, "not a polytope: " + detail::validation_summary(rep));
  }
  Analysis an;
  an.graph = FlagGraph(p);
  an.group = automorphism_group(an.graph);
  an.flag_orbit = flag_orbits(an.group);
  ClassProfile& prof = an.profile;
  prof.rank = p.rank();
  prof.flag_count = an.graph.size();
  prof.group_order = an.group.order();
  prof.orbit_count = an.flag_orbit.count();
  if (prof.orbit_count <= 2) {
    RankSet I;
    for (int i = 0; i < p.rank(); ++i)
      if (an.flag_orbit.same(0, an.graph.adjacent(0, i))) I.insert(i);
    prof.class_type_set = I;
    prof.reflection_deficiency = I.complement(p.rank()).size();
    prof.chiral = prof.orbit_count == 2 && I.empty();
    prof.symbol = DoubleSchlafli{detail::schlafli_row(an.graph, 0), detail::schlafli_row(an.graph, an.other_orbit_flag())};
  }
  return an;
}

inline ClassProfile classify(const RankedPoset& p) { return analyze(p).profile; }

inline DoubleSchlafli double_schlafli(const Analysis& an) {
  an.profile.require_two_or_fewer();
  return *an.profile.symbol;
}
inline DoubleSchlafli double_schlafli(const RankedPoset& p) { return double_schlafli(analyze(p)); }

namespace detail {

inline void require_two_orbit(const Analysis& an) {
  if (!an.profile.two_orbit())
    throw PolytopeError(ErrorCode::NotTwoOrbit, "expected two flag orbits, found " + std::to_string(an.profile.orbit_count));
}

inline std::string rank_pair(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace detail

struct FaceTransitivityReport {
  std::vector<std::size_t> orbit_counts;  // ranks 0..n-1
  std::vector<std::size_t> expected;
  bool representatives_split = true;  // rd = 1: Psi_j and (Psi^j)_j in different orbits for every flag
  bool pass = true;
};

inline FaceTransitivityReport face_transitivity_report(const Analysis& an) {
  detail::require_two_orbit(an);
  FaceTransitivityReport rep;
  const int n = an.rank();
  const RankSet bar = an.deficient_set();
  for (int i = 0; i < n; ++i) {
    rep.orbit_counts.push_back(face_orbits(an.group, an.graph, i).count());
    rep.expected.push_back(bar.size() == 1 && bar.contains(i) ? 2 : 1);
  }
  if (bar.size() == 1) {
    const int j = bar.to_vector().front();
    auto orb = face_orbits(an.group, an.graph, j);
    const auto& faces = an.poset().faces_of_rank(j);
    auto pos = [&](int face) {
      return static_cast<std::size_t>(std::find(faces.begin(), faces.end(), face) - faces.begin());
    };
    for (std::size_t f = 0; f < an.graph.size(); ++f) {
      auto flag = static_cast<FlagIndex>(f);
      if (orb.same(pos(an.graph.face(flag, j)), pos(an.graph.face(an.graph.adjacent(flag, j), j))))
        rep.representatives_split = false;
    }
  }
  rep.pass = rep.orbit_counts == rep.expected && rep.representatives_split;
  return rep;
}

struct SectionOrbitReport {
  int i = 0;
  int j = 0;
  std::size_t orbit_count = 0;
  std::size_t expected = 0;
  bool representatives_split = true;
  bool pass = true;
};

inline SectionOrbitReport section_orbit_report(const Analysis& an, int i, int j) {
  detail::require_two_orbit(an);
  SectionOrbitReport rep;
  rep.i = i;
  rep.j = j;
  auto orb = section_orbits(an.group, an.graph, i, j);
  rep.orbit_count = orb.count();
  const RankSet bar = an.deficient_set();
  RankSet ij;
  if (i >= 0 && i < an.rank()) ij.insert(i);
  if (j >= 0 && j < an.rank()) ij.insert(j);
  const bool split = bar.subset_of(ij);
  rep.expected = split ? 2 : 1;
  if (split) {
    auto pairs = incident_pairs(an.poset(), i, j);
    auto pos = [&](int a, int b) {
      return static_cast<std::size_t>(std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
    };
    const int k = bar.to_vector().front();
    const FlagIndex phi = 0;
    const FlagIndex phik = an.graph.adjacent(phi, k);
    rep.representatives_split =
        !orb.same(pos(an.graph.face(phi, i), an.graph.face(phi, j)), pos(an.graph.face(phik, i), an.graph.face(phik, j)));
  }
  rep.pass = rep.orbit_count == rep.expected && rep.representatives_split;
  return rep;
}

/// Every section G/F must be regular or two-orbit of class (I cap {r+1..s-1}) - (r+1),
/// and regular when {r+1..s-1} lies inside I.
inline Check section_class_check(const Analysis& an) {
  an.profile.require_two_or_fewer();
  Check c("section classes");
  const RankedPoset& p = an.poset();
  const RankSet I = an.class_set();
  const int n = p.rank();
  for (int r = -1; r <= n; ++r)
    for (int s = r; s <= n; ++s) {
      RankSet inner = RankSet::interval(r + 1, s - 1);
      RankSet expect;
      for (int x : (I & inner).to_vector()) expect.insert(x - (r + 1));
      const bool forced_regular = inner.subset_of(I);
      for (auto [lo, hi] : incident_pairs(p, r, s)) {
        auto sub = analyze(section(p, lo, hi), false).profile;
        bool ok = sub.orbit_count == 1 ||
                  (!forced_regular && sub.orbit_count == 2 && sub.class_type_set && *sub.class_type_set == expect);
        c.record(ok, "section " + p.id(hi) + "/" + p.id(lo) + " is " + sub.class_name() + ", expected regular or 2_" +
                         expect.to_string());
      }
    }
  return c;
}

/// True iff all flags through the chain lie in one flag orbit.
inline bool chain_orbit_check(const Analysis& an, const std::vector<int>& chain) {
  const RankedPoset& p = an.poset();
  for (std::size_t a = 0; a < chain.size(); ++a)
    for (std::size_t b = a + 1; b < chain.size(); ++b)
      if (!p.comparable(chain[a], chain[b]))
        throw PolytopeError(ErrorCode::NotAChain, p.id(chain[a]) + " and " + p.id(chain[b]) + " are incomparable");
  std::optional<std::size_t> orbit;
  for (std::size_t f = 0; f < an.graph.size(); ++f) {
    auto flag = static_cast<FlagIndex>(f);
    bool through = std::all_of(chain.begin(), chain.end(), [&](int face) { return an.graph.contains_face(flag, face); });
    if (!through) continue;
    std::size_t o = an.flag_orbit.orbit_of[f];
    if (orbit && *orbit != o) return false;
    orbit = o;
  }
  return true;
}

/// Chains Phi_K with K containing the deficient ranks, for every flag Phi.
inline Check chain_orbit_property(const Analysis& an) {
  an.profile.require_two_or_fewer();
  Check c("chain orbits");
  const int n = an.rank();
  const RankSet bar = an.deficient_set();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    RankSet K = RankSet::from_mask(mask);
    if (!bar.subset_of(K)) continue;
    for (std::size_t f = 0; f < an.graph.size(); ++f) {
      std::vector<int> chain;
      for (int k : K.to_vector()) chain.push_back(an.graph.face(static_cast<FlagIndex>(f), k));
      c.record(chain_orbit_check(an, chain), "flag " + std::to_string(f) + " chain over ranks " + K.to_string());
    }
  }
  return c;
}

/// "Phi and Phi^i in one orbit" does not depend on Phi.
inline Check class_well_definedness(const Analysis& an) {
  an.profile.require_two_or_fewer();
  Check c("class well-definedness");
  const RankSet I = an.class_set();
  for (std::size_t f = 0; f < an.graph.size(); ++f)
    for (int i = 0; i < an.rank(); ++i) {
      bool same = an.same_orbit(static_cast<FlagIndex>(f), an.graph.adjacent(static_cast<FlagIndex>(f), i));
      c.record(same == I.contains(i), "flag " + std::to_string(f) + " rank " + std::to_string(i));
    }
  return c;
}

inline Check parity_check(const Analysis& an) {
  an.profile.require_two_or_fewer();
  Check c("parity");
  const RankSet I = an.class_set();
  const auto& sym = *an.profile.symbol;
  for (int l = 1; l < an.rank(); ++l) {
    if (I.contains(l - 1) == I.contains(l)) continue;
    const int p = sym.top[static_cast<std::size_t>(l - 1)];
    const int q = sym.bottom[static_cast<std::size_t>(l - 1)];
    c.record(p % 2 == 0 && q % 2 == 0, "p_" + std::to_string(l) + "=" + std::to_string(p) + ", q_" + std::to_string(l) + "=" + std::to_string(q));
  }
  return c;
}

/// Equal symbol rows iff all 2-sections at each level have the same size.
inline Check equivelar_check(const Analysis& an) {
  an.profile.require_two_or_fewer();
  Check c("equivelar rows");
  bool equivelar = true;
  for (int l = 1; l < an.rank(); ++l) {
    std::set<int> sizes;
    for (std::size_t f = 0; f < an.graph.size(); ++f) sizes.insert(detail::two_section_size(an.graph, static_cast<FlagIndex>(f), l));
    if (sizes.size() != 1) equivelar = false;
  }
  c.record(equivelar == an.profile.symbol->equivelar(),
           std::string("direct enumeration says ") + (equivelar ? "equivelar" : "not equivelar") + ", symbol " +
               an.profile.symbol->to_string());
  return c;
}

/// The classifier theorems, bundled. Two-orbit-only statements are marked
/// not applicable on regular inputs.
inline SuiteReport classifier_suite(const Analysis& an) {
  an.profile.require_two_or_fewer();
  SuiteReport rep("sections");
  const int n = an.rank();
  if (an.profile.two_orbit()) {
    auto ft = face_transitivity_report(an);
    Check c("face transitivity");
    for (int i = 0; i < n; ++i)
      c.record(ft.orbit_counts[static_cast<std::size_t>(i)] == ft.expected[static_cast<std::size_t>(i)],
               "rank " + std::to_string(i) + ": " + std::to_string(ft.orbit_counts[static_cast<std::size_t>(i)]) + " orbits, expected " +
                   std::to_string(ft.expected[static_cast<std::size_t>(i)]));
    c.record(ft.representatives_split, "adjacent faces at the deficient rank share an orbit");
    rep.add(c);
    Check s("section orbits");
    for (int i = -1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        auto so = section_orbit_report(an, i, j);
        s.record(so.pass, "S" + detail::rank_pair(i, j) + ": " + std::to_string(so.orbit_count) + " orbits, expected " +
                              std::to_string(so.expected));
      }
    rep.add(s);
  } else {
    rep.add(Check::not_applicable("face transitivity", "regular input"));
    rep.add(Check::not_applicable("section orbits", "regular input"));
  }
  rep.add(section_class_check(an));
  rep.add(chain_orbit_property(an));
  rep.add(class_well_definedness(an));
  rep.add(parity_check(an));
  rep.add(equivelar_check(an));
  return rep;
}

}  // namespace polytwo
