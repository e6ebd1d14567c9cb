#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polytwo/check.hpp"
#include "polytwo/classifier.hpp"
#include "polytwo/error.hpp"
#include "polytwo/generators.hpp"
#include "polytwo/group.hpp"
#include "polytwo/isomorphism.hpp"
#include "polytwo/poset.hpp"
#include "polytwo/stabilizers.hpp"

namespace polytwo {

enum class CosetFamily { Base, Adjacent };

/// A face as a right coset of a face stabilizer, kept by its least element.
struct CosetFace {
  int rank = 0;
  CosetFamily family = CosetFamily::Base;
  Automorphism rep;

  friend bool operator==(const CosetFace&, const CosetFace&) = default;
};

/// Group data the reconstruction is allowed to see.
struct OrderData {
  int rank = 0;
  RankSet I;
  std::optional<int> special;  // j0 when the reflection deficiency is 1
  const Group* group = nullptr;
  GeneratorSystem gs;
  SubgroupFamily family;
  std::optional<SubgroupFamily> primed;

  const Group& stabilizer(int r, CosetFamily fam) const {
    if (r == -1 || r == rank) {
      if (fam != CosetFamily::Base) throw PolytopeError(ErrorCode::CaseUndefined, "improper faces have no adjacent family");
      return *group;
    }
    if (fam == CosetFamily::Adjacent) {
      if (!special || r != *special)
        throw PolytopeError(ErrorCode::CaseUndefined, "adjacent family only exists at the special rank");
      return primed->at(RankSet{r});
    }
    return family.at(RankSet{r});
  }

  Coset coset(const CosetFace& f) const { return right_coset(stabilizer(f.rank, f.family), f.rep); }
};

inline OrderData make_order_data(const Analysis& an) {
  an.profile.require_two_or_fewer();
  OrderData d;
  d.rank = an.rank();
  d.I = an.class_set();
  d.group = &an.group;
  d.gs = distinguished_generators(an);
  d.family = build_family(d.gs, an.group);
  const RankSet bar = an.deficient_set();
  if (bar.size() == 1) {
    d.special = bar.to_vector().front();
    d.primed = build_family(rebase(d.gs, an, *d.special), an.group, d.special);
  }
  return d;
}

/// Incidence a <= b decided from cosets alone.
inline bool incidence_oracle(const OrderData& d, const CosetFace& a, const CosetFace& b) {
  const int i = a.rank;
  const int j = b.rank;
  if (i > j) return false;
  const bool a_adj = a.family == CosetFamily::Adjacent;
  const bool b_adj = b.family == CosetFamily::Adjacent;
  if ((a_adj && (!d.special || i != *d.special)) || (b_adj && (!d.special || j != *d.special)))
    throw PolytopeError(ErrorCode::CaseUndefined, "adjacent-family face away from the special rank");

  if (a_adj && b_adj) return coset_intersects(d.coset(a), d.coset(b));  // equality at the special rank
  if (a_adj || b_adj) {
    if (i == j) return false;  // different orbits at the same rank
    return coset_intersects(d.coset(a), d.coset(b));
  }

  const RankSet bar = d.I.complement(d.rank);
  RankSet ij;
  if (i >= 0 && i < d.rank) ij.insert(i);
  if (j >= 0 && j < d.rank) ij.insert(j);
  if (bar.size() == 2 && bar == ij) {
    const Group& gj = d.stabilizer(j, CosetFamily::Base);
    const Coset ca = d.coset(a);
    return coset_intersects(ca, right_coset(gj, b.rep)) ||
           coset_intersects(ca, two_sided_coset(d.gs.a(i, j), gj, b.rep));
  }
  return coset_intersects(d.coset(a), d.coset(b));
}

struct Reconstruction {
  RankedPoset poset;
  std::vector<CosetFace> faces;  // parallel to poset face indices
  std::vector<std::size_t> base_counts;      // ranks -1..n
  std::vector<std::size_t> adjacent_counts;  // ranks -1..n
};

namespace detail {

inline std::vector<Automorphism> coset_reps(const Group& whole, const Group& h) {
  std::vector<bool> done(whole.order(), false);
  std::vector<Automorphism> reps;
  for (std::size_t g = 0; g < whole.order(); ++g) {
    if (done[g]) continue;
    const Automorphism& x = whole.elements()[g];
    reps.push_back(x);  // elements are sorted, so the first hit is the least
    for (const auto& y : h.elements()) done[*whole.index_of(y * x)] = true;
  }
  return reps;
}

inline std::string padded(std::size_t k, std::size_t total) {
  std::size_t width = std::to_string(total == 0 ? 0 : total - 1).size();
  std::string s = std::to_string(k);
  return std::string(width - std::min(width, s.size()), '0') + s;
}

}  // namespace detail

inline Reconstruction rebuild_order(const OrderData& d) {
  const int n = d.rank;
  Reconstruction rec;
  std::vector<std::vector<int>> by_rank(static_cast<std::size_t>(n + 2));
  std::vector<Face> faces;
  auto add = [&](std::string id, CosetFace cf) {
    by_rank[static_cast<std::size_t>(cf.rank + 1)].push_back(static_cast<int>(rec.faces.size()));
    faces.push_back({std::move(id), cf.rank});
    rec.faces.push_back(std::move(cf));
  };
  rec.base_counts.assign(static_cast<std::size_t>(n + 2), 0);
  rec.adjacent_counts.assign(static_cast<std::size_t>(n + 2), 0);
  add(std::string(kBottomId), {-1, CosetFamily::Base, d.group->identity()});
  rec.base_counts[0] = 1;
  for (int r = 0; r < n; ++r) {
    auto reps = detail::coset_reps(*d.group, d.stabilizer(r, CosetFamily::Base));
    for (std::size_t k = 0; k < reps.size(); ++k)
      add("f" + std::to_string(r) + "_" + detail::padded(k, reps.size()), {r, CosetFamily::Base, reps[k]});
    rec.base_counts[static_cast<std::size_t>(r + 1)] = reps.size();
    if (d.special && *d.special == r) {
      auto adj = detail::coset_reps(*d.group, d.stabilizer(r, CosetFamily::Adjacent));
      for (std::size_t k = 0; k < adj.size(); ++k)
        add("g" + std::to_string(r) + "_" + detail::padded(k, adj.size()), {r, CosetFamily::Adjacent, adj[k]});
      rec.adjacent_counts[static_cast<std::size_t>(r + 1)] = adj.size();
    }
  }
  if (n >= 0) {
    add(std::string(kTopId), {n, CosetFamily::Base, d.group->identity()});
    rec.base_counts[static_cast<std::size_t>(n + 1)] = 1;
  }

  std::vector<RankedPoset::Cover> covers;
  for (int r = -1; r < n; ++r)
    for (int lo : by_rank[static_cast<std::size_t>(r + 1)])
      for (int hi : by_rank[static_cast<std::size_t>(r + 2)])
        if (incidence_oracle(d, rec.faces[static_cast<std::size_t>(lo)], rec.faces[static_cast<std::size_t>(hi)]))
          covers.emplace_back(faces[static_cast<std::size_t>(hi)].id, faces[static_cast<std::size_t>(lo)].id);

  std::vector<std::string> ids;
  for (const auto& f : faces) ids.push_back(f.id);
  rec.poset = RankedPoset(n, faces, covers);
  // RankedPoset sorts its faces; put the coset data in the same order
  std::vector<CosetFace> ordered(rec.faces.size());
  for (std::size_t k = 0; k < ids.size(); ++k) ordered[static_cast<std::size_t>(rec.poset.index_of(ids[k]))] = rec.faces[k];
  rec.faces = std::move(ordered);

  auto rep = validate_polytope(rec.poset);
  if (!rep.ok())
    throw PolytopeError(ErrorCode::ReconstructionMismatch, "assembled order is not a polytope: " + detail::validation_summary(rep));

  // the oracle on every pair of ranks must agree with the closure of the covers
  const RankedPoset& q = rec.poset;
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b) {
      const int x = static_cast<int>(a);
      const int y = static_cast<int>(b);
      if (q.rank_of(x) > q.rank_of(y)) continue;
      const bool want = q.rank_of(x) == q.rank_of(y) ? x == y : q.leq(x, y);
      if (incidence_oracle(d, rec.faces[a], rec.faces[b]) != want)
        throw PolytopeError(ErrorCode::ReconstructionMismatch, "oracle disagrees with the closure at " + q.id(x) + ", " + q.id(y));
    }
  return rec;
}

inline Reconstruction rebuild_order(const Analysis& an) { return rebuild_order(make_order_data(an)); }
inline Reconstruction rebuild_order(const RankedPoset& p) {
  auto an = analyze(p);
  return rebuild_order(an);
}

/// The coset standing for an actual face of the polytope.
inline CosetFace coset_face_of(const Analysis& an, const OrderData& d, int face) {
  const RankedPoset& p = an.poset();
  const int r = p.rank_of(face);
  if (r == -1 || r == p.rank()) return {r, CosetFamily::Base, an.group.identity()};
  std::optional<FlagIndex> other;
  for (std::size_t f = 0; f < an.graph.size(); ++f) {
    auto flag = static_cast<FlagIndex>(f);
    if (!an.graph.contains_face(flag, face)) continue;
    if (an.same_orbit(0, flag))
      return {r, CosetFamily::Base, right_coset(d.stabilizer(r, CosetFamily::Base), *an.group.sending_base_to(flag)).representative()};
    if (!other) other = flag;
  }
  if (!other || !d.special || *d.special != r)
    throw PolytopeError(ErrorCode::CaseUndefined, "face " + p.id(face) + " has no coset description");
  auto g = an.group.sending(an.graph.adjacent(0, r), *other);
  return {r, CosetFamily::Adjacent, right_coset(d.stabilizer(r, CosetFamily::Adjacent), *g).representative()};
}

/// The oracle against real incidence for every pair of faces.
inline Check oracle_agreement(const Analysis& an, const OrderData& d) {
  Check c("oracle agreement");
  const RankedPoset& p = an.poset();
  std::vector<CosetFace> cf;
  for (std::size_t f = 0; f < p.size(); ++f) cf.push_back(coset_face_of(an, d, static_cast<int>(f)));
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      const int x = static_cast<int>(a);
      const int y = static_cast<int>(b);
      if (p.rank_of(x) > p.rank_of(y)) continue;
      const bool want = p.rank_of(x) == p.rank_of(y) ? x == y : p.leq(x, y);
      c.record(incidence_oracle(d, cf[a], cf[b]) == want, p.id(x) + " vs " + p.id(y));
    }
  return c;
}

/// Coset counts per rank match face-orbit sizes, and the families at the
/// special rank split the faces of that rank.
inline Check coset_count_check(const Analysis& an, const Reconstruction& rec) {
  Check c("coset counts");
  const RankedPoset& p = an.poset();
  for (int r = 0; r < p.rank(); ++r) {
    auto orb = face_orbits(an.group, an.graph, r);
    const auto& faces = p.faces_of_rank(r);
    const int base_face = an.graph.face(0, r);
    const std::size_t pos = static_cast<std::size_t>(std::find(faces.begin(), faces.end(), base_face) - faces.begin());
    const std::size_t base_orbit_size = orb.orbits[orb.orbit_of[pos]].size();
    const std::size_t b = rec.base_counts[static_cast<std::size_t>(r + 1)];
    const std::size_t a = rec.adjacent_counts[static_cast<std::size_t>(r + 1)];
    c.record(b == base_orbit_size && b + a == faces.size(),
             "rank " + std::to_string(r) + ": " + std::to_string(b) + "+" + std::to_string(a) + " cosets for " +
                 std::to_string(faces.size()) + " faces");
  }
  return c;
}

inline bool roundtrip_check(const Analysis& an) {
  auto rec = rebuild_order(an);
  return is_isomorphic(an.poset(), rec.poset);
}
inline bool roundtrip_check(const RankedPoset& p) { return roundtrip_check(analyze(p)); }

inline SuiteReport order_suite(const Analysis& an) {
  SuiteReport rep("order");
  auto d = make_order_data(an);
  auto rec = rebuild_order(d);
  Check rt("roundtrip");
  rt.record(is_isomorphic(an.poset(), rec.poset), "rebuilt poset is not isomorphic to the input");
  rep.add(rt);
  rep.add(coset_count_check(an, rec));
  rep.add(oracle_agreement(an, d));
  return rep;
}

}  // namespace polytwo
