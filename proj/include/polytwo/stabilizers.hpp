#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polytwo/check.hpp"
#include "polytwo/classifier.hpp"
#include "polytwo/error.hpp"
#include "polytwo/generators.hpp"
#include "polytwo/group.hpp"
#include "polytwo/rank_set.hpp"

namespace polytwo {

inline constexpr int kMaxFamilyRank = 8;

/// Gamma_J for every J subset of N, indexed by bitmask. A primed family is
/// built from the generators at the j0-adjacent flag.
struct SubgroupFamily {
  std::optional<int> primed_at;
  FlagIndex base_flag = 0;
  int rank = 0;
  std::vector<Group> subgroups;
  std::vector<std::vector<std::string>> generator_labels;

  const Group& at(RankSet J) const { return subgroups.at(J.mask()); }
  /// Gamma^J = Gamma_{N \ J}.
  const Group& upper(RankSet J) const { return at(J.complement(rank)); }
  const std::vector<std::string>& labels(RankSet J) const { return generator_labels.at(J.mask()); }

  std::string name() const { return primed_at ? "Gamma'" : "Gamma"; }
};

inline SubgroupFamily build_family(const GeneratorSystem& gs, const Group& group, std::optional<int> primed_at = std::nullopt) {
  const int n = gs.rank;
  if (n > kMaxFamilyRank)
    throw PolytopeError(ErrorCode::BadParameter, "subgroup families are limited to rank " + std::to_string(kMaxFamilyRank));
  SubgroupFamily fam;
  fam.primed_at = primed_at;
  fam.base_flag = gs.base_flag;
  fam.rank = n;
  const RankSet all = RankSet::all(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const RankSet J = RankSet::from_mask(mask);
    const RankSet free = all - J;
    const auto Iv = (gs.I & free).to_vector();
    const auto Bv = (gs.deficient() & free).to_vector();
    std::vector<Automorphism> gens;
    std::vector<std::string> labels;
    for (int i : Iv) {
      gens.push_back(gs.r(i));
      labels.push_back("rho_" + std::to_string(i));
    }
    for (int j : Bv)
      for (int k : Bv)
        if (j != k) {
          gens.push_back(gs.a(j, k));
          labels.push_back(GeneratorSystem::label2(j, k));
        }
    for (int j : Bv)
      for (int i : Iv) {
        gens.push_back(gs.a(j, i, j));
        labels.push_back(GeneratorSystem::label3(j, i));
      }
    fam.subgroups.push_back(generate_subgroup(group, gens));
    fam.generator_labels.push_back(std::move(labels));
  }
  return fam;
}

/// Pointwise stabilizer of the faces of `base` at ranks in J, filtered from the whole group.
inline std::vector<Automorphism> chain_stabilizer(const FlagGraph& g, const Group& group, FlagIndex base, RankSet J) {
  std::vector<Automorphism> out;
  const auto ranks = J.to_vector();
  for (const auto& e : group.elements()) {
    const FlagIndex img = e(base);
    bool fixes = std::all_of(ranks.begin(), ranks.end(), [&](int j) { return g.face(img, j) == g.face(base, j); });
    if (fixes) out.push_back(e);
  }
  return out;
}

namespace detail {

inline bool same_set(const Group& h, const std::vector<Automorphism>& elems) {
  if (h.order() != elems.size()) return false;
  return std::all_of(elems.begin(), elems.end(), [&](const Automorphism& e) { return h.contains(e); });
}

inline bool same_set(std::vector<Automorphism> a, std::vector<Automorphism> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline std::string fam_label(const SubgroupFamily& f, RankSet J) { return f.name() + "_" + J.to_string(); }

}  // namespace detail

/// Gamma_J equals the stabilizer of the subchain Phi_J, for every J.
inline Check verify_stabilizers(const SubgroupFamily& fam, const FlagGraph& g, const Group& group) {
  Check c(fam.primed_at ? "primed stabilizers" : "stabilizers");
  for (std::uint32_t mask = 0; mask < (1u << fam.rank); ++mask) {
    const RankSet J = RankSet::from_mask(mask);
    auto stab = chain_stabilizer(g, group, fam.base_flag, J);
    c.record(detail::same_set(fam.at(J), stab), detail::fam_label(fam, J) + " has order " + std::to_string(fam.at(J).order()) +
                                                    ", chain stabilizer has order " + std::to_string(stab.size()));
  }
  return c;
}

/// Gamma_J cap Gamma_K = Gamma_{J cup K}, and the same statement for upper indices.
inline Check verify_intersection_property(const SubgroupFamily& fam) {
  Check c(fam.primed_at ? "primed intersection property" : "intersection property");
  const std::uint32_t total = 1u << fam.rank;
  for (std::uint32_t a = 0; a < total; ++a)
    for (std::uint32_t b = 0; b < total; ++b) {
      const RankSet J = RankSet::from_mask(a);
      const RankSet K = RankSet::from_mask(b);
      c.record(detail::same_set(fam.at(J | K), intersect_elements(fam.at(J), fam.at(K))),
               detail::fam_label(fam, J) + " cap " + detail::fam_label(fam, K));
      c.record(detail::same_set(fam.upper(J & K), intersect_elements(fam.upper(J), fam.upper(K))),
               "upper " + J.to_string() + " cap upper " + K.to_string());
    }
  return c;
}

/// Gamma'_J = Gamma_J when j0 is not in J, else Gamma_{J - j0} cap Gamma'_{j0}.
inline Check verify_intertwine(const SubgroupFamily& fam, const SubgroupFamily& primed, int j0) {
  Check c("intertwine at " + std::to_string(j0));
  for (std::uint32_t mask = 0; mask < (1u << fam.rank); ++mask) {
    const RankSet J = RankSet::from_mask(mask);
    if (!J.contains(j0)) {
      c.record(same_elements(primed.at(J), fam.at(J)), "Gamma'_" + J.to_string() + " differs from Gamma_" + J.to_string());
    } else {
      RankSet rest = J;
      rest.erase(j0);
      c.record(detail::same_set(primed.at(J), intersect_elements(fam.at(rest), primed.at(RankSet{j0}))),
               "Gamma'_" + J.to_string() + " differs from Gamma_" + rest.to_string() + " cap Gamma'_{" + std::to_string(j0) + "}");
    }
  }
  return c;
}

/// Gamma_J with J = N \ {r+1..s-1} is flag-transitive on Phi_s/Phi_r exactly when
/// {r+1..s-1} lies in I; the section is then regular with that many flags.
inline Check verify_section_transitivity(const SubgroupFamily& fam, const Analysis& an) {
  Check c("section transitivity");
  const int n = fam.rank;
  const RankSet I = an.class_set();
  const FlagGraph& g = an.graph;
  for (int r = -1; r <= n; ++r)
    for (int s = r; s <= n; ++s) {
      const RankSet inner = RankSet::interval(r + 1, s - 1);
      const RankSet J = RankSet::all(n) - inner;
      const auto ranks = J.to_vector();
      std::size_t through = 0;
      for (std::size_t f = 0; f < g.size(); ++f) {
        bool ok = std::all_of(ranks.begin(), ranks.end(), [&](int j) {
          return g.face(static_cast<FlagIndex>(f), j) == g.face(fam.base_flag, j);
        });
        through += ok;
      }
      const bool transitive = fam.at(J).order() == through;
      const bool expected = inner.subset_of(I);
      std::string where = "section at ranks (" + std::to_string(r) + "," + std::to_string(s) + ")";
      c.record(transitive == expected, where + (transitive ? " is" : " is not") + " transitive");
      if (transitive && s > r) {
        auto sec = analyze(section(an.poset(), g.face(fam.base_flag, r), g.face(fam.base_flag, s)), false);
        c.record(sec.profile.regular() && sec.profile.group_order == sec.profile.flag_count && sec.profile.flag_count == through,
                 where + " is not regular of the expected order");
      }
    }
  return c;
}

struct GammaLDecomposition {
  int l = 0;
  Group minus;
  Group plus;
  std::vector<std::pair<int, int>> pm_generators;  // (j,k) with j < l < k outside I
  std::size_t index = 1;
  SuiteReport checks;
};

namespace detail {

inline std::vector<Automorphism> product_set(const Group& a, const Group& b) {
  std::vector<Automorphism> out;
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) out.push_back(x * y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Automorphism> conjugate_set(const Group& h, const Automorphism& a) {
  const Automorphism ai = a.inverse();
  std::vector<Automorphism> out;
  for (const auto& x : h.elements()) out.push_back(ai * x * a);
  return out;
}

}  // namespace detail

/// Structure of Gamma_l: the commuting pieces below and above l and the
/// straddling alpha_{j,k}.
inline GammaLDecomposition gamma_l_decomposition(const GeneratorSystem& gs, const SubgroupFamily& fam, const Group& group, int l) {
  const int n = gs.rank;
  if (l < 0 || l >= n) throw PolytopeError(ErrorCode::BadRank, "l = " + std::to_string(l) + " is not a proper rank");
  GammaLDecomposition d;
  d.l = l;
  d.minus = fam.at(RankSet::interval(l, n - 1));
  d.plus = fam.at(RankSet::interval(0, l));
  const Group& gl = fam.at(RankSet{l});
  const auto Bv = gs.deficient().to_vector();
  const auto Iv = gs.I.to_vector();
  for (int j : Bv)
    for (int k : Bv)
      if (j < l && l < k) d.pm_generators.emplace_back(j, k);
  d.checks.suite = "gamma_" + std::to_string(l);

  Check commute("minus/plus commute");
  for (const auto& x : d.minus.elements())
    for (const auto& y : d.plus.elements()) commute.record(x * y == y * x, "elements of minus and plus do not commute");
  d.checks.add(commute);

  Check trivial("minus/plus trivial intersection");
  trivial.record(intersect_elements(d.minus, d.plus).size() == 1, "minus and plus share a non-identity element");
  d.checks.add(trivial);

  auto mp = detail::product_set(d.minus, d.plus);
  std::vector<Automorphism> mp_gens = d.minus.generators();
  for (const auto& g : d.plus.generators()) mp_gens.push_back(g);
  Group mp_group = generate_subgroup(group, mp_gens);
  Check direct("direct product order");
  direct.record(mp.size() == d.minus.order() * d.plus.order() && detail::same_set(mp_group, mp),
                "|minus plus| = " + std::to_string(mp.size()) + ", |minus||plus| = " + std::to_string(d.minus.order() * d.plus.order()));
  d.checks.add(direct);

  Check index("index in Gamma_l");
  const bool divisible = gl.order() % mp.size() == 0;
  d.index = divisible ? gl.order() / mp.size() : 0;
  const std::size_t expected_index = d.pm_generators.empty() ? 1 : 2;
  index.record(divisible && d.index == expected_index && std::all_of(mp.begin(), mp.end(), [&](const Automorphism& x) {
                 return gl.contains(x);
               }),
               "index " + std::to_string(d.index) + ", expected " + std::to_string(expected_index));
  d.checks.add(index);

  Check coset("coset identity");
  Check alphcom("alpha commutation");
  Check conj("conjugation formulas");
  Check normal("normalization");
  if (d.pm_generators.empty()) {
    coset.record(detail::same_set(gl, mp), "Gamma_l differs from minus plus");
  }
  for (auto [j, k] : d.pm_generators) {
    const Automorphism& ajk = gs.a(j, k);
    std::vector<Automorphism> both = mp;
    for (const auto& x : mp) both.push_back(x * ajk);
    coset.record(detail::same_set(gl, both), "Gamma_l differs from minus plus <" + GeneratorSystem::label2(j, k) + ">");

    for (auto [j2, k2] : d.pm_generators) {
      const Automorphism lhs = ajk * gs.a(j2, k2);
      const Automorphism mid = gs.a(k2, k) * gs.a(j2, j);
      const Automorphism rhs = gs.a(j2, j) * gs.a(k2, k);
      alphcom.record(lhs == mid && mid == rhs && std::binary_search(mp.begin(), mp.end(), lhs),
                     GeneratorSystem::label2(j, k) + " " + GeneratorSystem::label2(j2, k2));
    }

    const Automorphism aji = ajk.inverse();
    const Automorphism& akj = gs.a(k, j);
    const Automorphism akji = akj.inverse();
    for (int i : Iv) {
      if (i < l)
        conj.record(aji * gs.r(i) * ajk == gs.a(j, i, j), "rho_" + std::to_string(i) + " under " + GeneratorSystem::label2(j, k));
      if (i > l)
        conj.record(akji * gs.r(i) * akj == gs.a(k, i, k), "rho_" + std::to_string(i) + " under " + GeneratorSystem::label2(k, j));
    }
    for (int s : Bv) {
      for (int t : Bv) {
        if (s < l && t < l)
          conj.record(aji * gs.a(s, t) * ajk == gs.a(t, j) * gs.a(j, s),
                      GeneratorSystem::label2(s, t) + " under " + GeneratorSystem::label2(j, k));
        if (s > l && t > l)
          conj.record(akji * gs.a(s, t) * akj == gs.a(t, k) * gs.a(k, s),
                      GeneratorSystem::label2(s, t) + " under " + GeneratorSystem::label2(k, j));
      }
      for (int i : Iv) {
        if (s < l && i < l)
          conj.record(aji * gs.a(s, i, s) * ajk == gs.a(s, j) * gs.r(i) * gs.a(j, s),
                      GeneratorSystem::label3(s, i) + " under " + GeneratorSystem::label2(j, k));
        if (s > l && i > l)
          conj.record(akji * gs.a(s, i, s) * akj == gs.a(s, k) * gs.r(i) * gs.a(k, s),
                      GeneratorSystem::label3(s, i) + " under " + GeneratorSystem::label2(k, j));
      }
    }
    normal.record(detail::same_set(d.minus, detail::conjugate_set(d.minus, ajk)), "minus not normalized by " + GeneratorSystem::label2(j, k));
    normal.record(detail::same_set(d.plus, detail::conjugate_set(d.plus, ajk)), "plus not normalized by " + GeneratorSystem::label2(j, k));
  }
  d.checks.add(coset);
  for (Check* c : {&alphcom, &conj, &normal}) {
    if (c->instances == 0) *c = Check::not_applicable(c->name, "no ranks outside I on both sides of " + std::to_string(l));
    d.checks.add(*c);
  }
  return d;
}

/// Extra intersection identities for reflection deficiency 1, and for
/// deficiency 2 with deficient ranks {j0, j0+2}.
inline SuiteReport verify_deficiency_lemmas(const GeneratorSystem& gs, const SubgroupFamily& fam, const SubgroupFamily* primed,
                                            const Group& group) {
  SuiteReport rep("deficiency");
  const int n = gs.rank;
  const auto bar = gs.deficient().to_vector();
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
    return "<" + out + ">";
  };
  auto primed_labels = [&](RankSet J) {
    // express primed generators through the formulas at j0
    std::vector<std::string> out;
    const int j0 = *primed->primed_at;
    for (const auto& lab : primed->labels(J)) {
      if (lab.rfind("rho_", 0) == 0) out.push_back("rho'_" + lab.substr(4) + "=" + GeneratorSystem::label3(j0, std::stoi(lab.substr(4))));
      else out.push_back(lab + "'");
    }
    return out;
  };

  if (bar.size() == 1) {
    const int j0 = bar.front();
    if (!primed || !primed->primed_at || *primed->primed_at != j0)
      throw PolytopeError(ErrorCode::PreconditionViolated, "deficiency 1 identities need the family primed at " + std::to_string(j0));
    const RankSet all = RankSet::all(n);
    if (j0 != 0) {
      const RankSet J = all - RankSet{j0 - 1, j0};
      const RankSet Jminus = RankSet::interval(j0, n - 1);
      const Group& lhs = fam.at(J);
      const Group& rhs = primed->at(Jminus);
      Group target = generate_subgroup(group, {gs.a(j0, j0 - 1, j0)});
      Check c("rd1 lower identity");
      c.detail = "Gamma_" + J.to_string() + " = " + join(fam.labels(J)) + "; (Gamma'_" + std::to_string(j0) + ")^- = " +
                 join(primed_labels(Jminus));
      c.record(detail::same_set(target, intersect_elements(lhs, rhs)), c.detail);
      std::vector<Automorphism> gen_form;
      for (int i = 0; i < j0; ++i) gen_form.push_back(gs.a(j0, i, j0));
      Group left = generate_subgroup(group, {gs.r(j0 - 1), gs.a(j0, j0 - 1, j0)});
      Group right = generate_subgroup(group, gen_form);
      c.record(detail::same_set(target, intersect_elements(left, right)), "generator form of the lower identity");
      rep.add(c);
    } else {
      rep.add(Check::not_applicable("rd1 lower identity", "j0 = 0"));
    }
    if (j0 != n - 1) {
      const RankSet J = all - RankSet{j0, j0 + 1};
      const RankSet Jplus = RankSet::interval(0, j0);
      const Group& lhs = fam.at(J);
      const Group& rhs = primed->at(Jplus);
      Group target = generate_subgroup(group, {gs.a(j0, j0 + 1, j0)});
      Check c("rd1 upper identity");
      c.detail = "Gamma_" + J.to_string() + " = " + join(fam.labels(J)) + "; (Gamma'_" + std::to_string(j0) + ")^+ = " +
                 join(primed_labels(Jplus));
      c.record(detail::same_set(target, intersect_elements(lhs, rhs)), c.detail);
      std::vector<Automorphism> gen_form;
      for (int i = j0 + 1; i < n; ++i) gen_form.push_back(gs.a(j0, i, j0));
      Group left = generate_subgroup(group, {gs.r(j0 + 1), gs.a(j0, j0 + 1, j0)});
      Group right = generate_subgroup(group, gen_form);
      c.record(detail::same_set(target, intersect_elements(left, right)), "generator form of the upper identity");
      rep.add(c);
    } else {
      rep.add(Check::not_applicable("rd1 upper identity", "j0 = n-1"));
    }
    rep.add(Check::not_applicable("rd2 empty coset", "reflection deficiency is 1"));
    rep.add(Check::not_applicable("rd2 conjugate coset", "reflection deficiency is 1"));
    return rep;
  }

  rep.add(Check::not_applicable("rd1 lower identity", "reflection deficiency is " + std::to_string(bar.size())));
  rep.add(Check::not_applicable("rd1 upper identity", "reflection deficiency is " + std::to_string(bar.size())));
  if (bar.size() == 2 && bar[1] == bar[0] + 2) {
    const int j0 = bar[0];
    const int k0 = bar[1];
    const Group& minus = fam.at(RankSet::interval(k0, n - 1));
    const Group& plus = fam.at(RankSet::interval(0, j0));
    const Automorphism& ajk = gs.a(j0, k0);
    const Automorphism& akj = gs.a(k0, j0);
    Check empty("rd2 empty coset");
    empty.detail = "Gamma_" + std::to_string(k0) + "^- = " + join(fam.labels(RankSet::interval(k0, n - 1))) + "; Gamma_" +
                   std::to_string(j0) + "^+ = " + join(fam.labels(RankSet::interval(0, j0)));
    empty.record(!coset_intersects(right_coset(minus, group.identity()), right_coset(plus, ajk)), empty.detail);
    rep.add(empty);
    Check conj("rd2 conjugate coset");
    conj.detail = empty.detail;
    Group target = generate_subgroup(group, {gs.a(j0, j0 + 1, j0)});
    conj.record(detail::same_set(target, coset_intersection(right_coset(minus, group.identity()), two_sided_coset(akj, plus, ajk))),
                conj.detail);
    rep.add(conj);
  } else {
    const std::string why = "deficient ranks " + gs.deficient().to_string() + " are not of the form {j0, j0+2}";
    rep.add(Check::not_applicable("rd2 empty coset", why));
    rep.add(Check::not_applicable("rd2 conjugate coset", why));
  }
  return rep;
}

}  // namespace polytwo
