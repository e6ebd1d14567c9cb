#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "polytwo/check.hpp"
#include "polytwo/classifier.hpp"
#include "polytwo/generators.hpp"
#include "polytwo/reconstruct.hpp"
#include "polytwo/stabilizers.hpp"

namespace polytwo {

inline constexpr std::uint64_t kSuiteSeed = 0x5eed2024;
inline constexpr std::size_t kFactorSamples = 100;
inline constexpr std::size_t kBookkeepingSamples = 50;

/// Flag-level axioms: free action, involutive fixed-point-free adjacencies,
/// commuting adjacencies at ranks two or more apart.
inline SuiteReport axiom_suite(const Analysis& an) {
  SuiteReport rep("axioms");
  const FlagGraph& g = an.graph;
  const int n = g.rank();
  const auto report = validate_polytope(an.poset());
  for (auto [name, ax] : {std::pair{"P1 bounds", &report.p1}, std::pair{"P2 chain lengths", &report.p2},
                          std::pair{"P3 diamond", &report.p3}, std::pair{"P4 strong connectivity", &report.p4}}) {
    Check c(name);
    c.record(ax->pass, ax->failures.empty() ? std::string() : ax->failures.front());
    rep.add(c);
  }

  Check free("free action");
  for (const auto& a : an.group.elements()) {
    if (a.is_identity()) continue;
    bool moves_all = true;
    for (std::size_t f = 0; f < g.size(); ++f) moves_all = moves_all && a(static_cast<FlagIndex>(f)) != f;
    free.record(moves_all, "a non-identity automorphism fixes a flag");
  }
  rep.add(free);

  Check inv("adjacency involutions");
  Check comm("distant adjacencies commute");
  for (std::size_t f = 0; f < g.size(); ++f) {
    const auto x = static_cast<FlagIndex>(f);
    for (int i = 0; i < n; ++i) {
      const FlagIndex y = g.adjacent(x, i);
      inv.record(y != x && g.adjacent(y, i) == x, "flag " + std::to_string(f) + " at rank " + std::to_string(i));
      for (int j = i + 2; j < n; ++j)
        comm.record(g.adjacent(g.adjacent(x, i), j) == g.adjacent(g.adjacent(x, j), i),
                    "flag " + std::to_string(f) + " at ranks " + std::to_string(i) + "," + std::to_string(j));
    }
  }
  rep.add(inv);
  rep.add(comm);
  return rep;
}

namespace detail {

inline std::vector<std::pair<std::vector<int>, const Automorphism*>> defining_words(const GeneratorSystem& gs) {
  std::vector<std::pair<std::vector<int>, const Automorphism*>> out;
  for (const auto& [i, a] : gs.rho) out.push_back({{i}, &a});
  for (const auto& [jk, a] : gs.alpha2) out.push_back({{jk.first, jk.second}, &a});
  for (const auto& [ji, a] : gs.alpha3) out.push_back({{ji.first, ji.second, ji.first}, &a});
  return out;
}

}  // namespace detail

inline Check defining_actions(const GeneratorSystem& gs, const FlagGraph& g) {
  Check c("defining actions");
  for (const auto& [word, a] : detail::defining_words(gs))
    c.record((*a)(gs.base_flag) == g.apply_word(gs.base_flag, word), "a generator misses its image flag");
  return c;
}

/// Phi(gamma alpha) = (Phi alpha)^{s(gamma)} for every generator gamma.
inline Check bookkeeping_check(const GeneratorSystem& gs, const FlagGraph& g, const Group& group, std::mt19937_64& rng,
                               std::size_t samples = kBookkeepingSamples) {
  Check c("left multiplication bookkeeping");
  std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
  for (std::size_t t = 0; t < samples; ++t) {
    const Automorphism& a = group.elements()[pick(rng)];
    for (const auto& [word, gam] : detail::defining_words(gs))
      c.record(((*gam) * a)(gs.base_flag) == g.apply_word(a(gs.base_flag), word), "bookkeeping fails for a sampled element");
  }
  return c;
}

inline SuiteReport relations_suite(const Analysis& an, std::uint64_t seed = kSuiteSeed) {
  SuiteReport rep("relations");
  const auto gs = distinguished_generators(an);
  std::mt19937_64 rng(seed);

  rep.add(defining_actions(gs, an.graph));
  Check gen("generation");
  gen.record(verify_generation(gs, an.group), "generators close to a proper subgroup");
  rep.add(gen);

  Check fact("factorization");
  std::uniform_int_distribution<std::size_t> pick(0, an.group.order() - 1);
  for (std::size_t t = 0; t < kFactorSamples; ++t) {
    const Automorphism& psi = an.group.elements()[pick(rng)];
    try {
      auto tr = factorize(gs, an.graph, psi);
      fact.record(tr.product(psi.degree()) == psi && tr.split_points.size() % 2 == 0, "product of factors differs");
    } catch (const PolytopeError& e) {
      fact.record(false, e.what());
    }
  }
  rep.add(fact);
  rep.add(bookkeeping_check(gs, an.graph, an.group, rng));

  auto rel = verify_relations(gs, *an.profile.symbol, an.group);
  for (std::string fam : {"string", "a", "b", "c", "d", "e", "f"}) {
    if (rel.count(fam) == 0) continue;
    Check c(fam == "string" ? std::string("string relations") : "relations (" + fam + ")");
    for (const auto& e : rel.entries)
      if (e.family == fam)
        c.record(e.pass, e.relation + ": expected " + std::to_string(e.expected) + ", observed " + std::to_string(e.observed));
    rep.add(c);
  }

  const auto bar = an.deficient_set().to_vector();
  if (bar.empty()) {
    rep.add(Check::not_applicable("rebase", "no rank outside I"));
  } else {
    Check rb("rebase");
    for (int j0 : bar) {
      try {
        auto other = rebase(gs, an, j0);
        auto back = rebase(other, an, j0);
        rb.record(back.labelled() == gs.labelled(), "rebasing twice at " + std::to_string(j0) + " does not return");
      } catch (const PolytopeError& e) {
        rb.record(false, e.what());
      }
    }
    rep.add(rb);
  }
  return rep;
}

namespace detail {

struct Families {
  GeneratorSystem gs;
  SubgroupFamily base;
  std::vector<SubgroupFamily> primed;  // one per rank outside I
};

inline Families families(const Analysis& an) {
  Families f;
  f.gs = distinguished_generators(an);
  f.base = build_family(f.gs, an.group);
  for (int j0 : an.deficient_set().to_vector()) f.primed.push_back(build_family(rebase(f.gs, an, j0), an.group, j0));
  return f;
}

inline Check relabel(Check c, const std::string& suffix) {
  c.name += suffix;
  return c;
}

}  // namespace detail

inline SuiteReport stabilizers_suite(const Analysis& an) {
  an.profile.require_two_or_fewer();
  SuiteReport rep("stabilizers");
  const auto fs = detail::families(an);
  rep.add(verify_stabilizers(fs.base, an.graph, an.group));
  for (const auto& pf : fs.primed) {
    const std::string at = " at " + std::to_string(*pf.primed_at);
    rep.add(detail::relabel(verify_stabilizers(pf, an.graph, an.group), at));
    rep.add(verify_intertwine(fs.base, pf, *pf.primed_at));
  }
  rep.add(verify_section_transitivity(fs.base, an));
  for (int l = 0; l < an.rank(); ++l) {
    auto dec = gamma_l_decomposition(fs.gs, fs.base, an.group, l);
    for (auto c : dec.checks.checks) rep.add(detail::relabel(std::move(c), " at l=" + std::to_string(l)));
  }
  return rep;
}

inline SuiteReport intersections_suite(const Analysis& an) {
  an.profile.require_two_or_fewer();
  SuiteReport rep("intersections");
  const auto fs = detail::families(an);
  rep.add(verify_intersection_property(fs.base));
  for (const auto& pf : fs.primed)
    rep.add(detail::relabel(verify_intersection_property(pf), " at " + std::to_string(*pf.primed_at)));
  return rep;
}

inline SuiteReport deficiency_suite(const Analysis& an) {
  an.profile.require_two_or_fewer();
  const auto fs = detail::families(an);
  const SubgroupFamily* primed = fs.primed.size() == 1 ? &fs.primed.front() : nullptr;
  return verify_deficiency_lemmas(fs.gs, fs.base, primed, an.group);
}

inline SuiteReport sections_suite(const Analysis& an) {
  an.profile.require_two_or_fewer();
  return classifier_suite(an);
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "stabilizers", "intersections", "sections", "deficiency", "order"};
  return names;
}

/// Runs one named suite, or every suite for "all".
inline std::vector<SuiteReport> run_suites(const Analysis& an, std::string_view which) {
  an.profile.require_two_or_fewer();
  std::vector<SuiteReport> out;
  auto want = [&](std::string_view s) { return which == "all" || which == s; };
  if (want("relations")) out.push_back(relations_suite(an));
  if (want("stabilizers")) out.push_back(stabilizers_suite(an));
  if (want("intersections")) out.push_back(intersections_suite(an));
  if (want("sections")) out.push_back(sections_suite(an));
  if (want("deficiency")) out.push_back(deficiency_suite(an));
  if (want("order")) out.push_back(order_suite(an));
  if (which == "all") out.push_back(axiom_suite(an));
  if (out.empty()) throw PolytopeError(ErrorCode::BadParameter, "unknown suite " + std::string(which));
  return out;
}

}  // namespace polytwo
