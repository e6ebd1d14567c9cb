#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polytwo/check.hpp"
#include "polytwo/classifier.hpp"
#include "polytwo/error.hpp"
#include "polytwo/flag_graph.hpp"
#include "polytwo/group.hpp"
#include "polytwo/rank_set.hpp"

namespace polytwo {

/// rho_i (i in I), alpha_{j,k} and alpha_{j,i,j} (j, k outside I) relative to a base flag.
struct GeneratorSystem {
  FlagIndex base_flag = 0;
  int rank = 0;
  RankSet I;
  std::map<int, Automorphism> rho;
  std::map<std::pair<int, int>, Automorphism> alpha2;  // (j,k)
  std::map<std::pair<int, int>, Automorphism> alpha3;  // (j,i) for alpha_{j,i,j}

  RankSet deficient() const { return I.complement(rank); }

  const Automorphism& r(int i) const { return lookup(rho, i, "rho_" + std::to_string(i)); }
  const Automorphism& a(int j, int k) const { return lookup(alpha2, std::make_pair(j, k), label2(j, k)); }
  const Automorphism& a(int j, int i, int j2) const {
    if (j != j2) throw PolytopeError(ErrorCode::BadParameter, "alpha_{j,i,j} needs equal outer indices");
    return lookup(alpha3, std::make_pair(j, i), label3(j, i));
  }

  /// Every generator with its label, in a fixed order.
  std::vector<std::pair<std::string, Automorphism>> labelled() const {
    std::vector<std::pair<std::string, Automorphism>> out;
    for (const auto& [i, g] : rho) out.emplace_back("rho_" + std::to_string(i), g);
    for (const auto& [jk, g] : alpha2) out.emplace_back(label2(jk.first, jk.second), g);
    for (const auto& [ji, g] : alpha3) out.emplace_back(label3(ji.first, ji.second), g);
    return out;
  }
  std::vector<Automorphism> all() const {
    std::vector<Automorphism> out;
    for (auto& [name, g] : labelled()) out.push_back(g);
    return out;
  }

  static std::string label2(int j, int k) { return "alpha_{" + std::to_string(j) + "," + std::to_string(k) + "}"; }
  static std::string label3(int j, int i) {
    return "alpha_{" + std::to_string(j) + "," + std::to_string(i) + "," + std::to_string(j) + "}";
  }

 private:
  template <class Map, class Key>
  static const Automorphism& lookup(const Map& m, const Key& k, const std::string& name) {
    auto it = m.find(k);
    if (it == m.end()) throw PolytopeError(ErrorCode::BadParameter, name + " is not part of this generating set");
    return it->second;
  }
};

namespace detail {

inline Automorphism automorphism_to(const FlagGraph& g, const Group& group, FlagIndex base, const std::vector<int>& word,
                                    const std::string& name) {
  const FlagIndex target = g.apply_word(base, word);
  auto a = extend_flag_map(g, base, target);
  if (!a || !group.contains(*a))
    throw PolytopeError(ErrorCode::MissingAutomorphism, "no automorphism realizes " + name);
  return *a;
}

}  // namespace detail

inline GeneratorSystem distinguished_generators(const FlagGraph& g, const Group& group, FlagIndex base, RankSet I) {
  GeneratorSystem gs;
  gs.base_flag = base;
  gs.rank = g.rank();
  gs.I = I;
  const RankSet bar = gs.deficient();
  for (int i : I.to_vector()) gs.rho.emplace(i, detail::automorphism_to(g, group, base, {i}, "rho_" + std::to_string(i)));
  for (int j : bar.to_vector()) {
    for (int k : bar.to_vector())
      gs.alpha2.emplace(std::make_pair(j, k), detail::automorphism_to(g, group, base, {j, k}, GeneratorSystem::label2(j, k)));
    for (int i : I.to_vector())
      gs.alpha3.emplace(std::make_pair(j, i), detail::automorphism_to(g, group, base, {j, i, j}, GeneratorSystem::label3(j, i)));
  }
  return gs;
}

inline GeneratorSystem distinguished_generators(const Analysis& an, FlagIndex base = 0) {
  an.profile.require_two_or_fewer();
  return distinguished_generators(an.graph, an.group, base, an.class_set());
}

inline bool verify_generation(const GeneratorSystem& gs, const Group& group) {
  return generate_subgroup(group, gs.all()).order() == group.order();
}

struct FactorizationTrace {
  struct Factor {
    std::string name;                 // gamma_q or beta_q
    std::vector<std::string> labels;  // generators, left to right
    Automorphism value;
  };
  std::vector<int> word;
  std::vector<std::size_t> split_points;  // 1-based positions of letters outside I
  std::vector<Factor> factors;            // gamma_{2s}, beta_{2s-1}, ..., gamma_0 (identity factors omitted)

  Automorphism product(std::size_t degree) const {
    Automorphism acc = Automorphism::identity(degree);
    for (const auto& f : factors) acc = acc * f.value;
    return acc;
  }
};

/// Splits the shortest word from the base flag to its image at the letters
/// outside I and rebuilds psi from gamma (rho-only) and beta (alpha) pieces.
inline FactorizationTrace factorize(const GeneratorSystem& gs, const FlagGraph& g, const Automorphism& psi) {
  FactorizationTrace tr;
  tr.word = g.connecting_word(gs.base_flag, psi(gs.base_flag));
  for (std::size_t k = 0; k < tr.word.size(); ++k)
    if (!gs.I.contains(tr.word[k])) tr.split_points.push_back(k + 1);
  if (tr.split_points.size() % 2 != 0)
    throw PolytopeError(ErrorCode::PreconditionViolated, "odd number of letters outside I; psi leaves the base orbit");

  const std::size_t degree = psi.degree();
  auto make_gamma = [&](std::size_t q, std::size_t from, std::size_t to) {
    // letters word[from..to) all lie in I; the product runs in reverse order
    FactorizationTrace::Factor f{"gamma_" + std::to_string(q), {}, Automorphism::identity(degree)};
    for (std::size_t k = to; k-- > from;) {
      f.labels.push_back("rho_" + std::to_string(tr.word[k]));
      f.value = f.value * gs.r(tr.word[k]);
    }
    return f;
  };
  auto make_beta = [&](std::size_t q, std::size_t at, std::size_t until) {
    // word[at] = a, word[until] = b outside I, letters between inside I
    const int a = tr.word[at];
    const int b = tr.word[until];
    FactorizationTrace::Factor f{"beta_" + std::to_string(q), {GeneratorSystem::label2(a, b)}, gs.a(a, b)};
    for (std::size_t k = until; k-- > at + 1;) {
      f.labels.push_back(GeneratorSystem::label3(a, tr.word[k]));
      f.value = f.value * gs.a(a, tr.word[k], a);
    }
    return f;
  };

  const std::size_t s2 = tr.split_points.size();
  std::vector<FactorizationTrace::Factor> pieces;  // gamma_0, beta_1, gamma_2, ...
  std::size_t cursor = 0;
  for (std::size_t q = 0; q < s2; q += 2) {
    const std::size_t at = tr.split_points[q] - 1;
    const std::size_t until = tr.split_points[q + 1] - 1;
    pieces.push_back(make_gamma(q, cursor, at));
    pieces.push_back(make_beta(q + 1, at, until));
    cursor = until + 1;
  }
  pieces.push_back(make_gamma(s2, cursor, tr.word.size()));
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
    if (!it->labels.empty()) tr.factors.push_back(std::move(*it));
  return tr;
}

struct RelationEntry {
  std::string family;  // a..f, or "string" for the regular case
  std::string relation;
  std::vector<int> ranks;
  std::string row;  // symbol row feeding the expected value, if any
  long long expected = 0;
  long long observed = 0;
  bool pass = true;
};

struct RelationReport {
  std::vector<RelationEntry> entries;

  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  std::size_t count(const std::string& family) const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.family == family;
    return n;
  }
};

namespace detail {

inline std::string idx(std::initializer_list<int> v) {
  std::string out;
  for (int x : v) {
    if (!out.empty()) out += ",";
    out += std::to_string(x);
  }
  return out;
}

}  // namespace detail

/// Relations (a)-(f) among the distinguished generators, each checked as an
/// exact permutation identity or exact element/group order.
inline RelationReport verify_relations(const GeneratorSystem& gs, const DoubleSchlafli& symbol, const Group& group) {
  RelationReport rep;
  const int n = gs.rank;
  const RankSet I = gs.I;
  const RankSet bar = gs.deficient();
  const auto Iv = I.to_vector();
  const auto Bv = bar.to_vector();
  const bool regular = bar.empty();
  auto p = [&](int l) { return symbol.top.at(static_cast<std::size_t>(l - 1)); };
  auto q = [&](int l) { return symbol.bottom.at(static_cast<std::size_t>(l - 1)); };
  auto order_entry = [&](std::string fam, std::string rel, std::vector<int> ranks, std::string row, long long want,
                         long long got) {
    rep.entries.push_back({std::move(fam), std::move(rel), std::move(ranks), std::move(row), want, got, want == got});
  };
  auto eq_entry = [&](std::string fam, std::string rel, std::vector<int> ranks, const Automorphism& lhs,
                      const Automorphism& rhs) {
    bool ok = lhs == rhs;
    rep.entries.push_back({std::move(fam), std::move(rel), std::move(ranks), "", 1, ok ? 1 : 0, ok});
  };
  // period of the product of two reflections at ranks i < l, read from a symbol row
  auto period = [&](int i, int l, bool bottom) -> long long {
    if (l - i >= 2) return 2;
    return bottom ? q(l) : p(l);
  };

  // (a)
  for (int i : Iv)
    order_entry(regular ? "string" : "a", "rho_" + std::to_string(i) + "^2 = 1", {i}, "", 2,
                static_cast<long long>(gs.r(i).order()));
  for (int j : Bv)
    for (int i : Iv)
      order_entry("a", GeneratorSystem::label3(j, i) + "^2 = 1", {j, i}, "", 2, static_cast<long long>(gs.a(j, i, j).order()));
  for (int j : Bv)
    for (int k : Bv) {
      long long want = 1;
      std::string row;
      if (j != k) {
        want = std::abs(j - k) >= 2 ? 2 : p(std::max(j, k));
        row = std::abs(j - k) >= 2 ? "" : "top";
      }
      order_entry("a", "order " + GeneratorSystem::label2(j, k) + " = p_{" + detail::idx({j, k}) + "}", {j, k}, row, want,
                  static_cast<long long>(gs.a(j, k).order()));
      eq_entry("a", GeneratorSystem::label2(j, k) + " " + GeneratorSystem::label2(k, j) + " = 1", {j, k}, gs.a(j, k) * gs.a(k, j),
               group.identity());
    }

  // (b)
  for (int i : Iv)
    for (int l : Iv) {
      if (i >= l) continue;
      order_entry(regular ? "string" : "b", "order rho_" + std::to_string(i) + " rho_" + std::to_string(l), {i, l},
                  l - i >= 2 ? "" : "top", period(i, l, false), static_cast<long long>((gs.r(i) * gs.r(l)).order()));
      for (int j : Bv)
        order_entry("b", "order " + GeneratorSystem::label3(j, i) + " " + GeneratorSystem::label3(j, l), {j, i, l},
                    l - i >= 2 ? "" : "bottom", period(i, l, true),
                    static_cast<long long>((gs.a(j, i, j) * gs.a(j, l, j)).order()));
    }

  // (c)
  for (int j : Bv)
    for (int k : Bv)
      for (int i : Iv)
        eq_entry("c", GeneratorSystem::label2(j, k) + " " + GeneratorSystem::label3(j, i) + " " + GeneratorSystem::label2(k, j) +
                          " = " + GeneratorSystem::label3(k, i),
                 {j, k, i}, gs.a(j, k) * gs.a(j, i, j) * gs.a(k, j), gs.a(k, i, k));

  // (d)
  for (int i : Iv) {
    if (!bar.contains(i + 1)) continue;
    for (int j : Bv) {
      if (std::abs(j - i) < 2) continue;
      eq_entry("d", GeneratorSystem::label2(j, i + 1) + " rho_" + std::to_string(i) + " " + GeneratorSystem::label2(i + 1, j) +
                        " = " + GeneratorSystem::label3(i + 1, i),
               {j, i}, gs.a(j, i + 1) * gs.r(i) * gs.a(i + 1, j), gs.a(i + 1, i, i + 1));
    }
  }
  for (int i : Iv)
    for (int j = 1; j < n; ++j) {
      if (!bar.contains(j - 1) || !bar.contains(j)) continue;
      if (!(i < j - 2 || i > j + 1)) continue;
      eq_entry("d", GeneratorSystem::label2(j - 1, j) + " rho_" + std::to_string(i) + " = rho_" + std::to_string(i) + " " +
                        GeneratorSystem::label2(j - 1, j),
               {j, i}, gs.a(j - 1, j) * gs.r(i), gs.r(i) * gs.a(j - 1, j));
    }

  // (e)
  for (int j : Bv)
    for (int i : Iv)
      for (int l : Iv) {
        if (l - i < 2) continue;
        eq_entry("e", GeneratorSystem::label3(j, i) + " commutes with " + GeneratorSystem::label3(j, l), {j, i, l},
                 gs.a(j, i, j) * gs.a(j, l, j), gs.a(j, l, j) * gs.a(j, i, j));
      }

  // (f)
  for (int l = 1; l < n; ++l) {
    if (I.contains(l - 1) && !I.contains(l)) {
      auto sub = generate_subgroup(group, {gs.r(l - 1), gs.a(l, l - 1, l)});
      order_entry("f", "|<rho_" + std::to_string(l - 1) + ", " + GeneratorSystem::label3(l, l - 1) + ">| = p_" + std::to_string(l),
                  {l}, "top", p(l), static_cast<long long>(sub.order()));
    } else if (!I.contains(l - 1) && I.contains(l)) {
      auto sub = generate_subgroup(group, {gs.r(l), gs.a(l - 1, l, l - 1)});
      order_entry("f", "|<rho_" + std::to_string(l) + ", " + GeneratorSystem::label3(l - 1, l) + ">| = p_" + std::to_string(l),
                  {l}, "top", p(l), static_cast<long long>(sub.order()));
    }
  }
  return rep;
}

/// Generators at the j0-adjacent flag, built from the formulas and by direct
/// extraction; throws FormulaMismatch if the two disagree anywhere.
inline GeneratorSystem rebase(const GeneratorSystem& gs, const FlagGraph& g, const Group& group, int j0) {
  if (gs.I.contains(j0) || j0 < 0 || j0 >= gs.rank)
    throw PolytopeError(ErrorCode::PreconditionViolated, "rebase needs a rank outside I, got " + std::to_string(j0));
  GeneratorSystem formula;
  formula.base_flag = g.adjacent(gs.base_flag, j0);
  formula.rank = gs.rank;
  formula.I = gs.I;
  const auto Iv = gs.I.to_vector();
  const auto Bv = gs.deficient().to_vector();
  for (int i : Iv) formula.rho.emplace(i, gs.a(j0, i, j0));
  for (int j : Bv) {
    for (int k : Bv) formula.alpha2.emplace(std::make_pair(j, k), gs.a(k, j0) * gs.a(j0, j));
    for (int i : Iv) formula.alpha3.emplace(std::make_pair(j, i), gs.a(j, j0) * gs.r(i) * gs.a(j0, j));
  }
  GeneratorSystem direct = distinguished_generators(g, group, formula.base_flag, gs.I);
  auto lf = formula.labelled();
  auto ld = direct.labelled();
  for (std::size_t k = 0; k < lf.size(); ++k)
    if (lf[k].first != ld[k].first || lf[k].second != ld[k].second)
      throw PolytopeError(ErrorCode::FormulaMismatch, lf[k].first + " at the " + std::to_string(j0) + "-adjacent flag differs between routes");
  return formula;
}

inline GeneratorSystem rebase(const GeneratorSystem& gs, const Analysis& an, int j0) { return rebase(gs, an.graph, an.group, j0); }

}  // namespace polytwo
