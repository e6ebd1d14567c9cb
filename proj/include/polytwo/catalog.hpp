#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "polytwo/classifier.hpp"
#include "polytwo/error.hpp"
#include "polytwo/flag_graph.hpp"
#include "polytwo/isomorphism.hpp"
#include "polytwo/poset.hpp"

namespace polytwo {

namespace detail {

inline std::string num(int k, int width = 2) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%0*d", width, k);
  return buf;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PolytopeError(ErrorCode::BadParameter, what);
}

}  // namespace detail

inline RankedPoset make_polygon(int p) {
  detail::require(p >= 2, "polygon needs p >= 2");
  std::vector<ProperFace> f;
  for (int i = 0; i < p; ++i) f.push_back({"v" + detail::num(i), 0, {}});
  for (int i = 0; i < p; ++i) f.push_back({"e" + detail::num(i), 1, {"v" + detail::num(i), "v" + detail::num((i + 1) % p)}});
  return make_polytope(2, f);
}

/// Faces are proper nonempty subsets of {0..n}.
inline RankedPoset make_simplex(int n) {
  detail::require(n >= 1 && n <= 5, "simplex rank must be in 1..5");
  const int m = n + 1;
  auto name = [&](unsigned s) {
    std::string id = "s";
    for (int k = 0; k < m; ++k)
      if (s >> k & 1u) id += static_cast<char>('0' + k);
    return id;
  };
  std::vector<ProperFace> f;
  for (unsigned s = 1; s + 1 < (1u << m); ++s) {
    ProperFace pf{name(s), std::popcount(s) - 1, {}};
    if (pf.rank > 0)
      for (int k = 0; k < m; ++k)
        if (s >> k & 1u) pf.covers.push_back(name(s & ~(1u << k)));
    f.push_back(std::move(pf));
  }
  return make_polytope(n, f);
}

/// Faces are words over {0,1,x}; rank is the number of x.
inline RankedPoset make_cube(int n) {
  detail::require(n >= 1 && n <= 5, "cube rank must be in 1..5");
  std::vector<ProperFace> f;
  std::string w(static_cast<std::size_t>(n), '0');
  auto rec = [&](auto&& self, std::size_t at) -> void {
    if (at == w.size()) {
      const int r = static_cast<int>(std::count(w.begin(), w.end(), 'x'));
      if (r == n) return;
      ProperFace pf{"c" + w, r, {}};
      for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k] == 'x')
          for (char c : {'0', '1'}) {
            std::string u = w;
            u[k] = c;
            pf.covers.push_back("c" + u);
          }
      f.push_back(std::move(pf));
      return;
    }
    for (char c : {'0', '1', 'x'}) {
      w[at] = c;
      self(self, at + 1);
    }
  };
  rec(rec, 0);
  return make_polytope(n, f);
}

inline RankedPoset make_icosahedron() {
  // t, upper ring u0..u4, lower ring l0..l4, b; u_i meets l_i and l_{i+1}
  std::vector<std::string> v{"t"};
  for (int i = 0; i < 5; ++i) v.push_back("u" + std::to_string(i));
  for (int i = 0; i < 5; ++i) v.push_back("l" + std::to_string(i));
  v.push_back("b");
  auto u = [](int i) { return 1 + (i % 5); };
  auto l = [](int i) { return 6 + (i % 5); };
  std::vector<std::array<int, 3>> tri;
  for (int i = 0; i < 5; ++i) {
    tri.push_back({0, u(i), u(i + 1)});
    tri.push_back({u(i), u(i + 1), l(i + 1)});
    tri.push_back({u(i), l(i), l(i + 1)});
    tri.push_back({11, l(i), l(i + 1)});
  }
  auto edge = [&](int a, int b) {
    if (v[a] > v[b]) std::swap(a, b);
    return "e_" + v[a] + "_" + v[b];
  };
  std::vector<ProperFace> f;
  for (const auto& x : v) f.push_back({"v_" + x, 0, {}});
  std::vector<std::string> seen;
  for (std::size_t t = 0; t < tri.size(); ++t) {
    const auto& [a, b, c] = tri[t];
    ProperFace face{"f" + detail::num(static_cast<int>(t)), 2, {edge(a, b), edge(b, c), edge(a, c)}};
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{a, c}}) {
      std::string e = edge(x, y);
      if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
      seen.push_back(e);
      f.push_back({e, 1, {"v_" + v[x], "v_" + v[y]}});
    }
    f.push_back(std::move(face));
  }
  return make_polytope(3, f);
}

inline RankedPoset make_dodecahedron() { return dual(make_icosahedron()); }
inline RankedPoset make_octahedron() { return dual(make_cube(3)); }

/// Vertices are the edges of p, edges the incident (vertex, 2-face) pairs,
/// 2-faces the 2-faces and vertices of p.
inline RankedPoset medial(const RankedPoset& p) {
  if (p.rank() != 3) throw PolytopeError(ErrorCode::BadRank, "medial needs a polyhedron");
  std::vector<ProperFace> f;
  for (int e : p.faces_of_rank(1)) f.push_back({"e_" + p.id(e), 0, {}});
  std::vector<std::vector<std::string>> around(p.size());
  for (int v : p.faces_of_rank(0))
    for (int F : p.faces_of_rank(2)) {
      if (!p.leq(v, F)) continue;
      ProperFace pf{"p_" + p.id(v) + "_" + p.id(F), 1, {}};
      for (int e : p.faces_of_rank(1))
        if (p.leq(v, e) && p.leq(e, F)) pf.covers.push_back("e_" + p.id(e));
      around[static_cast<std::size_t>(v)].push_back(pf.id);
      around[static_cast<std::size_t>(F)].push_back(pf.id);
      f.push_back(std::move(pf));
    }
  for (int v : p.faces_of_rank(0)) f.push_back({"c_" + p.id(v), 2, around[static_cast<std::size_t>(v)]});
  for (int F : p.faces_of_rank(2)) f.push_back({"f_" + p.id(F), 2, around[static_cast<std::size_t>(F)]});
  return make_polytope(3, f);
}

namespace detail {

inline RankedPoset from_cycles(const std::vector<std::string>& verts, const std::vector<std::vector<int>>& cycles) {
  std::vector<ProperFace> f;
  for (const auto& v : verts) f.push_back({v, 0, {}});
  std::vector<std::string> edges;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    ProperFace face{"f" + num(static_cast<int>(c)), 2, {}};
    const auto& cyc = cycles[c];
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      std::string a = verts[static_cast<std::size_t>(cyc[k])];
      std::string b = verts[static_cast<std::size_t>(cyc[(k + 1) % cyc.size()])];
      if (a > b) std::swap(a, b);
      std::string e = "e_" + a + "_" + b;
      face.covers.push_back(e);
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
        edges.push_back(e);
        f.push_back({e, 1, {a, b}});
      }
    }
    f.push_back(std::move(face));
  }
  return make_polytope(3, f);
}

}  // namespace detail

/// Antipodal quotient of the cube.
inline RankedPoset make_hemi_cube() {
  return detail::from_cycles({"a", "b", "c", "d"}, {{0, 1, 3, 2}, {0, 1, 2, 3}, {0, 2, 1, 3}});
}

/// Antipodal quotient of the dodecahedron, on the Petersen graph.
inline RankedPoset make_hemi_dodecahedron() {
  std::vector<std::string> v;
  for (int i = 0; i < 10; ++i) v.push_back("v" + std::to_string(i));
  std::vector<std::vector<int>> cyc{{0, 1, 2, 3, 4}};
  for (int i = 0; i < 5; ++i) cyc.push_back({i, (i + 1) % 5, 5 + (i + 1) % 5, 5 + (i + 3) % 5, 5 + i});
  return detail::from_cycles(v, cyc);
}

/// {4,4} on Z^2 modulo the lattice with basis (a,0), (b,c).
inline RankedPoset torus_44_lattice(int a, int b, int c) {
  detail::require(a >= 1 && c >= 1 && b >= 0 && b < a, "lattice basis must be in Hermite normal form");
  auto reduce = [&](int x, int y) {
    const int q = y >= 0 ? y / c : -((-y + c - 1) / c);
    x -= q * b;
    y -= q * c;
    x %= a;
    if (x < 0) x += a;
    return std::pair{x, y};
  };
  auto tag = [&](char k, int x, int y) {
    auto [rx, ry] = reduce(x, y);
    return std::string(1, k) + detail::num(rx) + "_" + detail::num(ry);
  };
  std::vector<ProperFace> f;
  for (int y = 0; y < c; ++y)
    for (int x = 0; x < a; ++x) {
      f.push_back({tag('v', x, y), 0, {}});
      f.push_back({tag('h', x, y), 1, {tag('v', x, y), tag('v', x + 1, y)}});
      f.push_back({tag('w', x, y), 1, {tag('v', x, y), tag('v', x, y + 1)}});
      f.push_back({tag('s', x, y), 2, {tag('h', x, y), tag('w', x, y), tag('h', x, y + 1), tag('w', x + 1, y)}});
    }
  RankedPoset p;
  try {
    p = make_polytope(3, f);
  } catch (const PolytopeError& e) {
    throw PolytopeError(ErrorCode::DegenerateQuotient, e.what());
  }
  auto rep = validate_polytope(p);
  if (!rep.ok()) throw PolytopeError(ErrorCode::DegenerateQuotient, detail::validation_summary(rep));
  return p;
}

/// Polytope whose i-faces are the orbits of the flags under the involutions
/// other than r[i], ordered by sharing a flag. Throws MalformedInput if the
/// result is not a polytope.
inline RankedPoset from_involutions(const std::vector<std::vector<FlagIndex>>& r) {
  const int n = static_cast<int>(r.size());
  const std::size_t flags = n > 0 ? r[0].size() : 0;
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n), std::vector<int>(flags, -1));
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    auto& lab = label[static_cast<std::size_t>(i)];
    for (std::size_t f = 0; f < flags; ++f) {
      if (lab[f] >= 0) continue;
      const int k = count[static_cast<std::size_t>(i)]++;
      std::vector<std::size_t> stack{f};
      lab[f] = k;
      while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          const std::size_t y = r[static_cast<std::size_t>(j)][x];
          if (lab[y] < 0) lab[y] = k, stack.push_back(y);
        }
      }
    }
  }
  auto name = [](int i, int k) { return "r" + std::to_string(i) + "_" + detail::num(k, 3); };
  std::vector<std::vector<std::vector<std::string>>> below(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) below[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(count[static_cast<std::size_t>(i)]));
  for (std::size_t f = 0; f < flags; ++f)
    for (int i = 1; i < n; ++i) {
      auto& cov = below[static_cast<std::size_t>(i)][static_cast<std::size_t>(label[static_cast<std::size_t>(i)][f])];
      std::string lo = name(i - 1, label[static_cast<std::size_t>(i - 1)][f]);
      if (std::find(cov.begin(), cov.end(), lo) == cov.end()) cov.push_back(std::move(lo));
    }
  std::vector<ProperFace> faces;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < count[static_cast<std::size_t>(i)]; ++k)
      faces.push_back({name(i, k), i, below[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]});
  auto p = make_polytope(n, faces);
  auto rep = validate_polytope(p);
  if (!rep.ok()) throw PolytopeError(ErrorCode::MalformedInput, "not a polytope: " + detail::validation_summary(rep));
  return p;
}

/// Petrie dual of a polyhedron: the 0-adjacency becomes r0 r2.
inline RankedPoset petrial(const RankedPoset& p) {
  if (p.rank() != 3) throw PolytopeError(ErrorCode::BadRank, "petrial needs a polyhedron");
  FlagGraph g(p);
  std::vector<std::vector<FlagIndex>> r(3, std::vector<FlagIndex>(g.size()));
  for (std::size_t f = 0; f < g.size(); ++f) {
    const auto x = static_cast<FlagIndex>(f);
    r[0][f] = g.adjacent(g.adjacent(x, 0), 2);
    r[1][f] = g.adjacent(x, 1);
    r[2][f] = g.adjacent(x, 2);
  }
  return from_involutions(r);
}

struct Lattice {
  int a = 0, b = 0, c = 0;
};

/// Hermite normal form of the lattice spanned by (b,c) and (-c,b).
inline Lattice square_lattice(int b, int c) {
  detail::require(b != 0 || c != 0, "lattice has infinite index");
  // s*c + t*b = g
  auto ext = [](auto&& self, long x, long y) -> std::array<long, 3> {
    if (y == 0) return {x, 1, 0};
    auto [g, s, t] = self(self, y, x % y);
    return {g, t, s - (x / y) * t};
  };
  auto [g, s, t] = ext(ext, c, b);
  if (g < 0) g = -g, s = -s, t = -t;
  const long a = (static_cast<long>(b) * b + static_cast<long>(c) * c) / g;
  long bb = (s * b - t * c) % a;
  if (bb < 0) bb += a;
  return {static_cast<int>(a), static_cast<int>(bb), static_cast<int>(g)};
}

inline RankedPoset torus_44(int b, int c) {
  auto l = square_lattice(b, c);
  return torus_44_lattice(l.a, l.b, l.c);
}

/// Recorded expectations for a catalog entry; unset fields are not checked.
struct Expected {
  std::optional<std::size_t> orbits;
  std::optional<std::string> class_name;
  std::optional<std::string> symbol;  // normalized
  std::optional<bool> chiral;
  std::optional<std::vector<std::size_t>> counts;  // ranks 0..n-1
};

struct CatalogEntry {
  std::string name;
  std::function<RankedPoset()> builder;
  Expected expected;
};

struct LatticeHit {
  Lattice lattice;
  std::size_t orbits = 0;
  std::string class_name;
};

struct LatticeSearch {
  std::size_t lattices = 0;
  std::size_t degenerate = 0;
  std::vector<LatticeHit> hits;  // one per isomorphism type with the wanted class
};

/// Every {4,4} quotient by an HNF lattice of index at most max_index, keeping
/// two-orbit ones of class I, one per isomorphism type.
inline LatticeSearch search_torus_quotients(int max_index, RankSet I) {
  LatticeSearch out;
  std::vector<RankedPoset> kept;
  for (int idx = 1; idx <= max_index; ++idx)
    for (int c = 1; c <= idx; ++c) {
      if (idx % c) continue;
      const int a = idx / c;
      for (int b = 0; b < a; ++b) {
        ++out.lattices;
        RankedPoset p;
        try {
          p = torus_44_lattice(a, b, c);
        } catch (const PolytopeError&) {
          ++out.degenerate;
          continue;
        }
        auto an = analyze(p, false);
        if (!an.profile.two_orbit() || *an.profile.class_type_set != I) continue;
        bool dup = false;
        for (const auto& q : kept)
          if (is_isomorphic(p, q)) dup = true;
        if (dup) continue;
        kept.push_back(p);
        out.hits.push_back({{a, b, c}, an.profile.orbit_count, an.profile.class_name()});
      }
    }
  return out;
}

inline constexpr int kSearchIndex = 25;

namespace detail {

inline Expected expect(std::size_t orbits, std::string cls, std::optional<std::string> sym, std::optional<bool> chiral,
                       std::vector<std::size_t> counts) {
  return {orbits, std::move(cls), std::move(sym), chiral, std::move(counts)};
}

inline const LatticeSearch& rd2_search() {
  static const LatticeSearch s = search_torus_quotients(kSearchIndex, RankSet{1});
  return s;
}

}  // namespace detail

/// Named entries; the lattice search runs on first use.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    using detail::expect;
    std::vector<CatalogEntry> v;
    for (int p = 3; p <= 6; ++p)
      v.push_back({"polygon" + std::to_string(p), [p] { return make_polygon(p); },
                   expect(1, "regular", std::nullopt, false, {std::size_t(p), std::size_t(p)})});
    v.push_back({"simplex3", [] { return make_simplex(3); }, expect(1, "regular", "(3,3)/(3,3)", false, {4, 6, 4})});
    v.push_back({"simplex4", [] { return make_simplex(4); }, expect(1, "regular", std::nullopt, false, {5, 10, 10, 5})});
    v.push_back({"cube", [] { return make_cube(3); }, expect(1, "regular", "(4,3)/(4,3)", false, {8, 12, 6})});
    v.push_back({"cube4", [] { return make_cube(4); }, expect(1, "regular", std::nullopt, false, {16, 32, 24, 8})});
    v.push_back({"octahedron", make_octahedron, expect(1, "regular", "(3,4)/(3,4)", false, {6, 12, 8})});
    v.push_back({"icosahedron", make_icosahedron, expect(1, "regular", "(3,5)/(3,5)", false, {12, 30, 20})});
    v.push_back({"dodecahedron", make_dodecahedron, expect(1, "regular", "(5,3)/(5,3)", false, {20, 30, 12})});
    v.push_back({"hemicube", make_hemi_cube, expect(1, "regular", "(4,3)/(4,3)", false, {4, 6, 3})});
    v.push_back({"hemidodecahedron", make_hemi_dodecahedron, expect(1, "regular", "(5,3)/(5,3)", false, {10, 15, 6})});
    v.push_back({"cuboctahedron", [] { return medial(make_cube(3)); },
                 expect(2, "2_{0,1}", "(3,4)/(4,4)", false, {12, 24, 14})});
    v.push_back({"icosidodecahedron", [] { return medial(make_dodecahedron()); },
                 expect(2, "2_{0,1}", "(3,4)/(5,4)", false, {30, 60, 32})});
    v.push_back({"hemicuboctahedron", [] { return medial(make_hemi_cube()); },
                 expect(2, "2_{0,1}", std::nullopt, false, {6, 12, 7})});
    v.push_back({"hemiicosidodecahedron", [] { return medial(make_hemi_dodecahedron()); },
                 expect(2, "2_{0,1}", std::nullopt, false, {15, 30, 16})});
    v.push_back({"rhombic_dodecahedron", [] { return dual(medial(make_cube(3))); },
                 expect(2, "2_{1,2}", "(4,3)/(4,4)", false, {14, 24, 12})});
    v.push_back({"rhombic_triacontahedron", [] { return dual(medial(make_dodecahedron())); },
                 expect(2, "2_{1,2}", "(4,3)/(4,5)", false, {32, 60, 30})});
    v.push_back({"torus44_2_1", [] { return torus_44(2, 1); }, expect(2, "2_{}", "(4,4)/(4,4)", true, {5, 10, 5})});
    v.push_back({"torus44_3_1", [] { return torus_44(3, 1); }, expect(2, "2_{}", "(4,4)/(4,4)", true, {10, 20, 10})});
    v.push_back({"torus44_3_0", [] { return torus_44(3, 0); }, expect(1, "regular", "(4,4)/(4,4)", false, {9, 18, 9})});
    v.push_back({"torus44_rect_3_2", [] { return torus_44_lattice(3, 0, 2); },
                 expect(2, "2_{0,2}", "(4,4)/(4,4)", false, {6, 12, 6})});
    v.push_back({"petrial_torus44_3_1", [] { return petrial(torus_44(3, 1)); },
                 expect(2, "2_{0}", std::nullopt, false, {10, 20, 4})});
    v.push_back({"petrial_torus44_3_1_dual", [] { return dual(petrial(torus_44(3, 1))); },
                 expect(2, "2_{2}", std::nullopt, false, {4, 20, 10})});
    try {
      torus_44(2, 0);
      v.push_back({"torus44_2_0", [] { return torus_44(2, 0); }, expect(1, "regular", "(4,4)/(4,4)", false, {4, 8, 4})});
    } catch (const PolytopeError&) {
    }
    for (const auto& hit : detail::rd2_search().hits) {
      const Lattice l = hit.lattice;
      v.push_back({"torus44_lattice_" + std::to_string(l.a) + "_" + std::to_string(l.b) + "_" + std::to_string(l.c),
                   [l] { return torus_44_lattice(l.a, l.b, l.c); },
                   expect(2, "2_{1}", "(4,4)/(4,4)", false,
                          {std::size_t(l.a * l.c), std::size_t(2 * l.a * l.c), std::size_t(l.a * l.c)})});
    }
    return v;
  }();
  return entries;
}

inline const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

/// Mismatches between a profile and the recorded expectations.
inline std::vector<std::string> expectation_mismatches(const Expected& ex, const RankedPoset& p, const ClassProfile& cp) {
  std::vector<std::string> out;
  if (ex.orbits && *ex.orbits != cp.orbit_count) out.push_back("orbits " + std::to_string(cp.orbit_count));
  if (ex.class_name && *ex.class_name != cp.class_name()) out.push_back("class " + cp.class_name());
  if (ex.symbol && (!cp.symbol || cp.symbol->normalized().to_string() != *ex.symbol))
    out.push_back("symbol " + (cp.symbol ? cp.symbol->normalized().to_string() : std::string("none")));
  if (ex.chiral && *ex.chiral != cp.chiral) out.push_back(std::string("chiral ") + (cp.chiral ? "true" : "false"));
  if (ex.counts) {
    auto fc = p.face_counts();
    std::vector<std::size_t> proper(fc.begin() + 1, fc.end() - 1);
    if (proper != *ex.counts) out.push_back("face counts");
  }
  return out;
}

}  // namespace polytwo
