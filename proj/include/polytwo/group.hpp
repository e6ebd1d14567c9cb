#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polytwo/error.hpp"
#include "polytwo/flag_graph.hpp"

namespace polytwo {

/// A flag permutation. Composition follows the right action on flags:
/// (a * b)(f) = b(a(f)), i.e. apply a first.
class Automorphism {
 public:
  Automorphism() = default;
  explicit Automorphism(std::vector<FlagIndex> perm) : perm_(std::move(perm)) {}

  static Automorphism identity(std::size_t degree) {
    std::vector<FlagIndex> p(degree);
    std::iota(p.begin(), p.end(), FlagIndex{0});
    return Automorphism(std::move(p));
  }

  const std::vector<FlagIndex>& perm() const { return perm_; }
  std::size_t degree() const { return perm_.size(); }
  FlagIndex operator()(FlagIndex f) const { return perm_[f]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i)
      if (perm_[i] != i) return false;
    return true;
  }

  Automorphism inverse() const {
    std::vector<FlagIndex> inv(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = static_cast<FlagIndex>(i);
    return Automorphism(std::move(inv));
  }

  friend Automorphism operator*(const Automorphism& a, const Automorphism& b) {
    std::vector<FlagIndex> out(a.perm_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.perm_[a.perm_[i]];
    return Automorphism(std::move(out));
  }

  Automorphism pow(long long k) const {
    Automorphism base = k < 0 ? inverse() : *this;
    unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
    Automorphism acc = identity(degree());
    while (e) {
      if (e & 1u) acc = acc * base;
      base = base * base;
      e >>= 1u;
    }
    return acc;
  }

  std::size_t order() const {
    std::size_t result = 1;
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = perm_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism& a, const Automorphism& b) { return a.perm_ <=> b.perm_; }

 private:
  std::vector<FlagIndex> perm_;
};

/// Induced map on poset face indices.
inline std::vector<int> face_map(const FlagGraph& g, const Automorphism& a) {
  const RankedPoset& p = g.poset();
  std::vector<int> out(p.size(), -1);
  if (p.bottom() >= 0) out[static_cast<std::size_t>(p.bottom())] = p.bottom();
  if (p.top() >= 0) out[static_cast<std::size_t>(p.top())] = p.top();
  for (std::size_t f = 0; f < g.size(); ++f) {
    auto src = g.faces_of(static_cast<FlagIndex>(f));
    auto dst = g.faces_of(a(static_cast<FlagIndex>(f)));
    for (std::size_t r = 0; r < src.size(); ++r) out[static_cast<std::size_t>(src[r])] = dst[r];
  }
  return out;
}

namespace detail {

/// Colour-preserving map between flag graphs sending source to target, if any.
inline std::optional<std::vector<FlagIndex>> extend_between(const FlagGraph& from, const FlagGraph& to,
                                                             FlagIndex source, FlagIndex target) {
  if (from.rank() != to.rank() || from.size() != to.size()) return std::nullopt;
  constexpr FlagIndex kUnset = ~FlagIndex{0};
  std::vector<FlagIndex> img(from.size(), kUnset);
  std::vector<bool> hit(to.size(), false);
  img[source] = target;
  hit[target] = true;
  std::deque<FlagIndex> queue{source};
  while (!queue.empty()) {
    FlagIndex x = queue.front();
    queue.pop_front();
    for (int i = 0; i < from.rank(); ++i) {
      FlagIndex y = from.adjacency(i)[x];
      FlagIndex want = to.adjacency(i)[img[x]];
      if (img[y] == kUnset) {
        if (hit[want]) return std::nullopt;
        img[y] = want;
        hit[want] = true;
        queue.push_back(y);
      } else if (img[y] != want) {
        return std::nullopt;
      }
    }
  }
  for (FlagIndex v : img)
    if (v == kUnset) return std::nullopt;
  return img;
}

inline std::size_t group_cap() {
  if (const char* env = std::getenv("POLYTWO_GROUP_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

}  // namespace detail

inline std::optional<Automorphism> extend_flag_map(const FlagGraph& g, FlagIndex source, FlagIndex target) {
  auto img = detail::extend_between(g, g, source, target);
  if (!img) return std::nullopt;
  return Automorphism(std::move(*img));
}

/// A finite group of automorphisms held as an explicit element list. By free
/// action every element is identified by where it sends flag 0.
class Group {
 public:
  Group() = default;

  Group(std::size_t num_flags, std::vector<Automorphism> elements, std::vector<Automorphism> generators)
      : num_flags_(num_flags), elements_(std::move(elements)), generators_(std::move(generators)) {
    if (elements_.size() > detail::group_cap())
      throw PolytopeError(ErrorCode::GroupCapExceeded,
                          "group of order " + std::to_string(elements_.size()) + " exceeds cap " + std::to_string(detail::group_cap()));
    std::sort(elements_.begin(), elements_.end(), [](const Automorphism& a, const Automorphism& b) {
      return key(a) < key(b);
    });
    slot_.assign(num_flags_, -1);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      auto& s = slot_[key(elements_[i])];
      if (s != -1) throw PolytopeError(ErrorCode::MalformedInput, "two group elements agree on flag 0");
      s = static_cast<std::int32_t>(i);
    }
  }

  std::size_t order() const { return elements_.size(); }
  std::size_t num_flags() const { return num_flags_; }
  FlagIndex base_flag() const { return 0; }
  const std::vector<Automorphism>& elements() const { return elements_; }
  const std::vector<Automorphism>& generators() const { return generators_; }
  Automorphism identity() const { return Automorphism::identity(num_flags_); }

  std::optional<std::size_t> index_of(const Automorphism& a) const {
    if (a.degree() != num_flags_ || num_flags_ == 0) return std::nullopt;
    auto s = slot_[key(a)];
    if (s < 0 || elements_[static_cast<std::size_t>(s)] != a) return std::nullopt;
    return static_cast<std::size_t>(s);
  }
  bool contains(const Automorphism& a) const { return index_of(a).has_value(); }

  /// The element sending flag 0 to f, if one exists.
  const Automorphism* sending_base_to(FlagIndex f) const {
    auto s = slot_[f];
    return s < 0 ? nullptr : &elements_[static_cast<std::size_t>(s)];
  }
  /// The element sending `from` to `to`, if one exists.
  std::optional<Automorphism> sending(FlagIndex from, FlagIndex to) const {
    for (const auto& e : elements_)
      if (e(from) == to) return e;
    return std::nullopt;
  }

  static FlagIndex key(const Automorphism& a) { return a.perm().empty() ? 0 : a(0); }

 private:
  std::size_t num_flags_ = 0;
  std::vector<Automorphism> elements_;
  std::vector<Automorphism> generators_;
  std::vector<std::int32_t> slot_;
};

inline bool same_elements(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  for (const auto& e : a.elements())
    if (!b.contains(e)) return false;
  return true;
}

inline std::vector<Automorphism> intersect_elements(const Group& a, const Group& b) {
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& large = a.order() <= b.order() ? b : a;
  std::vector<Automorphism> out;
  for (const auto& e : small.elements())
    if (large.contains(e)) out.push_back(e);
  return out;
}

namespace detail {

inline std::vector<Automorphism> closure(std::size_t num_flags, const std::vector<Automorphism>& gens) {
  std::vector<Automorphism> elems{Automorphism::identity(num_flags)};
  std::vector<bool> seen(num_flags, false);
  if (num_flags == 0) return elems;
  seen[0] = true;
  const std::size_t cap = group_cap();
  for (std::size_t at = 0; at < elems.size(); ++at) {
    for (const auto& g : gens) {
      Automorphism x = elems[at] * g;
      FlagIndex k = Group::key(x);
      if (seen[k]) continue;
      seen[k] = true;
      elems.push_back(std::move(x));
      if (elems.size() > cap)
        throw PolytopeError(ErrorCode::GroupCapExceeded, "subgroup closure exceeds cap " + std::to_string(cap));
    }
  }
  return elems;
}

}  // namespace detail

/// Closure of gens inside parent.
inline Group generate_subgroup(const Group& parent, const std::vector<Automorphism>& gens) {
  for (const auto& g : gens)
    if (!parent.contains(g)) throw PolytopeError(ErrorCode::NotInParent, "generator is not an element of the parent group");
  return Group(parent.num_flags(), detail::closure(parent.num_flags(), gens), gens);
}

/// Every automorphism, found by extending flag 0 onto each flag.
inline Group automorphism_group(const FlagGraph& g) {
  std::vector<Automorphism> elems;
  const std::size_t cap = detail::group_cap();
  for (std::size_t t = 0; t < g.size(); ++t) {
    if (auto a = extend_flag_map(g, 0, static_cast<FlagIndex>(t))) {
      elems.push_back(std::move(*a));
      if (elems.size() > cap)
        throw PolytopeError(ErrorCode::GroupCapExceeded, "automorphism group exceeds cap " + std::to_string(cap));
    }
  }
  // greedy generating set: add the first element outside the current closure
  std::vector<Automorphism> gens;
  std::vector<bool> covered(g.size(), false);
  covered[0] = true;
  std::size_t covered_count = 1;
  for (const auto& e : elems) {
    if (covered_count == elems.size()) break;
    if (covered[Group::key(e)]) continue;
    gens.push_back(e);
    auto sub = detail::closure(g.size(), gens);
    for (const auto& s : sub) covered[Group::key(s)] = true;
    covered_count = sub.size();
  }
  return Group(g.size(), std::move(elems), std::move(gens));
}

struct OrbitPartition {
  std::vector<std::size_t> orbit_of;         // per item
  std::vector<std::vector<std::size_t>> orbits;  // items per orbit, sorted by least item

  std::size_t count() const { return orbits.size(); }
  bool same(std::size_t a, std::size_t b) const { return orbit_of[a] == orbit_of[b]; }
};

namespace detail {

inline OrbitPartition partition_from_maps(std::size_t items, const std::vector<std::vector<std::size_t>>& maps) {
  std::vector<std::size_t> parent(items);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& m : maps)
    for (std::size_t x = 0; x < items; ++x) {
      std::size_t a = root(x);
      std::size_t b = root(m[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  OrbitPartition out;
  out.orbit_of.assign(items, 0);
  std::vector<std::size_t> label(items, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < items; ++x) {
    std::size_t r = root(x);
    if (label[r] == static_cast<std::size_t>(-1)) {
      label[r] = out.orbits.size();
      out.orbits.emplace_back();
    }
    out.orbit_of[x] = label[r];
    out.orbits[label[r]].push_back(x);
  }
  return out;
}

}  // namespace detail

inline OrbitPartition flag_orbits(const Group& group) {
  std::vector<std::vector<std::size_t>> maps;
  for (const auto& gen : group.generators()) maps.emplace_back(gen.perm().begin(), gen.perm().end());
  return detail::partition_from_maps(group.num_flags(), maps);
}

/// Incident (i-face, j-face) pairs, sorted by face indices.
inline std::vector<std::pair<int, int>> incident_pairs(const RankedPoset& p, int i, int j) {
  if (i < -1 || j > p.rank() || i > j)
    throw PolytopeError(ErrorCode::BadRank, "need -1 <= i <= j <= n, got (" + std::to_string(i) + "," + std::to_string(j) + ")");
  std::vector<std::pair<int, int>> out;
  for (int a : p.faces_of_rank(i))
    for (int b : p.faces_of_rank(j))
      if (p.leq(a, b)) out.emplace_back(a, b);
  return out;
}

/// Orbits on faces of rank r; items are positions in faces_of_rank(r).
inline OrbitPartition face_orbits(const Group& group, const FlagGraph& g, int r) {
  const RankedPoset& p = g.poset();
  if (r < -1 || r > p.rank()) throw PolytopeError(ErrorCode::BadRank, "rank " + std::to_string(r) + " out of range");
  const auto& faces = p.faces_of_rank(r);
  std::vector<std::size_t> pos(p.size(), 0);
  for (std::size_t k = 0; k < faces.size(); ++k) pos[static_cast<std::size_t>(faces[k])] = k;
  std::vector<std::vector<std::size_t>> maps;
  for (const auto& gen : group.generators()) {
    auto fm = face_map(g, gen);
    std::vector<std::size_t> m(faces.size());
    for (std::size_t k = 0; k < faces.size(); ++k) m[k] = pos[static_cast<std::size_t>(fm[static_cast<std::size_t>(faces[k])])];
    maps.push_back(std::move(m));
  }
  return detail::partition_from_maps(faces.size(), maps);
}

/// Orbits on the sections G/F with rank F = i, rank G = j; items index incident_pairs(p, i, j).
inline OrbitPartition section_orbits(const Group& group, const FlagGraph& g, int i, int j) {
  const RankedPoset& p = g.poset();
  auto pairs = incident_pairs(p, i, j);
  std::vector<std::vector<std::size_t>> maps;
  for (const auto& gen : group.generators()) {
    auto fm = face_map(g, gen);
    std::vector<std::size_t> m(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      std::pair<int, int> img{fm[static_cast<std::size_t>(pairs[k].first)], fm[static_cast<std::size_t>(pairs[k].second)]};
      m[k] = static_cast<std::size_t>(std::lower_bound(pairs.begin(), pairs.end(), img) - pairs.begin());
    }
    maps.push_back(std::move(m));
  }
  return detail::partition_from_maps(pairs.size(), maps);
}

enum class ActionKind { Flags, Faces, Sections };

struct Action {
  ActionKind kind = ActionKind::Flags;
  int i = 0;  // rank for Faces, lower rank for Sections
  int j = 0;  // upper rank for Sections
};

inline OrbitPartition orbits(const Group& group, const FlagGraph& g, Action action) {
  switch (action.kind) {
    case ActionKind::Flags: return flag_orbits(group);
    case ActionKind::Faces: return face_orbits(group, g, action.i);
    case ActionKind::Sections: return section_orbits(group, g, action.i, action.j);
  }
  return flag_orbits(group);
}

/// The set left * H * right. Right cosets H*g use left = identity.
struct Coset {
  const Group* subgroup = nullptr;
  Automorphism left;
  Automorphism right;
  Automorphism left_inv;
  Automorphism right_inv;

  std::size_t size() const { return subgroup->order(); }

  bool contains(const Automorphism& x) const { return subgroup->contains(left_inv * x * right_inv); }

  std::vector<Automorphism> elements() const {
    std::vector<Automorphism> out;
    out.reserve(size());
    for (const auto& h : subgroup->elements()) out.push_back(left * h * right);
    return out;
  }

  /// Least element under the permutation order; identifies the coset.
  Automorphism representative() const {
    auto e = elements();
    return *std::min_element(e.begin(), e.end());
  }
};

inline Coset two_sided_coset(const Automorphism& left, const Group& h, const Automorphism& right) {
  return Coset{&h, left, right, left.inverse(), right.inverse()};
}
inline Coset right_coset(const Group& h, const Automorphism& g) { return two_sided_coset(h.identity(), h, g); }
inline Coset left_coset(const Automorphism& g, const Group& h) { return two_sided_coset(g, h, h.identity()); }

inline std::vector<Automorphism> coset_intersection(const Coset& a, const Coset& b) {
  const Coset& small = a.size() <= b.size() ? a : b;
  const Coset& large = a.size() <= b.size() ? b : a;
  std::vector<Automorphism> out;
  for (auto& x : small.elements())
    if (large.contains(x)) out.push_back(std::move(x));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool coset_intersects(const Coset& a, const Coset& b) {
  const Coset& small = a.size() <= b.size() ? a : b;
  const Coset& large = a.size() <= b.size() ? b : a;
  for (const auto& h : small.subgroup->elements())
    if (large.contains(small.left * h * small.right)) return true;
  return false;
}

}  // namespace polytwo
