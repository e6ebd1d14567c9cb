#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polytwo/error.hpp"

namespace polytwo {

inline constexpr std::string_view kBottomId = "BOT";
inline constexpr std::string_view kTopId = "TOP";

struct Face {
  std::string id;
  int rank = 0;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Ranked poset given by its cover relation. Faces are kept sorted by
/// (rank, id); a face's position in that order is its index everywhere.
class RankedPoset {
 public:
  using Cover = std::pair<std::string, std::string>;  // (upper, lower)

  RankedPoset() = default;

  RankedPoset(int n, std::vector<Face> faces, const std::vector<Cover>& covers) : n_(n) {
    if (n < -1) throw PolytopeError(ErrorCode::MalformedInput, "rank must be at least -1");
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
      return a.rank != b.rank ? a.rank < b.rank : a.id < b.id;
    });
    faces_ = std::move(faces);
    by_rank_.assign(static_cast<std::size_t>(n + 2), {});
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      const Face& f = faces_[i];
      if (f.rank < -1 || f.rank > n)
        throw PolytopeError(ErrorCode::MalformedInput,
                            "face " + f.id + " has rank " + std::to_string(f.rank) + " outside -1.." + std::to_string(n));
      if (!index_.emplace(f.id, static_cast<int>(i)).second)
        throw PolytopeError(ErrorCode::MalformedInput, "duplicate face id " + f.id);
      by_rank_[static_cast<std::size_t>(f.rank + 1)].push_back(static_cast<int>(i));
    }
    lower_.assign(faces_.size(), {});
    upper_.assign(faces_.size(), {});
    for (const auto& [hi, lo] : covers) {
      auto a = find(hi);
      auto b = find(lo);
      if (!a || !b)
        throw PolytopeError(ErrorCode::MalformedInput, "cover " + hi + " > " + lo + " references an unknown id");
      if (faces_[*a].rank != faces_[*b].rank + 1)
        throw PolytopeError(ErrorCode::MalformedInput, "cover " + hi + " > " + lo + " does not step down exactly one rank");
      lower_[*a].push_back(*b);
      upper_[*b].push_back(*a);
    }
    for (auto& v : lower_) dedupe(v);
    for (auto& v : upper_) dedupe(v);
    build_closure();
  }

  int rank() const { return n_; }
  std::size_t size() const { return faces_.size(); }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int idx) const { return faces_.at(static_cast<std::size_t>(idx)); }
  const std::string& id(int idx) const { return face(idx).id; }
  int rank_of(int idx) const { return face(idx).rank; }

  std::optional<int> find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int index_of(std::string_view id) const {
    auto f = find(id);
    if (!f) throw PolytopeError(ErrorCode::UnknownFaceId, "no face with id " + std::string(id));
    return *f;
  }

  const std::vector<int>& lower_covers(int idx) const { return lower_.at(static_cast<std::size_t>(idx)); }
  const std::vector<int>& upper_covers(int idx) const { return upper_.at(static_cast<std::size_t>(idx)); }

  const std::vector<int>& faces_of_rank(int r) const {
    if (r < -1 || r > n_) throw PolytopeError(ErrorCode::BadRank, "rank " + std::to_string(r) + " out of range");
    return by_rank_[static_cast<std::size_t>(r + 1)];
  }

  /// Face counts for ranks -1..n.
  std::vector<std::size_t> face_counts() const {
    std::vector<std::size_t> out;
    for (const auto& v : by_rank_) out.push_back(v.size());
    return out;
  }

  bool leq(int a, int b) const {
    const auto& row = below_[static_cast<std::size_t>(b)];
    return (row[static_cast<std::size_t>(a) / 64] >> (static_cast<std::size_t>(a) % 64)) & 1u;
  }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// Unique face of rank -1 (resp. n), or -1 if there is not exactly one.
  int bottom() const { return unique_of_rank(-1); }
  int top() const { return unique_of_rank(n_); }

  std::vector<Cover> cover_pairs() const {
    std::vector<Cover> out;
    for (std::size_t i = 0; i < faces_.size(); ++i)
      for (int lo : lower_[i]) out.emplace_back(faces_[i].id, faces_[static_cast<std::size_t>(lo)].id);
    return out;
  }

 private:
  static void dedupe(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  int unique_of_rank(int r) const {
    if (r < -1 || r > n_) return -1;
    const auto& v = by_rank_[static_cast<std::size_t>(r + 1)];
    return v.size() == 1 ? v.front() : -1;
  }

  void build_closure() {
    const std::size_t words = (faces_.size() + 63) / 64;
    below_.assign(faces_.size(), std::vector<std::uint64_t>(words, 0));
    // faces_ is rank-sorted, so lower covers are always finished first
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      below_[i][i / 64] |= std::uint64_t{1} << (i % 64);
      for (int lo : lower_[i])
        for (std::size_t w = 0; w < words; ++w) below_[i][w] |= below_[static_cast<std::size_t>(lo)][w];
    }
  }

  int n_ = -1;
  std::vector<Face> faces_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> by_rank_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
  std::vector<std::vector<std::uint64_t>> below_;
};

/// A proper face together with the ids of the faces it covers.
struct ProperFace {
  std::string id;
  int rank = 0;
  std::vector<std::string> covers;
};

inline bool is_reserved_id(std::string_view id) { return id == kBottomId || id == kTopId; }

/// Adds BOT below every vertex and TOP above every facet.
inline RankedPoset make_polytope(int n, const std::vector<ProperFace>& proper) {
  std::vector<Face> faces;
  std::vector<RankedPoset::Cover> covers;
  faces.push_back({std::string(kBottomId), -1});
  if (n >= 0) faces.push_back({std::string(kTopId), n});
  for (const auto& f : proper) {
    if (is_reserved_id(f.id)) throw PolytopeError(ErrorCode::MalformedInput, "id " + f.id + " is reserved");
    if (f.rank < 0 || f.rank >= n)
      throw PolytopeError(ErrorCode::MalformedInput, "proper face " + f.id + " has rank " + std::to_string(f.rank));
    faces.push_back({f.id, f.rank});
    if (f.rank == 0) covers.emplace_back(f.id, std::string(kBottomId));
    if (f.rank == n - 1) covers.emplace_back(std::string(kTopId), f.id);
    for (const auto& c : f.covers) covers.emplace_back(f.id, c);
  }
  if (n == 0) covers.emplace_back(std::string(kTopId), std::string(kBottomId));
  return RankedPoset(n, std::move(faces), covers);
}

/// Proper faces with their lower covers, minus the implicit BOT covers.
inline std::vector<ProperFace> proper_faces(const RankedPoset& p) {
  std::vector<ProperFace> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Face& f = p.faces()[i];
    if (f.rank < 0 || f.rank >= p.rank()) continue;
    ProperFace pf{f.id, f.rank, {}};
    if (f.rank > 0)
      for (int lo : p.lower_covers(static_cast<int>(i))) pf.covers.push_back(p.id(lo));
    out.push_back(std::move(pf));
  }
  return out;
}

struct AxiomResult {
  bool pass = true;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // first few witnesses

  void fail(std::string message) {
    pass = false;
    ++failure_count;
    if (failures.size() < 16) failures.push_back(std::move(message));
  }
};

struct ValidationReport {
  AxiomResult p1;  // unique least and greatest face
  AxiomResult p2;  // every flag has n+2 faces
  AxiomResult p3;  // diamond condition
  AxiomResult p4;  // strong flag-connectedness

  bool ok() const { return p1.pass && p2.pass && p3.pass && p4.pass; }
};

namespace detail {

/// Maximal chains strictly between lo and hi (interior faces only).
inline std::vector<std::vector<int>> interior_chains(const RankedPoset& p, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int at) -> void {
    for (int up : p.upper_covers(at)) {
      if (up == hi) {
        out.push_back(cur);
        continue;
      }
      if (!p.leq(up, hi)) continue;
      cur.push_back(up);
      self(self, up);
      cur.pop_back();
    }
  };
  if (lo == hi) {
    out.push_back({});
    return out;
  }
  rec(rec, lo);
  return out;
}

inline bool chains_connected(const RankedPoset& p, int lo, int hi) {
  auto chains = interior_chains(p, lo, hi);
  if (chains.size() <= 1) return true;
  std::map<std::vector<int>, std::size_t> at;
  for (std::size_t i = 0; i < chains.size(); ++i) at.emplace(chains[i], i);
  std::vector<std::size_t> parent(chains.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < chains.size(); ++c) {
    auto chain = chains[c];
    for (std::size_t k = 0; k < chain.size(); ++k) {
      int below = k == 0 ? lo : chain[k - 1];
      int above = k + 1 == chain.size() ? hi : chain[k + 1];
      const int keep = chain[k];
      for (int h : p.upper_covers(below)) {
        if (h == keep) continue;
        const auto& ups = p.upper_covers(h);
        if (!std::binary_search(ups.begin(), ups.end(), above)) continue;
        chain[k] = h;
        auto it = at.find(chain);
        if (it != at.end()) parent[root(c)] = root(it->second);
      }
      chain[k] = keep;
    }
  }
  const std::size_t r0 = root(0);
  for (std::size_t c = 1; c < chains.size(); ++c)
    if (root(c) != r0) return false;
  return true;
}

}  // namespace detail

inline ValidationReport validate_polytope(const RankedPoset& p) {
  ValidationReport rep;
  const int n = p.rank();
  const int bot = p.bottom();
  const int top = p.top();

  if (bot < 0) rep.p1.fail("expected exactly one face of rank -1");
  if (top < 0) rep.p1.fail("expected exactly one face of rank " + std::to_string(n));
  if (bot >= 0 && top >= 0) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      int f = static_cast<int>(i);
      if (!p.leq(bot, f)) rep.p1.fail(p.id(f) + " is not above the least face");
      if (!p.leq(f, top)) rep.p1.fail(p.id(f) + " is not below the greatest face");
    }
  }

  for (std::size_t i = 0; i < p.size(); ++i) {
    int f = static_cast<int>(i);
    int r = p.rank_of(f);
    if (r > -1 && p.lower_covers(f).empty()) rep.p2.fail(p.id(f) + " is minimal but has rank " + std::to_string(r));
    if (r < n && p.upper_covers(f).empty()) rep.p2.fail(p.id(f) + " is maximal but has rank " + std::to_string(r));
  }

  for (int r = -1; r + 2 <= n; ++r) {
    for (int lo : p.faces_of_rank(r)) {
      // every face two ranks up that lies above lo
      std::set<int> tops;
      for (int mid : p.upper_covers(lo))
        for (int hi : p.upper_covers(mid)) tops.insert(hi);
      for (int hi : tops) {
        int between = 0;
        for (int mid : p.upper_covers(lo)) {
          const auto& ups = p.upper_covers(mid);
          if (std::binary_search(ups.begin(), ups.end(), hi)) ++between;
        }
        if (between != 2)
          rep.p3.fail("section " + p.id(hi) + "/" + p.id(lo) + " has " + std::to_string(between) + " middle faces");
      }
    }
  }

  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      int lo = static_cast<int>(a);
      int hi = static_cast<int>(b);
      if (p.rank_of(hi) - p.rank_of(lo) < 3 || !p.leq(lo, hi)) continue;
      if (!detail::chains_connected(p, lo, hi))
        rep.p4.fail("flag graph of section " + p.id(hi) + "/" + p.id(lo) + " is disconnected");
    }
  }
  return rep;
}

struct SectionHandle {
  const RankedPoset* parent = nullptr;
  int bottom = -1;
  int top = -1;
};

/// The section top/bottom, re-ranked so bottom has rank -1. Its improper
/// faces are renamed BOT and TOP.
inline RankedPoset section(const RankedPoset& p, int bottom, int top) {
  if (!p.leq(bottom, top))
    throw PolytopeError(ErrorCode::NotComparable, p.id(bottom) + " is not below " + p.id(top));
  const int shift = p.rank_of(bottom) + 1;
  const int n = p.rank_of(top) - shift;
  auto rename = [&](int f) -> std::string {
    if (f == bottom) return std::string(kBottomId);
    if (f == top) return std::string(kTopId);
    return p.id(f);
  };
  std::vector<Face> faces;
  std::vector<RankedPoset::Cover> covers;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int f = static_cast<int>(i);
    if (!p.leq(bottom, f) || !p.leq(f, top)) continue;
    faces.push_back({rename(f), p.rank_of(f) - shift});
    if (f == bottom) continue;
    for (int lo : p.lower_covers(f))
      if (p.leq(bottom, lo)) covers.emplace_back(rename(f), rename(lo));
  }
  return RankedPoset(n, std::move(faces), covers);
}

inline RankedPoset section(const SectionHandle& h) { return section(*h.parent, h.bottom, h.top); }

/// Order-reversed poset; rank r becomes n-1-r.
inline RankedPoset dual(const RankedPoset& p) {
  const int n = p.rank();
  const int bot = p.bottom();
  const int top = p.top();
  auto rename = [&](int f) -> std::string {
    if (f == top) return std::string(kBottomId);
    if (f == bot) return std::string(kTopId);
    return p.id(f);
  };
  std::vector<Face> faces;
  std::vector<RankedPoset::Cover> covers;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int f = static_cast<int>(i);
    faces.push_back({rename(f), n - 1 - p.rank_of(f)});
    for (int lo : p.lower_covers(f)) covers.emplace_back(rename(lo), rename(f));
  }
  return RankedPoset(n, std::move(faces), covers);
}

}  // namespace polytwo
