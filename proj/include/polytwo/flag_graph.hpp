#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polytwo/error.hpp"
#include "polytwo/poset.hpp"
#include "polytwo/rank_set.hpp"

namespace polytwo {

using FlagIndex = std::uint32_t;

/// Proper faces of a flag, indexed by rank 0..n-1 (poset face indices).
struct Flag {
  std::vector<int> faces;

  friend auto operator<=>(const Flag&, const Flag&) = default;
};

/// All flags of a polytope in canonical order plus the n adjacency maps.
class FlagGraph {
 public:
  FlagGraph() = default;

  explicit FlagGraph(RankedPoset p) : poset_(std::move(p)), n_(poset_.rank()) {
    const int bot = poset_.bottom();
    const int top = poset_.top();
    if (bot < 0 || top < 0) throw PolytopeError(ErrorCode::MalformedInput, "poset lacks unique improper faces");
    enumerate(bot, top);
    const std::size_t count = size();
    adj_.assign(static_cast<std::size_t>(std::max(n_, 0)), std::vector<FlagIndex>(count));
    std::vector<int> buf(static_cast<std::size_t>(std::max(n_, 0)));
    for (std::size_t f = 0; f < count; ++f) {
      for (int i = 0; i < n_; ++i) {
        const int below = face(static_cast<FlagIndex>(f), i - 1);
        const int above = face(static_cast<FlagIndex>(f), i + 1);
        const int cur = face(static_cast<FlagIndex>(f), i);
        int other = -1;
        for (int h : poset_.upper_covers(below)) {
          if (h == cur) continue;
          const auto& ups = poset_.upper_covers(h);
          if (!std::binary_search(ups.begin(), ups.end(), above)) continue;
          if (other != -1) throw PolytopeError(ErrorCode::MalformedInput, "diamond condition fails; adjacency is not unique");
          other = h;
        }
        if (other == -1) throw PolytopeError(ErrorCode::MalformedInput, "diamond condition fails; no adjacent flag");
        auto src = faces_of(static_cast<FlagIndex>(f));
        std::copy(src.begin(), src.end(), buf.begin());
        buf[static_cast<std::size_t>(i)] = other;
        auto j = find(buf);
        if (!j) throw PolytopeError(ErrorCode::MalformedInput, "adjacent chain is not a flag");
        adj_[static_cast<std::size_t>(i)][f] = *j;
      }
    }
  }

  const RankedPoset& poset() const { return poset_; }
  int rank() const { return n_; }
  std::size_t size() const { return flag_count_; }

  std::span<const int> faces_of(FlagIndex f) const {
    const auto w = static_cast<std::size_t>(std::max(n_, 0));
    return {data_.data() + static_cast<std::size_t>(f) * w, w};
  }
  Flag flag(FlagIndex f) const {
    auto s = faces_of(f);
    return Flag{std::vector<int>(s.begin(), s.end())};
  }

  /// Face of rank r in flag f; r = -1 and r = n give the improper faces.
  int face(FlagIndex f, int r) const {
    if (r == -1) return poset_.bottom();
    if (r == n_) return poset_.top();
    if (r < -1 || r > n_) throw PolytopeError(ErrorCode::BadRank, "rank " + std::to_string(r) + " out of range");
    return faces_of(f)[static_cast<std::size_t>(r)];
  }
  bool contains_face(FlagIndex f, int face_idx) const {
    return face(f, poset_.rank_of(face_idx)) == face_idx;
  }

  FlagIndex adjacent(FlagIndex f, int i) const {
    if (i < 0 || i >= n_) throw PolytopeError(ErrorCode::BadLetter, "letter " + std::to_string(i) + " out of range");
    return adj_[static_cast<std::size_t>(i)][f];
  }
  const std::vector<FlagIndex>& adjacency(int i) const {
    if (i < 0 || i >= n_) throw PolytopeError(ErrorCode::BadLetter, "letter " + std::to_string(i) + " out of range");
    return adj_[static_cast<std::size_t>(i)];
  }

  std::optional<FlagIndex> find(std::span<const int> faces) const {
    const auto w = static_cast<std::size_t>(std::max(n_, 0));
    if (faces.size() != w) return std::nullopt;
    std::size_t lo = 0;
    std::size_t hi = size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      auto m = faces_of(static_cast<FlagIndex>(mid));
      if (std::lexicographical_compare(m.begin(), m.end(), faces.begin(), faces.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < size()) {
      auto m = faces_of(static_cast<FlagIndex>(lo));
      if (std::equal(m.begin(), m.end(), faces.begin(), faces.end())) return static_cast<FlagIndex>(lo);
    }
    return std::nullopt;
  }

  FlagIndex apply_word(FlagIndex start, const std::vector<int>& word) const {
    for (int letter : word)
      if (letter < 0 || letter >= n_)
        throw PolytopeError(ErrorCode::BadLetter, "letter " + std::to_string(letter) + " out of range 0.." + std::to_string(n_ - 1));
    FlagIndex f = start;
    for (int letter : word) f = adj_[static_cast<std::size_t>(letter)][f];
    return f;
  }

  /// Shortest word (letters tried in ascending order) avoiding `forbidden`.
  std::vector<int> connecting_word(FlagIndex from, FlagIndex to, RankSet forbidden = {}) const {
    if (from == to) return {};
    const std::size_t count = size();
    std::vector<std::int32_t> prev(count, -1);
    std::vector<std::int8_t> via(count, -1);
    std::deque<FlagIndex> queue{from};
    prev[from] = static_cast<std::int32_t>(from);
    while (!queue.empty()) {
      FlagIndex x = queue.front();
      queue.pop_front();
      for (int i = 0; i < n_; ++i) {
        if (forbidden.contains(i)) continue;
        FlagIndex y = adj_[static_cast<std::size_t>(i)][x];
        if (prev[y] != -1) continue;
        prev[y] = static_cast<std::int32_t>(x);
        via[y] = static_cast<std::int8_t>(i);
        if (y == to) {
          std::vector<int> word;
          for (FlagIndex z = to; z != from; z = static_cast<FlagIndex>(prev[z])) word.push_back(via[z]);
          std::reverse(word.begin(), word.end());
          return word;
        }
        queue.push_back(y);
      }
    }
    throw PolytopeError(ErrorCode::NoPath, "flags " + std::to_string(from) + " and " + std::to_string(to) +
                                               " are not connected avoiding " + forbidden.to_string());
  }

 private:
  void enumerate(int bot, int top) {
    std::vector<int> cur;
    // upper covers are sorted by index, and indices follow id order within a rank
    auto rec = [&](auto&& self, int at) -> void {
      for (int up : poset_.upper_covers(at)) {
        if (up == top) {
          if (static_cast<int>(cur.size()) == n_) {
            data_.insert(data_.end(), cur.begin(), cur.end());
            ++flag_count_;
          }
          continue;
        }
        cur.push_back(up);
        self(self, up);
        cur.pop_back();
      }
    };
    if (n_ <= 0) {
      flag_count_ = 1;
      return;
    }
    rec(rec, bot);
  }

  RankedPoset poset_;
  int n_ = -1;
  std::vector<int> data_;
  std::size_t flag_count_ = 0;
  std::vector<std::vector<FlagIndex>> adj_;
};

inline FlagGraph build_flag_graph(const RankedPoset& p) { return FlagGraph(p); }

}  // namespace polytwo
