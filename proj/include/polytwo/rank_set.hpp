#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "polytwo/error.hpp"

namespace polytwo {

/// A subset of the proper ranks N = {0, ..., n-1}, stored as a bitmask.
class RankSet {
 public:
  static constexpr int kMaxRank = 31;

  constexpr RankSet() = default;
  RankSet(std::initializer_list<int> ranks) {
    for (int r : ranks) insert(r);
  }

  static constexpr RankSet from_mask(std::uint32_t mask) {
    RankSet s;
    s.mask_ = mask;
    return s;
  }
  static RankSet all(int n) {
    if (n > 0) check(n - 1);
    return from_mask(n <= 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
  }
  /// {lo, lo+1, ..., hi}, clipped to [0, kMaxRank); empty when lo > hi.
  static RankSet interval(int lo, int hi) {
    RankSet s;
    for (int r = std::max(lo, 0); r <= hi && r < kMaxRank; ++r) s.insert(r);
    return s;
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool contains(int r) const {
    return r >= 0 && r < kMaxRank && ((mask_ >> r) & 1u) != 0;
  }
  void insert(int r) {
    check(r);
    mask_ |= (1u << r);
  }
  void erase(int r) {
    if (r >= 0 && r < kMaxRank) mask_ &= ~(1u << r);
  }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }

  RankSet complement(int n) const { return from_mask(all(n).mask_ & ~mask_); }
  constexpr bool subset_of(RankSet other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int r = 0; r < kMaxRank; ++r)
      if (contains(r)) out.push_back(r);
    return out;
  }

  /// "{0,1}" style rendering used in reports.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int r : to_vector()) {
      if (!first) out += ",";
      out += std::to_string(r);
      first = false;
    }
    return out + "}";
  }

  friend constexpr RankSet operator|(RankSet a, RankSet b) { return from_mask(a.mask_ | b.mask_); }
  friend constexpr RankSet operator&(RankSet a, RankSet b) { return from_mask(a.mask_ & b.mask_); }
  friend constexpr RankSet operator-(RankSet a, RankSet b) { return from_mask(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(RankSet a, RankSet b) = default;

 private:
  static void check(int r) {
    if (r >= kMaxRank) throw PolytopeError(ErrorCode::BadRank, "rank " + std::to_string(r) + " exceeds RankSet capacity");
    if (r < -1) throw PolytopeError(ErrorCode::BadRank, "negative rank " + std::to_string(r));
  }

  std::uint32_t mask_ = 0;
};

}  // namespace polytwo
