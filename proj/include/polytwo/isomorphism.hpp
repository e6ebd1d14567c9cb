#pragma once

#include <vector>

#include "polytwo/flag_graph.hpp"
#include "polytwo/group.hpp"
#include "polytwo/poset.hpp"

namespace polytwo {

namespace detail {

/// Checks that a flag correspondence induces a rank- and cover-preserving bijection on faces.
inline bool induces_poset_iso(const FlagGraph& ga, const FlagGraph& gb, const std::vector<FlagIndex>& img) {
  const RankedPoset& a = ga.poset();
  const RankedPoset& b = gb.poset();
  std::vector<int> fmap(a.size(), -1);
  fmap[static_cast<std::size_t>(a.bottom())] = b.bottom();
  fmap[static_cast<std::size_t>(a.top())] = b.top();
  for (std::size_t f = 0; f < ga.size(); ++f) {
    auto src = ga.faces_of(static_cast<FlagIndex>(f));
    auto dst = gb.faces_of(img[f]);
    for (std::size_t r = 0; r < src.size(); ++r) {
      int& slot = fmap[static_cast<std::size_t>(src[r])];
      if (slot == -1) slot = dst[r];
      else if (slot != dst[r]) return false;
    }
  }
  std::vector<bool> used(b.size(), false);
  for (int v : fmap) {
    if (v < 0 || used[static_cast<std::size_t>(v)]) return false;
    used[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t x = 0; x < a.size(); ++x)
    for (int lo : a.lower_covers(static_cast<int>(x))) {
      const auto& ups = b.upper_covers(fmap[static_cast<std::size_t>(lo)]);
      if (!std::binary_search(ups.begin(), ups.end(), fmap[x])) return false;
    }
  return true;
}

}  // namespace detail

inline bool is_isomorphic(const FlagGraph& ga, const FlagGraph& gb) {
  const RankedPoset& a = ga.poset();
  const RankedPoset& b = gb.poset();
  if (a.rank() != b.rank() || a.face_counts() != b.face_counts() || ga.size() != gb.size()) return false;
  for (std::size_t t = 0; t < gb.size(); ++t) {
    auto img = detail::extend_between(ga, gb, 0, static_cast<FlagIndex>(t));
    if (img && detail::induces_poset_iso(ga, gb, *img)) return true;
  }
  return false;
}

inline bool is_isomorphic(const RankedPoset& a, const RankedPoset& b) {
  if (a.rank() != b.rank() || a.face_counts() != b.face_counts()) return false;
  return is_isomorphic(FlagGraph(a), FlagGraph(b));
}

}  // namespace polytwo
