#include "patlab/rank_capability.hpp"

#include <algorithm>

#include "patlab/errors.hpp"

namespace patlab {

// O(n^2) is plenty for the lengths this library handles.
RankCapabilityTable::RankCapabilityTable(const Permutation& p, int k)
    : perm_(p), k_(k) {
  if (k < 1) throw UsageError("rank capability needs k >= 1");
  const int n = p.size();
  up_.assign(static_cast<std::size_t>(n), 1);
  down_.assign(static_cast<std::size_t>(n), 1);
  const auto v = p.values();
  for (int t = 0; t < n; ++t) {
    for (int s = 0; s < t; ++s) {
      if (v[static_cast<std::size_t>(s)] < v[static_cast<std::size_t>(t)]) {
        up_[static_cast<std::size_t>(t)] =
            std::max(up_[static_cast<std::size_t>(t)], up_[static_cast<std::size_t>(s)] + 1);
      }
    }
  }
  for (int t = n - 1; t >= 0; --t) {
    for (int s = t + 1; s < n; ++s) {
      if (v[static_cast<std::size_t>(s)] > v[static_cast<std::size_t>(t)]) {
        down_[static_cast<std::size_t>(t)] =
            std::max(down_[static_cast<std::size_t>(t)], down_[static_cast<std::size_t>(s)] + 1);
      }
    }
  }
}

bool RankCapabilityTable::jointly(int low_pos, int high_pos, int rank) const {
  if (rank < 1 || rank >= k_ || low_pos >= high_pos) return false;
  return perm_(low_pos) < perm_(high_pos) && up(low_pos) >= rank &&
         down(high_pos) >= k_ - rank;
}

std::vector<int> RankCapabilityTable::positions_with_rank(int rank) const {
  std::vector<int> out;
  for (int t = 1; t <= size(); ++t) {
    if (can_act_as(t, rank)) out.push_back(t);
  }
  return out;
}

}  // namespace patlab
