#pragma once

#include <vector>

#include "patlab/permutation.hpp"

namespace patlab {

/// Longest-increasing-subsequence lengths through each entry, which decide
/// whether an entry can serve as the r-th letter of some occurrence of 12...k.
///
/// Positions are 1-based: `up(t)` is the longest increasing subsequence ending
/// at position t, `down(t)` the longest one starting there.
class RankCapabilityTable {
 public:
  RankCapabilityTable(const Permutation& p, int k);

  int k() const noexcept { return k_; }
  int size() const noexcept { return static_cast<int>(up_.size()); }
  int up(int pos) const { return up_[static_cast<std::size_t>(pos - 1)]; }
  int down(int pos) const { return down_[static_cast<std::size_t>(pos - 1)]; }

  /// Some occurrence of 12...k uses position `pos` as its r-th entry.
  bool can_act_as(int pos, int rank) const {
    return rank >= 1 && rank <= k_ && up(pos) >= rank && down(pos) >= k_ - rank + 1;
  }

  /// Positions `low_pos` < `high_pos` can serve together as ranks r and r+1
  /// of one occurrence.
  bool jointly(int low_pos, int high_pos, int rank) const;

  /// 1-based positions able to act as `rank`, ascending.
  std::vector<int> positions_with_rank(int rank) const;

 private:
  Permutation perm_;
  int k_;
  std::vector<int> up_;
  std::vector<int> down_;
};

}  // namespace patlab
