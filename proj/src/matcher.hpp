#pragma once

#include <array>
#include <span>
#include <vector>

#include "patlab/errors.hpp"

namespace patlab::detail {

// Depth-first subsequence matcher. Pattern letters are assigned to text
// positions left to right; each candidate value is bounded by the text values
// already assigned to the pattern letters nearest below and above it in value,
// which by transitivity is enough for order isomorphism.
class CompiledPattern {
 public:
  static constexpr int kMaxLength = 64;

  explicit CompiledPattern(std::span<const int> q) : length_(static_cast<int>(q.size())) {
    if (length_ > kMaxLength) throw UsageError("pattern longer than 64 entries");
    lower_.assign(q.size(), -1);
    upper_.assign(q.size(), -1);
    for (int l = 0; l < length_; ++l) {
      const int v = q[static_cast<std::size_t>(l)];
      if (v == length_) max_position_ = l;
      for (int m = 0; m < l; ++m) {
        const int w = q[static_cast<std::size_t>(m)];
        if (w < v && (lower_[l] < 0 || w > q[static_cast<std::size_t>(lower_[l])])) lower_[l] = m;
        if (w > v && (upper_[l] < 0 || w < q[static_cast<std::size_t>(upper_[l])])) upper_[l] = m;
      }
    }
  }

  int size() const noexcept { return length_; }

  template <class T>
  bool occurs_in(std::span<const T> text) const {
    if (length_ == 0) return true;
    std::array<int, kMaxLength> at{};
    return search(text, at, 0, 0, -1);
  }

  // Occurrences that place the pattern's maximum on text index `anchor`
  // (0-based). Only meaningful when text[anchor] is the largest text value.
  template <class T>
  bool occurs_through(std::span<const T> text, int anchor) const {
    if (length_ == 0) return true;
    std::array<int, kMaxLength> at{};
    return search(text, at, 0, 0, anchor);
  }

 private:
  template <class T>
  bool search(std::span<const T> text, std::array<int, kMaxLength>& at, int l, int start,
              int anchor) const {
    if (l == length_) return true;
    const int n = static_cast<int>(text.size());
    int first = start;
    int last = n - (length_ - l);
    if (anchor >= 0) {
      if (l < max_position_) {
        last = std::min(last, anchor - (max_position_ - l));
      } else if (l == max_position_) {
        if (anchor < start) return false;
        first = last = anchor;
      }
    }
    const int lo = lower_[l];
    const int hi = upper_[l];
    for (int t = first; t <= last; ++t) {
      const auto v = text[static_cast<std::size_t>(t)];
      if (lo >= 0 && !(text[static_cast<std::size_t>(at[lo])] < v)) continue;
      if (hi >= 0 && !(v < text[static_cast<std::size_t>(at[hi])])) continue;
      at[l] = t;
      if (search(text, at, l + 1, t + 1, anchor)) return true;
    }
    return false;
  }

  int length_ = 0;
  int max_position_ = 0;
  std::vector<int> lower_;
  std::vector<int> upper_;
};

}  // namespace patlab::detail
