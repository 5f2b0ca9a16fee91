#pragma once

#include <string>
#include <vector>

#include "patlab/permutation.hpp"

namespace patlab {

/// q_1 ... q_{j-1} # q_j ... q_k: an occurrence of the underlying pattern
/// whose letters j-1 and j are not adjacent. `box_pos` = j ranges over
/// 1..k+1; j = 1 puts the gap before the first letter, j = k+1 after the last.
struct DistantPattern {
  Permutation underlying;
  int box_pos = 1;

  std::string to_expression() const;
};

/// A distant pattern with one classical pattern dropped from its expansion:
/// the one whose entry at the box position has value `removed`.
struct AlmostDistantPattern {
  Permutation underlying;
  int box_pos = 1;
  int removed = 1;

  std::string to_expression() const;
};

/// The monotone almost-distant class 1 ... (j-1) [i] j ... k.
struct MonotoneSpec {
  int k = 1;
  int j = 1;
  int i = 1;

  /// Throws UsageError outside k >= 1, 1 <= j, i <= k+1.
  void validate() const;
  std::string label() const;
};

/// A finite, duplicate-free set of classical patterns defining Av_n(Q).
/// Patterns are kept sorted (shorter first, then lexicographic).
class PatternBasis {
 public:
  PatternBasis() = default;
  explicit PatternBasis(std::vector<Permutation> patterns, std::string label = {});

  const std::vector<Permutation>& patterns() const noexcept { return patterns_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Set when the basis was built as an antichain; checked by is_antichain().
  bool minimal() const noexcept { return minimal_; }
  void set_minimal(bool flag) { minimal_ = flag; }

  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  bool has(const Permutation& q) const;

  /// Length of the shortest pattern; -1 for the empty basis.
  int min_length() const;
  int max_length() const;

  void insert(const Permutation& q);

  /// Set equality; labels are ignored.
  friend bool operator==(const PatternBasis& a, const PatternBasis& b) {
    return a.patterns_ == b.patterns_;
  }

 private:
  std::vector<Permutation> patterns_;
  std::string label_;
  bool minimal_ = false;
};

/// Insert `value` at `box_pos`, shifting underlying entries >= value up by one.
Permutation insertion_pattern(const Permutation& underlying, int box_pos, int value);

PatternBasis expand_distant(const DistantPattern& d);
PatternBasis expand_almost_distant(const AlmostDistantPattern& a);

AlmostDistantPattern monotone_class(const MonotoneSpec& spec);
/// 1 ... (j-1) # j ... k.
DistantPattern monotone_distant(int k, int j);

/// Shorthands for expand_almost_distant(monotone_class(...)) and friends.
PatternBasis monotone_basis(int k, int j, int i);
PatternBasis distant_basis(int k, int j);
PatternBasis increasing_basis(int k);

PatternBasis basis_reverse_complement(const PatternBasis& b);
PatternBasis basis_union(const PatternBasis& a, const PatternBasis& b, std::string label = {});

/// No pattern contains another one.
bool is_antichain(const PatternBasis& b);

}  // namespace patlab
