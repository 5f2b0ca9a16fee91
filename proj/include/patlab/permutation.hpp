#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patlab {

/// A permutation of {1, ..., n} in one-line notation.
///
/// Positions and values are 1-based at every public entry point. The empty
/// permutation is a valid value.
class Permutation {
 public:
  Permutation() = default;

  /// Throws UsageError unless `values` is a bijection on {1, ..., n}.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n);

  /// Accepts "82456173" (compact, n <= 9) or "8 3 2 11 12 ...".
  static Permutation parse(std::string_view text);

  /// Skips validation; callers guarantee the bijection invariant.
  static Permutation from_trusted(std::vector<int> values) {
    Permutation p;
    p.values_ = std::move(values);
    return p;
  }

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  /// Value at 1-based position `pos`.
  int operator()(int pos) const { return values_[static_cast<std::size_t>(pos - 1)]; }

  std::span<const int> values() const noexcept { return values_; }

  /// Compact form iff n <= 9, otherwise space separated.
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  /// Shorter permutations first, then lexicographic.
  std::strong_ordering operator<=>(const Permutation& other) const;

 private:
  std::vector<int> values_;
};

/// Order-isomorphic reduction of distinct integers to 1..n.
Permutation standardize(std::span<const int> sequence);

/// True iff some subsequence of `p` is order-isomorphic to `q`.
bool contains(const Permutation& p, const Permutation& q);
inline bool avoids(const Permutation& p, const Permutation& q) { return !contains(p, q); }

/// (n+1-p_n) ... (n+1-p_1).
Permutation reverse_complement(const Permutation& p);

/// `p` followed by `q` shifted up by |p|.
Permutation direct_sum(const Permutation& p, const Permutation& q);

/// Removes the entry at 1-based `pos` and standardizes.
Permutation delete_entry(const Permutation& p, int pos);

/// Length-n permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Nibble packing for hashing; requires n <= 16.
std::uint64_t pack(const Permutation& p);

}  // namespace patlab
