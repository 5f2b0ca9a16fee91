#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "patlab/pattern_classes.hpp"
#include "patlab/permutation.hpp"

namespace patlab {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr int kMaxEngineLength = 15;
inline constexpr int kDefaultBruteForceCap = 9;

struct EnumerationOptions {
  /// Accepted generating-tree nodes before ResourceLimitError.
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool parallel = true;
  /// Worker count for the parallel traversal; 0 picks max(2, hardware).
  unsigned threads = 0;
};

enum class CountMethod { pruned_tree, brute_force };

const char* to_string(CountMethod m);

/// |Av_n(Q)| for n = 0..max_n.
struct CountSequence {
  std::string basis_label;
  std::vector<std::uint64_t> counts;
  CountMethod method = CountMethod::pruned_tree;

  int max_n() const noexcept { return static_cast<int>(counts.size()) - 1; }
  std::uint64_t at(int n) const { return counts.at(static_cast<std::size_t>(n)); }
};

bool avoids_basis(const Permutation& p, const PatternBasis& basis);

/// Streams Av_n(basis) to `consumer`. The order is the depth-first order of
/// the insertion tree and is the same in sequential and parallel mode.
void enumerate_avoiders(int n, const PatternBasis& basis,
                        const std::function<void(const Permutation&)>& consumer,
                        const EnumerationOptions& options = {});

/// Av_n(basis), sorted.
std::vector<Permutation> enumerate_avoiders(int n, const PatternBasis& basis,
                                            const EnumerationOptions& options = {});

/// Counting-only traversal; nothing is materialized.
CountSequence count_sequence(int max_n, const PatternBasis& basis,
                             const EnumerationOptions& options = {});

/// Filters all n! permutations. Independent of the tree engine; used as the
/// oracle for it. Throws UsageError when n > cap.
std::vector<Permutation> brute_force_avoiders(int n, const PatternBasis& basis,
                                              int cap = kDefaultBruteForceCap);

CountSequence brute_force_count_sequence(int max_n, const PatternBasis& basis,
                                         int cap = kDefaultBruteForceCap);

}  // namespace patlab
