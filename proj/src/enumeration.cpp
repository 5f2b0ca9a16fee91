#include "patlab/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "matcher.hpp"
#include "patlab/errors.hpp"

namespace patlab {

const char* to_string(CountMethod m) {
  return m == CountMethod::pruned_tree ? "pruned_tree" : "brute_force";
}

bool avoids_basis(const Permutation& p, const PatternBasis& basis) {
  return std::none_of(basis.patterns().begin(), basis.patterns().end(),
                      [&](const Permutation& q) { return contains(p, q); });
}

namespace {

using Word = std::array<std::uint8_t, kMaxEngineLength>;

struct Node {
  Word values{};
  int length = 0;
};

void checked_add(std::uint64_t& total, std::uint64_t delta) {
  if (__builtin_add_overflow(total, delta, &total)) {
    throw std::overflow_error("avoider count overflowed 64 bits");
  }
}

Permutation to_permutation(const Node& node) {
  return Permutation::from_trusted(
      std::vector<int>(node.values.begin(), node.values.begin() + node.length));
}

// Insertion-of-maximum generating tree. Children of a length-n avoider insert
// n+1 into each of the n+1 slots; a child survives when no basis pattern
// occurs through the new maximum, since any other occurrence would already
// sit in the parent.
class Engine {
 public:
  Engine(const PatternBasis& basis, const EnumerationOptions& options) : options_(options) {
    for (const auto& q : basis.patterns()) {
      if (q.empty()) has_empty_pattern_ = true;
      patterns_.emplace_back(q.values());
    }
  }

  bool class_is_empty() const noexcept { return has_empty_pattern_; }

  bool extend(const Node& parent, int slot, Node& child) const {
    const int n = parent.length;
    child.length = n + 1;
    for (int t = 0, u = 0; t <= n; ++t) {
      child.values[static_cast<std::size_t>(t)] =
          t == slot ? static_cast<std::uint8_t>(n + 1) : parent.values[static_cast<std::size_t>(u++)];
    }
    const std::span<const std::uint8_t> text(child.values.data(), static_cast<std::size_t>(n + 1));
    for (const auto& q : patterns_) {
      if (q.size() <= n + 1 && q.occurs_through(text, slot)) return false;
    }
    return true;
  }

  void visit() {
    if (stop_.load(std::memory_order_relaxed)) throw ResourceLimitError("traversal aborted");
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > options_.node_budget) {
      stop_.store(true);
      throw ResourceLimitError("node budget of " + std::to_string(options_.node_budget) +
                               " exceeded; request is beyond desk scale");
    }
  }

  void abort() { stop_.store(true); }

  // Depth-first walk that counts every level in [node.length, target].
  void count_below(const Node& node, int target, std::vector<std::uint64_t>& counts) {
    visit();
    checked_add(counts[static_cast<std::size_t>(node.length)], 1);
    if (node.length == target) return;
    Node child;
    for (int slot = 0; slot <= node.length; ++slot) {
      if (extend(node, slot, child)) count_below(child, target, counts);
    }
  }

  template <class Emit>
  void emit_below(const Node& node, int target, Emit&& emit) {
    visit();
    if (node.length == target) {
      emit(node);
      return;
    }
    Node child;
    for (int slot = 0; slot <= node.length; ++slot) {
      if (extend(node, slot, child)) emit_below(child, target, emit);
    }
  }

  // Nodes at depth `depth` in depth-first order, plus the size of each
  // shallower level.
  std::vector<Node> frontier(int depth, std::vector<std::uint64_t>& counts) {
    std::vector<Node> level{Node{}};
    for (int d = 0; d < depth; ++d) {
      checked_add(counts[static_cast<std::size_t>(d)], level.size());
      std::vector<Node> next;
      Node child;
      for (const auto& node : level) {
        visit();
        for (int slot = 0; slot <= node.length; ++slot) {
          if (extend(node, slot, child)) next.push_back(child);
        }
      }
      level = std::move(next);
    }
    return level;
  }

 private:
  EnumerationOptions options_;
  std::vector<detail::CompiledPattern> patterns_;
  bool has_empty_pattern_ = false;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

unsigned worker_count(const EnumerationOptions& options) {
  if (options.threads > 0) return options.threads;
  return std::max(2u, std::thread::hardware_concurrency());
}

// Depth at which to hand subtrees to workers: a few subtrees per worker.
int split_depth(const PatternBasis&, int target, unsigned workers) {
  std::uint64_t width = 1;
  int depth = 0;
  while (depth < target && width < 4ull * workers) {
    ++depth;
    width *= static_cast<std::uint64_t>(depth);
  }
  return std::min(depth + 1, target);
}

// Runs `job(index)` for index in [0, jobs) across workers; rethrows the
// first failure.
template <class Job>
void run_parallel(std::size_t jobs, unsigned workers, Engine& engine, Job&& job) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t idx; (idx = next.fetch_add(1)) < jobs;) job(idx);
      } catch (...) {
        engine.abort();
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

void check_length(int n) {
  if (n < 0) throw UsageError("length must be non-negative");
  if (n > kMaxEngineLength) {
    throw UsageError("length " + std::to_string(n) + " exceeds engine limit " +
                     std::to_string(kMaxEngineLength));
  }
}

}  // namespace

void enumerate_avoiders(int n, const PatternBasis& basis,
                        const std::function<void(const Permutation&)>& consumer,
                        const EnumerationOptions& options) {
  check_length(n);
  Engine engine(basis, options);
  if (engine.class_is_empty()) return;
  if (!options.parallel) {
    engine.emit_below(Node{}, n, [&](const Node& node) { consumer(to_permutation(node)); });
    return;
  }
  const unsigned workers = worker_count(options);
  std::vector<std::uint64_t> scratch(static_cast<std::size_t>(n) + 1, 0);
  const auto roots = engine.frontier(split_depth(basis, n, workers), scratch);
  std::vector<std::vector<Permutation>> parts(roots.size());
  run_parallel(roots.size(), workers, engine, [&](std::size_t idx) {
    engine.emit_below(roots[idx], n,
                      [&](const Node& node) { parts[idx].push_back(to_permutation(node)); });
  });
  for (const auto& part : parts) {
    for (const auto& p : part) consumer(p);
  }
}

std::vector<Permutation> enumerate_avoiders(int n, const PatternBasis& basis,
                                            const EnumerationOptions& options) {
  std::vector<Permutation> out;
  enumerate_avoiders(n, basis, [&](const Permutation& p) { out.push_back(p); }, options);
  std::sort(out.begin(), out.end());
  return out;
}

CountSequence count_sequence(int max_n, const PatternBasis& basis,
                             const EnumerationOptions& options) {
  check_length(max_n);
  CountSequence seq{basis.label(),
                    std::vector<std::uint64_t>(static_cast<std::size_t>(max_n) + 1, 0),
                    CountMethod::pruned_tree};
  Engine engine(basis, options);
  if (engine.class_is_empty()) return seq;
  if (!options.parallel) {
    engine.count_below(Node{}, max_n, seq.counts);
    return seq;
  }
  const unsigned workers = worker_count(options);
  const auto roots = engine.frontier(split_depth(basis, max_n, workers), seq.counts);
  std::vector<std::vector<std::uint64_t>> partial(
      roots.size(), std::vector<std::uint64_t>(seq.counts.size(), 0));
  run_parallel(roots.size(), workers, engine,
               [&](std::size_t idx) { engine.count_below(roots[idx], max_n, partial[idx]); });
  for (const auto& part : partial) {
    for (std::size_t n = 0; n < part.size(); ++n) checked_add(seq.counts[n], part[n]);
  }
  return seq;
}

std::vector<Permutation> brute_force_avoiders(int n, const PatternBasis& basis, int cap) {
  if (n < 0) throw UsageError("length must be non-negative");
  if (n > cap) {
    throw UsageError("brute force capped at n = " + std::to_string(cap));
  }
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    Permutation p = Permutation::from_trusted(v);
    if (avoids_basis(p, basis)) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

CountSequence brute_force_count_sequence(int max_n, const PatternBasis& basis, int cap) {
  CountSequence seq{basis.label(), {}, CountMethod::brute_force};
  for (int n = 0; n <= max_n; ++n) {
    seq.counts.push_back(brute_force_avoiders(n, basis, cap).size());
  }
  return seq;
}

}  // namespace patlab
