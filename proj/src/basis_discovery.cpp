#include <algorithm>
#include <set>
#include <unordered_set>

#include "patlab/errors.hpp"
#include "patlab/verification.hpp"

namespace patlab {

namespace {

using Layer = std::unordered_set<std::uint64_t>;

bool deletions_inside(const Permutation& q, const Layer& shorter) {
  for (int pos = 1; pos <= q.size(); ++pos) {
    if (!shorter.contains(pack(delete_entry(q, pos)))) return false;
  }
  return true;
}

}  // namespace

// The H-image is built independently at every length; closure under deletion
// is checked rather than assumed, and the basis is read off as the minimal
// permutations outside it. Each such permutation has every deletion inside
// the previous layer, so candidates come from one-point extensions of it.
BasisResult discover_basis(int k, int j, int max_len, const DiscoveryOptions& options) {
  if (k < 2 || j < 2 || j > k) throw UsageError("discover_basis needs 2 <= j <= k");
  if (max_len < 0 || max_len > std::min(kMaxEngineLength, 16)) {
    throw UsageError("max_len out of range");
  }
  BasisResult result;
  result.source_spec = {k, j, j - 1};
  result.max_len = max_len;
  const PatternBasis source = monotone_basis(k, j, j - 1);
  const MapOptions fast{.validate = false};

  std::vector<Layer> image(static_cast<std::size_t>(max_len) + 1);
  std::vector<std::vector<Permutation>> members(static_cast<std::size_t>(max_len) + 1);
  for (int n = 0; n <= max_len; ++n) {
    const auto inputs = options.engine == CountMethod::brute_force
                            ? brute_force_avoiders(n, source, std::max(max_len, kDefaultBruteForceCap))
                            : enumerate_avoiders(n, source, options.enumeration);
    auto& layer = image[static_cast<std::size_t>(n)];
    auto& list = members[static_cast<std::size_t>(n)];
    for (const auto& p : inputs) {
      Permutation out = map_H(p, k, j, HSide::minus, fast).output;
      if (layer.insert(pack(out)).second) list.push_back(std::move(out));
    }
    std::sort(list.begin(), list.end());
    result.image_sizes.push_back(list.size());
    if (n == 0) continue;
    for (const auto& q : list) {
      if (!deletions_inside(q, image[static_cast<std::size_t>(n - 1)])) {
        result.deletion_closed = false;
        throw FindingError("H-image is not closed under deletion at length " + std::to_string(n),
                           q.to_string());
      }
    }
  }

  std::set<Permutation> minimal;
  for (int m = 1; m <= max_len; ++m) {
    const auto& shorter = image[static_cast<std::size_t>(m - 1)];
    const auto& layer = image[static_cast<std::size_t>(m)];
    for (const auto& base : members[static_cast<std::size_t>(m - 1)]) {
      for (int slot = 0; slot < m; ++slot) {
        for (int value = 1; value <= m; ++value) {
          std::vector<int> grown;
          grown.reserve(static_cast<std::size_t>(m));
          for (int t = 0; t < m - 1; ++t) {
            if (t == slot) grown.push_back(value);
            const int v = base.values()[static_cast<std::size_t>(t)];
            grown.push_back(v >= value ? v + 1 : v);
          }
          if (slot == m - 1) grown.push_back(value);
          Permutation q = Permutation::from_trusted(std::move(grown));
          if (layer.contains(pack(q)) || minimal.contains(q)) continue;
          if (deletions_inside(q, shorter)) minimal.insert(std::move(q));
        }
      }
    }
  }
  result.discovered = PatternBasis({minimal.begin(), minimal.end()},
                                   "basis(H-image, k=" + std::to_string(k) +
                                       ", j=" + std::to_string(j) + ")");
  result.discovered.set_minimal(true);

  if (j <= 4 && !(j == 4 && k < 3)) {
    PatternBasis predicted = construct_S_explicit(k, j);
    std::vector<Permutation> restricted;
    for (const auto& q : predicted.patterns()) {
      if (q.size() <= max_len) restricted.push_back(q);
    }
    result.matches_prediction = PatternBasis(std::move(restricted)) == result.discovered;
    result.predicted = std::move(predicted);
  }
  return result;
}

}  // namespace patlab
