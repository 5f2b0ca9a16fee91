#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "patlab/errors.hpp"
#include "patlab/verification.hpp"

namespace patlab {

double nth_root(std::uint64_t a, int n) {
  if (n <= 0) throw UsageError("nth_root needs n >= 1");
  return static_cast<double>(
      std::pow(static_cast<long double>(a), 1.0L / static_cast<long double>(n)));
}

std::string format_root(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

GrowthDiagnostics growth_diagnostics(const PatternBasis& basis, int max_n,
                                     std::optional<std::pair<double, double>> bounds,
                                     const EnumerationOptions& options) {
  GrowthDiagnostics d;
  d.basis_label = basis.label();
  d.counts = count_sequence(max_n, basis, options);
  d.reference_bounds = bounds;
  d.ratios.resize(static_cast<std::size_t>(max_n) + 1);
  d.roots.assign(static_cast<std::size_t>(max_n) + 1, 0.0);
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t prev = d.counts.at(n - 1);
    const std::uint64_t cur = d.counts.at(n);
    if (prev != 0) {
      const std::uint64_t g = std::gcd(cur, prev);
      d.ratios[static_cast<std::size_t>(n)] = Ratio{cur / g, prev / g};
    }
    d.roots[static_cast<std::size_t>(n)] = nth_root(cur, n);
  }
  return d;
}

std::pair<double, double> distant_growth_bounds(int k) {
  if (k < 1) throw UsageError("k must be positive");
  const double base = static_cast<double>((k - 1) * (k - 1));
  return {base, base + 1.0};
}

namespace {

bool is_identity(const Permutation& q) { return q == Permutation::identity(q.size()); }

std::pair<double, double> point(double v) { return {v, v}; }

}  // namespace

// Literature values for monotone classes: Av(12...k) grows like (k-1)^2;
// M(k,k+1,i) like (k-1)^2 for 2 <= i <= k and (k-1)^2+1 for i = k+1; the
// diagonal M(k,j,j) and M(k,2,1), M(k,k,k+1) share the latter rate;
// M(3,3,1) grows like (1+sqrt(phi))^2. Neighbours of the diagonal lie in
// [(k-1)^2, (k-1)^2+1]; every other M(k,j,i) in [(k-1)^2, k^2].
std::optional<std::pair<double, double>> reference_growth_bounds(const ClassExpression& expr) {
  if (expr.terms.size() != 1) return std::nullopt;
  const auto& pattern = expr.terms.front().pattern;

  if (const auto* q = std::get_if<Permutation>(&pattern)) {
    // 12...k, and k...1 by symmetry.
    const int k = q->size();
    std::vector<int> desc(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) desc[static_cast<std::size_t>(t)] = k - t;
    const bool decreasing = std::equal(desc.begin(), desc.end(), q->values().begin());
    if (k >= 1 && (is_identity(*q) || decreasing)) {
      return point(static_cast<double>((k - 1) * (k - 1)));
    }
    return std::nullopt;
  }
  if (const auto* d = std::get_if<DistantPattern>(&pattern)) {
    if (!is_identity(d->underlying) || d->underlying.size() < 1) return std::nullopt;
    return distant_growth_bounds(d->underlying.size());
  }
  const auto& a = std::get<AlmostDistantPattern>(pattern);
  if (!is_identity(a.underlying) || a.underlying.size() < 1) return std::nullopt;
  const int k = a.underlying.size();
  const int j = a.box_pos;
  const int i = a.removed;
  const double low = static_cast<double>((k - 1) * (k - 1));
  if (i == j) return point(low + 1.0);
  if ((j == k + 1 || j == 1) && i >= 2 && i <= k) return point(low);
  if ((j == 2 && i == 1) || (j == k && i == k + 1)) return point(low + 1.0);
  if (k == 3 && ((j == 3 && i == 1) || (j == 2 && i == 4))) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double r = 1.0 + std::sqrt(phi);
    return point(r * r);
  }
  if (j >= 2 && j <= k && (i == j - 1 || i == j + 1)) return std::pair{low, low + 1.0};
  return std::pair{low, static_cast<double>(k * k)};
}

}  // namespace patlab
