#include "patlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "patlab/errors.hpp"
#include "matcher.hpp"

namespace patlab {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw UsageError("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return from_trusted(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  const bool spaced = text.find_first_of(" \t,") != std::string_view::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw UsageError("unexpected character '" + std::string(1, c) + "' in permutation");
    }
    if (!spaced) {
      values.push_back(c - '0');
      ++i;
      continue;
    }
    int v = 0;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc()) throw UsageError("bad integer in permutation");
    values.push_back(v);
    i = static_cast<std::size_t>(end - text.data());
  }
  return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t t = 0; t < values_.size(); ++t) {
    if (!compact && t > 0) out += ' ';
    out += std::to_string(values_[t]);
  }
  return out;
}

std::strong_ordering Permutation::operator<=>(const Permutation& other) const {
  if (auto c = values_.size() <=> other.values_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(values_.begin(), values_.end(),
                                                other.values_.begin(), other.values_.end());
}

Permutation standardize(std::span<const int> sequence) {
  std::vector<int> order(sequence.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sequence[static_cast<std::size_t>(a)] <
                                       sequence[static_cast<std::size_t>(b)]; });
  std::vector<int> out(sequence.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    out[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  }
  return Permutation::from_trusted(std::move(out));
}

bool contains(const Permutation& p, const Permutation& q) {
  if (q.empty()) return true;
  if (q.size() > p.size()) return false;
  return detail::CompiledPattern(q.values()).occurs_in(p.values());
}

Permutation reverse_complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    out[static_cast<std::size_t>(t)] = n + 1 - p(n - t);
  }
  return Permutation::from_trusted(std::move(out));
}

Permutation direct_sum(const Permutation& p, const Permutation& q) {
  std::vector<int> out(p.values().begin(), p.values().end());
  for (int v : q.values()) out.push_back(v + p.size());
  return Permutation::from_trusted(std::move(out));
}

Permutation delete_entry(const Permutation& p, int pos) {
  if (pos < 1 || pos > p.size()) throw UsageError("delete_entry: position out of range");
  const int removed = p(pos);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.size() - 1));
  for (int t = 1; t <= p.size(); ++t) {
    if (t == pos) continue;
    const int v = p(t);
    out.push_back(v > removed ? v - 1 : v);
  }
  return Permutation::from_trusted(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(Permutation::from_trusted(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::uint64_t pack(const Permutation& p) {
  if (p.size() > 16) throw UsageError("pack: permutation longer than 16");
  std::uint64_t key = 0;
  for (int v : p.values()) key = (key << 4) | static_cast<std::uint64_t>(v - 1);
  return key;
}

}  // namespace patlab
