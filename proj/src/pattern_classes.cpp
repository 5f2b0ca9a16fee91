#include "patlab/pattern_classes.hpp"

#include <algorithm>

#include "patlab/errors.hpp"

namespace patlab {

namespace {

std::string letters(const Permutation& q, int box_pos, const std::string& box) {
  const bool compact = q.size() <= 9;
  std::string out;
  for (int t = 1; t <= q.size() + 1; ++t) {
    if (t == box_pos) {
      if (!compact && !out.empty()) out += ' ';
      out += box;
    }
    if (t > q.size()) break;
    if (!compact && !out.empty()) out += ' ';
    out += std::to_string(q(t));
  }
  return out;
}

void check_box(const Permutation& q, int box_pos) {
  if (box_pos < 1 || box_pos > q.size() + 1) {
    throw UsageError("box position " + std::to_string(box_pos) + " outside 1.." +
                     std::to_string(q.size() + 1));
  }
}

}  // namespace

std::string DistantPattern::to_expression() const { return letters(underlying, box_pos, "#"); }

std::string AlmostDistantPattern::to_expression() const {
  return letters(underlying, box_pos, "[" + std::to_string(removed) + "]");
}

void MonotoneSpec::validate() const {
  if (k < 1) throw UsageError("M(k,j,i) needs k >= 1");
  if (j < 1 || j > k + 1) throw UsageError("M(k,j,i) needs 1 <= j <= k+1");
  if (i < 1 || i > k + 1) throw UsageError("M(k,j,i) needs 1 <= i <= k+1");
}

std::string MonotoneSpec::label() const {
  return "M(" + std::to_string(k) + "," + std::to_string(j) + "," + std::to_string(i) + ")";
}

PatternBasis::PatternBasis(std::vector<Permutation> patterns, std::string label)
    : patterns_(std::move(patterns)), label_(std::move(label)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

bool PatternBasis::has(const Permutation& q) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), q);
}

int PatternBasis::min_length() const { return patterns_.empty() ? -1 : patterns_.front().size(); }
int PatternBasis::max_length() const { return patterns_.empty() ? -1 : patterns_.back().size(); }

void PatternBasis::insert(const Permutation& q) {
  auto it = std::lower_bound(patterns_.begin(), patterns_.end(), q);
  if (it == patterns_.end() || *it != q) patterns_.insert(it, q);
}

Permutation insertion_pattern(const Permutation& underlying, int box_pos, int value) {
  check_box(underlying, box_pos);
  if (value < 1 || value > underlying.size() + 1) {
    throw UsageError("insertion value outside 1..k+1");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(underlying.size() + 1));
  for (int t = 1; t <= underlying.size(); ++t) {
    if (t == box_pos) out.push_back(value);
    const int e = underlying(t);
    out.push_back(e >= value ? e + 1 : e);
  }
  if (box_pos == underlying.size() + 1) out.push_back(value);
  return Permutation::from_trusted(std::move(out));
}

PatternBasis expand_distant(const DistantPattern& d) {
  check_box(d.underlying, d.box_pos);
  std::vector<Permutation> out;
  for (int v = 1; v <= d.underlying.size() + 1; ++v) {
    out.push_back(insertion_pattern(d.underlying, d.box_pos, v));
  }
  return PatternBasis(std::move(out), d.to_expression());
}

PatternBasis expand_almost_distant(const AlmostDistantPattern& a) {
  check_box(a.underlying, a.box_pos);
  if (a.removed < 1 || a.removed > a.underlying.size() + 1) {
    throw UsageError("removed value " + std::to_string(a.removed) + " outside 1.." +
                     std::to_string(a.underlying.size() + 1));
  }
  std::vector<Permutation> out;
  for (int v = 1; v <= a.underlying.size() + 1; ++v) {
    if (v != a.removed) out.push_back(insertion_pattern(a.underlying, a.box_pos, v));
  }
  return PatternBasis(std::move(out), a.to_expression());
}

AlmostDistantPattern monotone_class(const MonotoneSpec& spec) {
  spec.validate();
  return {Permutation::identity(spec.k), spec.j, spec.i};
}

DistantPattern monotone_distant(int k, int j) {
  if (k < 1 || j < 1 || j > k + 1) throw UsageError("D(k,j) needs k >= 1, 1 <= j <= k+1");
  return {Permutation::identity(k), j};
}

PatternBasis monotone_basis(int k, int j, int i) {
  const MonotoneSpec spec{k, j, i};
  PatternBasis b = expand_almost_distant(monotone_class(spec));
  b.set_label(spec.label());
  return b;
}

PatternBasis distant_basis(int k, int j) {
  PatternBasis b = expand_distant(monotone_distant(k, j));
  b.set_label("D(" + std::to_string(k) + "," + std::to_string(j) + ")");
  return b;
}

PatternBasis increasing_basis(int k) {
  Permutation id = Permutation::identity(k);
  return PatternBasis({id}, id.to_string());
}

PatternBasis basis_reverse_complement(const PatternBasis& b) {
  std::vector<Permutation> out;
  out.reserve(b.size());
  for (const auto& q : b.patterns()) out.push_back(reverse_complement(q));
  return PatternBasis(std::move(out), b.label().empty() ? std::string{} : "rc(" + b.label() + ")");
}

PatternBasis basis_union(const PatternBasis& a, const PatternBasis& b, std::string label) {
  std::vector<Permutation> out = a.patterns();
  out.insert(out.end(), b.patterns().begin(), b.patterns().end());
  if (label.empty()) label = a.label() + ";" + b.label();
  return PatternBasis(std::move(out), std::move(label));
}

bool is_antichain(const PatternBasis& b) {
  const auto& ps = b.patterns();
  for (std::size_t x = 0; x < ps.size(); ++x) {
    for (std::size_t y = 0; y < ps.size(); ++y) {
      if (x != y && ps[x].size() >= ps[y].size() && contains(ps[x], ps[y])) return false;
    }
  }
  return true;
}

}  // namespace patlab
