#include "patlab/verification.hpp"

#include <algorithm>
#include <map>

#include "patlab/errors.hpp"

namespace patlab {

const char* to_string(MapVerdict v) {
  switch (v) {
    case MapVerdict::bijection: return "bijection";
    case MapVerdict::injection: return "injection";
    case MapVerdict::failed: return "failed";
  }
  return "?";
}

WilfReport verify_wilf(const PatternBasis& left, const PatternBasis& right, int max_n,
                       const EnumerationOptions& options) {
  WilfReport report;
  report.left_basis = left;
  report.right_basis = right;
  report.max_n = max_n;
  report.left_counts = count_sequence(max_n, left, options);
  report.right_counts = count_sequence(max_n, right, options);
  for (int n = 0; n <= max_n; ++n) {
    if (report.left_counts.at(n) != report.right_counts.at(n)) {
      report.diverges_at = n;
      break;
    }
  }
  return report;
}

namespace {

void keep_smallest(std::optional<Counterexample>& best, Counterexample candidate) {
  if (!best || candidate.n < best->n ||
      (candidate.n == best->n && candidate.input < best->input)) {
    best = std::move(candidate);
  }
}

}  // namespace

BijectionReport certify_map(const MapSpec& spec, int max_n, const EnumerationOptions& options) {
  spec.validate();
  BijectionReport report;
  report.spec = spec;
  report.max_n = max_n;
  const PatternBasis source = spec.source();
  const PatternBasis target = spec.target();
  const auto inverse = spec.inverse();
  const CountSequence target_counts = count_sequence(max_n, target, options);
  const MapOptions fast{.validate = false};

  bool all_surjective = true;
  bool failed = false;
  for (int n = 0; n <= max_n; ++n) {
    BijectionRow row;
    row.n = n;
    row.target_size = target_counts.at(n);
    if (inverse) row.roundtrip = true;
    const auto inputs = enumerate_avoiders(n, source, options);
    row.source_size = inputs.size();

    std::optional<Counterexample> local;
    std::vector<std::pair<Permutation, std::size_t>> images;
    images.reserve(inputs.size());
    for (std::size_t idx = 0; idx < inputs.size(); ++idx) {
      const Permutation& p = inputs[idx];
      Permutation out;
      try {
        out = spec.apply(p, fast).output;
      } catch (const std::exception& e) {
        row.image_in_target = false;
        keep_smallest(local, {n, p, std::nullopt, std::string("map raised: ") + e.what()});
        continue;
      }
      if (!avoids_basis(out, target)) {
        row.image_in_target = false;
        keep_smallest(local, {n, p, out, "image outside Av(" + target.label() + ")"});
      }
      if (inverse) {
        bool ok = false;
        try {
          ok = inverse->apply(out, fast).output == p;
        } catch (const std::exception&) {
          ok = false;
        }
        if (!ok) {
          row.roundtrip = false;
          keep_smallest(local, {n, p, out, "inverse does not recover the input"});
        }
      }
      images.emplace_back(std::move(out), idx);
    }

    std::sort(images.begin(), images.end());
    std::size_t distinct = 0;
    for (std::size_t t = 0; t < images.size(); ++t) {
      if (t > 0 && images[t].first == images[t - 1].first) {
        row.injective = false;
        const auto& a = inputs[images[t - 1].second];
        const auto& b = inputs[images[t].second];
        keep_smallest(local, {n, std::min(a, b), images[t].first,
                              "inputs " + a.to_string() + " and " + b.to_string() +
                                  " share an image"});
      } else {
        ++distinct;
      }
    }
    row.image_size = distinct;

    if (local && !report.counterexample) report.counterexample = std::move(local);
    failed = failed || !row.image_in_target || !row.injective || row.roundtrip == false;
    all_surjective = all_surjective && row.surjective();
    report.rows.push_back(row);
  }
  report.verdict = failed           ? MapVerdict::failed
                   : all_surjective ? MapVerdict::bijection
                                    : MapVerdict::injection;
  return report;
}

PatternBasis construct_S_explicit(int k, int j) {
  const std::string label = "S(" + std::to_string(k) + "," + std::to_string(j) + ")";
  if (j == 2 && k >= 2) {
    PatternBasis b = monotone_basis(k, 2, 2);
    b.set_label(label);
    return b;
  }
  if (j == 3 && k >= 2) {
    // 3 1 2 4 5 ... (k+2)
    std::vector<int> extra{3, 1, 2};
    for (int v = 4; v <= k + 2; ++v) extra.push_back(v);
    PatternBasis b = monotone_basis(k, 3, 3);
    b.insert(Permutation::from_trusted(std::move(extra)));
    b.set_label(label);
    return b;
  }
  if (j == 4 && k >= 3) {
    const Permutation tail = Permutation::identity(k - 2);
    PatternBasis b = monotone_basis(k, 4, 4);
    for (const char* head : {"1423", "45123", "35124"}) {
      b.insert(direct_sum(Permutation::parse(head), tail));
    }
    b.set_label(label);
    return b;
  }
  throw UsageError("no explicit basis for k=" + std::to_string(k) + ", j=" + std::to_string(j) +
                   "; use discover_basis");
}

SandwichReport sandwich_check(int k, int j, int max_n, const EnumerationOptions& options) {
  if (k < 2 || j < 2 || j > k) throw UsageError("sandwich check needs 2 <= j <= k");
  SandwichReport report;
  report.k = k;
  report.j = j;
  report.max_n = max_n;
  const PatternBasis increasing = increasing_basis(k);
  const PatternBasis distant = distant_basis(k, j);
  const PatternBasis diagonal = monotone_basis(k, j, j);
  const auto low = count_sequence(max_n, increasing, options);
  const auto mid = count_sequence(max_n, distant, options);
  const auto high = count_sequence(max_n, diagonal, options);
  for (int n = 0; n <= max_n; ++n) {
    SandwichRow row{n, low.at(n), mid.at(n), high.at(n)};
    if (!row.ordered() && !report.witness) {
      report.witness = Counterexample{n, Permutation{}, std::nullopt, "count inequality fails"};
    }
    report.rows.push_back(row);
  }

  report.inclusion_checked_to = std::min(max_n, kInclusionCheckCap);
  for (int n = 0; n <= report.inclusion_checked_to && !report.witness; ++n) {
    for (const auto& p : enumerate_avoiders(n, increasing, options)) {
      if (!avoids_basis(p, distant)) {
        report.witness = Counterexample{n, p, std::nullopt,
                                        "in Av(" + increasing.label() + ") but not Av(" +
                                            distant.label() + ")"};
        break;
      }
    }
    if (report.witness) break;
    for (const auto& p : enumerate_avoiders(n, distant, options)) {
      if (!avoids_basis(p, diagonal)) {
        report.witness = Counterexample{n, p, std::nullopt,
                                        "in Av(" + distant.label() + ") but not Av(" +
                                            diagonal.label() + ")"};
        break;
      }
    }
  }
  return report;
}

SurveyReport survey_almost_distant(const Permutation& underlying, int max_n,
                                   const EnumerationOptions& options) {
  const int k = underlying.size();
  if (k < 1) throw UsageError("survey needs a nonempty underlying pattern");
  SurveyReport report;
  report.underlying = underlying;
  report.max_n = max_n;
  report.diagonal_counts = count_sequence(max_n, monotone_basis(k, 1, 1), options).counts;

  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (int j = 1; j <= k + 1; ++j) {
    for (int i = 1; i <= k + 1; ++i) {
      const auto counts =
          count_sequence(max_n, expand_almost_distant({underlying, j, i}), options).counts;
      auto [it, fresh] = index.try_emplace(counts, report.groups.size());
      if (fresh) {
        report.groups.push_back({{}, counts, counts == report.diagonal_counts});
      }
      report.groups[it->second].specs.emplace_back(j, i);
    }
  }
  return report;
}

}  // namespace patlab
