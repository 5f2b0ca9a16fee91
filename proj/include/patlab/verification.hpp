#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patlab/class_expression.hpp"
#include "patlab/enumeration.hpp"
#include "patlab/pattern_classes.hpp"
#include "patlab/structure_maps.hpp"

namespace patlab {

// ---------------------------------------------------------------------------
// Wilf equivalence

struct WilfReport {
  PatternBasis left_basis;
  PatternBasis right_basis;
  int max_n = 0;
  CountSequence left_counts;
  CountSequence right_counts;
  /// First n where the counts differ.
  std::optional<int> diverges_at;

  bool equal() const noexcept { return !diverges_at.has_value(); }
};

/// Exact count comparison for n = 0..max_n.
WilfReport verify_wilf(const PatternBasis& left, const PatternBasis& right, int max_n,
                       const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// Map certification

struct Counterexample {
  int n = 0;
  Permutation input;
  std::optional<Permutation> output;
  std::string reason;
};

struct BijectionRow {
  int n = 0;
  std::uint64_t source_size = 0;
  std::uint64_t target_size = 0;
  std::uint64_t image_size = 0;
  bool image_in_target = true;
  bool injective = true;
  /// Empty when the map has no inverse.
  std::optional<bool> roundtrip;

  bool surjective() const noexcept { return image_size == target_size; }
};

enum class MapVerdict { bijection, injection, failed };
const char* to_string(MapVerdict v);

struct BijectionReport {
  MapSpec spec;
  int max_n = 0;
  std::vector<BijectionRow> rows;
  /// Smallest failing input (by length, then lexicographic).
  std::optional<Counterexample> counterexample;
  MapVerdict verdict = MapVerdict::failed;
};

/// For each n <= max_n: maps the whole source class and checks that the
/// image lies in the target class, that no two inputs collide, whether the
/// image fills the target, and (when an inverse exists) the roundtrip.
BijectionReport certify_map(const MapSpec& spec, int max_n,
                            const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// Finite bases S with Av(M(k,j,j-1)) = Av(S)

/// Explicit bases for j = 2, 3, 4. Throws UsageError for other (k, j);
/// use discover_basis there.
PatternBasis construct_S_explicit(int k, int j);

struct BasisResult {
  MonotoneSpec source_spec;
  PatternBasis discovered;
  std::optional<PatternBasis> predicted;
  int max_len = 0;
  /// |H(Av_n(M(k,j,j-1)))| for n = 0..max_len.
  std::vector<std::uint64_t> image_sizes;
  bool deletion_closed = true;
  /// discovered == predicted restricted to lengths <= max_len.
  std::optional<bool> matches_prediction;
};

struct DiscoveryOptions {
  EnumerationOptions enumeration;
  /// Engine used to enumerate the source class.
  CountMethod engine = CountMethod::pruned_tree;
};

/// Minimal permutations outside the H-image, up to length max_len.
/// Throws FindingError if the image is not closed under deletion.
BasisResult discover_basis(int k, int j, int max_len, const DiscoveryOptions& options = {});

// ---------------------------------------------------------------------------
// Growth diagnostics

struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

/// Finite-n data only; nothing here claims convergence.
struct GrowthDiagnostics {
  std::string basis_label;
  CountSequence counts;
  /// ratios[n] = a_n / a_{n-1} reduced, for n >= 1; empty when a_{n-1} = 0.
  std::vector<std::optional<Ratio>> ratios;
  /// roots[n] = a_n^(1/n) for n >= 1 (roots[0] unused).
  std::vector<double> roots;
  std::optional<std::pair<double, double>> reference_bounds;
};

GrowthDiagnostics growth_diagnostics(const PatternBasis& basis, int max_n,
                                     std::optional<std::pair<double, double>> bounds = {},
                                     const EnumerationOptions& options = {});

/// a^(1/n) as reported by growth_diagnostics.
double nth_root(std::uint64_t a, int n);

/// Twelve significant digits.
std::string format_root(double value);

/// [(k-1)^2, (k-1)^2 + 1]: the interval known to contain the growth rate of
/// the monotone distant class D(k,j), 2 <= j <= k.
std::pair<double, double> distant_growth_bounds(int k);

/// Known growth-rate interval for a single-term expression, when one is
/// available from the literature (monotone classes only).
std::optional<std::pair<double, double>> reference_growth_bounds(const ClassExpression& expr);

// ---------------------------------------------------------------------------
// Count sandwich Av(12...k) <= Av(D(k,j)) <= Av(M(k,j,j))

struct SandwichRow {
  int n = 0;
  std::uint64_t increasing = 0;
  std::uint64_t distant = 0;
  std::uint64_t diagonal = 0;

  bool ordered() const noexcept { return increasing <= distant && distant <= diagonal; }
};

struct SandwichReport {
  int k = 0;
  int j = 0;
  int max_n = 0;
  std::vector<SandwichRow> rows;
  /// Set inclusions were checked on enumerated classes up to this length.
  int inclusion_checked_to = 0;
  std::optional<Counterexample> witness;

  bool holds() const noexcept { return !witness.has_value(); }
};

inline constexpr int kInclusionCheckCap = 8;

SandwichReport sandwich_check(int k, int j, int max_n, const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// Almost-distant survey

struct SurveyGroup {
  /// (box_pos, removed) pairs sharing one count sequence.
  std::vector<std::pair<int, int>> specs;
  std::vector<std::uint64_t> counts;
  /// Sequence equals that of the monotone diagonal M(k,1,1), k = |q'|.
  bool matches_diagonal = false;
};

struct SurveyReport {
  Permutation underlying;
  int max_n = 0;
  std::vector<std::uint64_t> diagonal_counts;
  std::vector<SurveyGroup> groups;
};

/// Groups all (k+1)^2 almost-distant classes over `underlying` by count
/// sequence up to max_n. Groups are ordered by their first spec.
SurveyReport survey_almost_distant(const Permutation& underlying, int max_n,
                                   const EnumerationOptions& options = {});

}  // namespace patlab
