#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "patlab/pattern_classes.hpp"
#include "patlab/permutation.hpp"

namespace patlab {

enum class MapName { F, F_inverse, G, G_inverse, H, G_adjusted };

/// "F", "Finv", "G", "Ginv", "H", "Gadj".
const char* to_string(MapName name);
MapName parse_map_name(std::string_view text);

/// Position sentinel standing for "the start of the permutation".
inline constexpr int kStartAnchor = 0;

/// The sets used by F for the step M(k,i+1,i+1) -> M(k,i+2,i+2).
///
/// All entries are 1-based positions. B holds the entries able to act as
/// rank i+1 of an occurrence of 12...k; A those able to act as rank i but
/// not in B; C those able to act as rank i+2 but not in B. When i = 0, A is
/// the start anchor {0}; when i = k-1, C is the end anchor {n+1}.
struct RoleSets {
  int k = 0;
  int i = 0;
  int n = 0;
  std::vector<int> A;
  std::vector<int> B;
  std::vector<int> C;
  /// b -> the rightmost C position whose value exceeds p(b), or n+1.
  std::map<int, int> f;
  /// b -> its unique A partner (ranks i, i+1 together), or kStartAnchor.
  std::map<int, int> partner;

  int end_anchor() const noexcept { return n + 1; }
};

/// A reversed block of consecutive positions first..last, ending just
/// before position `anchor`.
struct Window {
  int first = 0;
  int last = 0;
  int anchor = 0;

  bool operator==(const Window&) const = default;
};

/// Source/target membership; empty when not checked.
struct ClassChecks {
  std::optional<bool> pre;
  std::optional<bool> post;
};

struct MapResult {
  Permutation input;
  Permutation output;
  std::variant<RoleSets, std::vector<Window>> roles;
  MapName map = MapName::F;
  ClassChecks checks;
};

struct MapOptions {
  /// Check the source class (DomainError on failure) and record target
  /// membership. Off for bulk runs over an already enumerated class.
  bool validate = true;
};

/// Throws DomainError if `p` is not in Av(M(k,i+1,i+1)) (when validating);
/// FindingError if f(b) or the A partner of some b is missing or ambiguous.
RoleSets role_sets(const Permutation& p, int k, int i, const MapOptions& options = {});

/// Av(M(k,i+1,i+1)) -> Av(M(k,i+2,i+2)), 0 <= i <= k-1. Each B entry is
/// reinserted directly before f(b); entries sharing an image go in
/// increasing order.
MapResult map_F(const Permutation& p, int k, int i, const MapOptions& options = {});

/// Recovers the F-preimage of `w`. Throws NotInImageError when there is none.
MapResult invert_F(const Permutation& w, int k, int i, const MapOptions& options = {});

enum class GDirection { to_21, to_22 };

/// Av(M(k,2,2)) <-> Av(M(k,2,1)). Both directions reverse the block from
/// the leftmost smaller entry up to (not including) each entry that can act
/// as a 2 but not as a 1 in 12...k.
MapResult map_G(const Permutation& p, int k, GDirection direction,
                const MapOptions& options = {});

/// Which neighbour of the diagonal H starts from.
enum class HSide {
  minus,  ///< Av(M(k,j,j-1)) -> Av(M(k,j,j))
  plus,   ///< Av(M(k,j,j+1)) -> Av(M(k,j,j)), by reverse-complement conjugation
};

/// Injection into Av(M(k,j,j)), 2 <= j <= k.
MapResult map_H(const Permutation& p, int k, int j, HSide side = HSide::minus,
                const MapOptions& options = {});

/// The G construction carried over to rank j: reverses blocks in front of
/// entries that can act as j but not j-1. Defined on Av(M(k,j,j)); for j = 2
/// it is G. For j > 2 its output can leave Av(M(k,j,j-1)), which `checks.post`
/// reports.
MapResult adjusted_G(const Permutation& p, int k, int j, const MapOptions& options = {});

/// A map together with its parameters, source and target classes.
struct MapSpec {
  MapName name = MapName::F;
  int k = 0;
  /// i for F/Finv, j for H/Gadj; ignored by G.
  int param = 0;
  HSide side = HSide::minus;

  /// Throws UsageError for parameter combinations outside the map's domain.
  void validate() const;
  PatternBasis source() const;
  PatternBasis target() const;
  MapResult apply(const Permutation& p, const MapOptions& options = {}) const;
  /// The inverse map, when one exists.
  std::optional<MapSpec> inverse() const;
  std::string label() const;
};

}  // namespace patlab
