#include "patlab/structure_maps.hpp"

#include <algorithm>
#include <set>

#include "patlab/enumeration.hpp"
#include "patlab/errors.hpp"
#include "patlab/rank_capability.hpp"

namespace patlab {

const char* to_string(MapName name) {
  switch (name) {
    case MapName::F: return "F";
    case MapName::F_inverse: return "Finv";
    case MapName::G: return "G";
    case MapName::G_inverse: return "Ginv";
    case MapName::H: return "H";
    case MapName::G_adjusted: return "Gadj";
  }
  return "?";
}

MapName parse_map_name(std::string_view text) {
  for (MapName m : {MapName::F, MapName::F_inverse, MapName::G, MapName::G_inverse, MapName::H,
                    MapName::G_adjusted}) {
    if (text == to_string(m)) return m;
  }
  throw UsageError("unknown map '" + std::string(text) + "' (expected F, Finv, G, Ginv, H, Gadj)");
}

namespace {

void require_source(const Permutation& p, const PatternBasis& basis, const MapOptions& options,
                    ClassChecks& checks) {
  if (!options.validate) return;
  checks.pre = avoids_basis(p, basis);
  if (!*checks.pre) {
    throw DomainError(p.to_string() + " is not in Av(" + basis.label() + ")");
  }
}

void check_F_params(int k, int i) {
  if (k < 1) throw UsageError("F needs k >= 1");
  if (i < 0 || i > k - 1) throw UsageError("F needs 0 <= i <= k-1");
}

void check_j(int k, int j, const char* map) {
  if (k < 2 || j < 2 || j > k) {
    throw UsageError(std::string(map) + " needs 2 <= j <= k");
  }
}

bool in(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Reverses, for each entry a that can act as rank j (and, when
// `exclude_lower`, not as rank j-1), the block from the leftmost entry able to
// act as rank j-1 together with a up to a's predecessor. Blocks must be
// monotone in the stated direction before reversal and pairwise disjoint.
MapResult reverse_blocks(const Permutation& p, int k, int j, bool exclude_lower,
                         bool expect_increasing) {
  const RankCapabilityTable table(p, k);
  const int n = p.size();
  std::vector<Window> windows;
  for (int a = 1; a <= n; ++a) {
    if (!table.can_act_as(a, j)) continue;
    if (exclude_lower && table.can_act_as(a, j - 1)) continue;
    int start = 0;
    for (int s = 1; s < a; ++s) {
      if (table.jointly(s, a, j - 1)) {
        start = s;
        break;
      }
    }
    if (start == 0) throw FindingError("no partner for a block end", p.to_string());
    windows.push_back({start, a - 1, a});
  }
  std::vector<int> out(p.values().begin(), p.values().end());
  int covered = 0;
  for (const auto& w : windows) {
    if (w.first <= covered) throw FindingError("reversal blocks overlap", p.to_string());
    covered = w.last;
    for (int t = w.first; t < w.last; ++t) {
      const bool up = p(t) < p(t + 1);
      if (up != expect_increasing) {
        throw FindingError(expect_increasing ? "block is not increasing" : "block is not decreasing",
                           p.to_string());
      }
    }
    std::reverse(out.begin() + (w.first - 1), out.begin() + w.last);
  }
  MapResult r;
  r.input = p;
  r.output = Permutation::from_trusted(std::move(out));
  r.roles = std::move(windows);
  return r;
}

void record_target(MapResult& r, const PatternBasis& target, const MapOptions& options) {
  if (options.validate) r.checks.post = avoids_basis(r.output, target);
}

}  // namespace

RoleSets role_sets(const Permutation& p, int k, int i, const MapOptions& options) {
  check_F_params(k, i);
  ClassChecks checks;
  require_source(p, monotone_basis(k, i + 1, i + 1), options, checks);

  const RankCapabilityTable table(p, k);
  const int n = p.size();
  RoleSets roles;
  roles.k = k;
  roles.i = i;
  roles.n = n;
  roles.B = table.positions_with_rank(i + 1);
  if (i == 0) {
    roles.A = {kStartAnchor};
  } else {
    for (int t : table.positions_with_rank(i)) {
      if (!in(roles.B, t)) roles.A.push_back(t);
    }
  }
  if (i == k - 1) {
    roles.C = {n + 1};
  } else {
    for (int t : table.positions_with_rank(i + 2)) {
      if (!in(roles.B, t)) roles.C.push_back(t);
    }
  }

  for (int b : roles.B) {
    if (i == k - 1) {
      roles.f[b] = n + 1;
    } else {
      int image = -1;
      for (int c : roles.C) {
        if (p(c) > p(b)) image = c;
      }
      if (image < 0) {
        throw FindingError("f(" + std::to_string(p(b)) + ") does not exist", p.to_string());
      }
      roles.f[b] = image;
    }

    if (i == 0) {
      roles.partner[b] = kStartAnchor;
    } else {
      int partner = -1;
      for (int a : roles.A) {
        if (!table.jointly(a, b, i)) continue;
        if (partner >= 0) {
          throw FindingError("entry " + std::to_string(p(b)) + " has two A partners",
                             p.to_string());
        }
        partner = a;
      }
      if (partner < 0) {
        throw FindingError("entry " + std::to_string(p(b)) + " has no A partner", p.to_string());
      }
      roles.partner[b] = partner;
    }
  }
  return roles;
}

MapResult map_F(const Permutation& p, int k, int i, const MapOptions& options) {
  MapResult r;
  r.map = MapName::F;
  r.input = p;
  RoleSets roles = role_sets(p, k, i, options);
  if (options.validate) r.checks.pre = true;

  // Non-B entries keep their order; pending B values are flushed in
  // increasing order in front of their f-image (or at the very end).
  std::map<int, std::vector<int>> pending;
  for (const auto& [b, c] : roles.f) pending[c].push_back(p(b));
  for (auto& [c, values] : pending) std::sort(values.begin(), values.end());

  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (int t = 1; t <= p.size(); ++t) {
    if (in(roles.B, t)) continue;
    if (auto it = pending.find(t); it != pending.end()) {
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
    out.push_back(p(t));
  }
  if (auto it = pending.find(roles.end_anchor()); it != pending.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  r.output = Permutation::from_trusted(std::move(out));
  r.roles = std::move(roles);
  record_target(r, monotone_basis(k, i + 2, i + 2), options);
  return r;
}

// B' is read off w directly (F preserves the rank-(i+1) entries). The partner
// of b in the preimage is the leftmost non-B' entry before b that is smaller
// and can end an increasing run of length i: entries that only become
// candidates in w were overtaken by b and therefore lie to the right of the
// true partner.
MapResult invert_F(const Permutation& w, int k, int i, const MapOptions& options) {
  check_F_params(k, i);
  MapResult r;
  r.map = MapName::F_inverse;
  r.input = w;
  require_source(w, monotone_basis(k, i + 2, i + 2), options, r.checks);

  const RankCapabilityTable table(w, k);
  const int n = w.size();
  RoleSets roles;
  roles.k = k;
  roles.i = i;
  roles.n = n;
  roles.B = table.positions_with_rank(i + 1);

  std::map<int, std::vector<int>> pending;
  for (int b : roles.B) {
    int partner = kStartAnchor;
    if (i > 0) {
      partner = -1;
      for (int s = 1; s < b; ++s) {
        if (!in(roles.B, s) && w(s) < w(b) && table.up(s) >= i) {
          partner = s;
          break;
        }
      }
      if (partner < 0) {
        throw NotInImageError(w.to_string() + ": entry " + std::to_string(w(b)) +
                              " has no A partner, so it is not an image of F");
      }
    }
    roles.partner[b] = partner;
    pending[partner].push_back(w(b));
  }
  for (auto& [a, values] : pending) std::sort(values.begin(), values.end());
  std::set<int> partners;
  for (const auto& [b, a] : roles.partner) partners.insert(a);
  roles.A.assign(partners.begin(), partners.end());
  if (i == 0) roles.A = {kStartAnchor};

  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  if (auto it = pending.find(kStartAnchor); it != pending.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  for (int t = 1; t <= n; ++t) {
    if (in(roles.B, t)) continue;
    out.push_back(w(t));
    if (auto it = pending.find(t); it != pending.end()) {
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
  }
  r.output = Permutation::from_trusted(std::move(out));
  r.roles = std::move(roles);

  if (options.validate) {
    r.checks.post = avoids_basis(r.output, monotone_basis(k, i + 1, i + 1));
    if (!*r.checks.post ||
        map_F(r.output, k, i, MapOptions{.validate = false}).output != w) {
      throw NotInImageError(w.to_string() + " is not an image of F");
    }
  }
  return r;
}

MapResult map_G(const Permutation& p, int k, GDirection direction, const MapOptions& options) {
  if (k < 2) throw UsageError("G needs k >= 2");
  const bool forward = direction == GDirection::to_21;
  ClassChecks checks;
  require_source(p, monotone_basis(k, 2, forward ? 2 : 1), options, checks);
  MapResult r = reverse_blocks(p, k, 2, /*exclude_lower=*/true, /*expect_increasing=*/forward);
  r.map = forward ? MapName::G : MapName::G_inverse;
  r.checks = checks;
  record_target(r, monotone_basis(k, 2, forward ? 1 : 2), options);
  return r;
}

MapResult map_H(const Permutation& p, int k, int j, HSide side, const MapOptions& options) {
  check_j(k, j, "H");
  ClassChecks checks;
  if (side == HSide::plus) {
    require_source(p, monotone_basis(k, j, j + 1), options, checks);
    const int n = p.size();
    MapResult inner = reverse_blocks(reverse_complement(p), k, k + 2 - j, false, false);
    MapResult r;
    r.map = MapName::H;
    r.input = p;
    r.output = reverse_complement(inner.output);
    auto windows = std::get<std::vector<Window>>(inner.roles);
    for (auto& w : windows) w = {n + 1 - w.last, n + 1 - w.first, n + 1 - w.anchor};
    std::reverse(windows.begin(), windows.end());
    r.roles = std::move(windows);
    r.checks = checks;
    record_target(r, monotone_basis(k, j, j), options);
    return r;
  }
  require_source(p, monotone_basis(k, j, j - 1), options, checks);
  MapResult r = reverse_blocks(p, k, j, /*exclude_lower=*/false, /*expect_increasing=*/false);
  r.map = MapName::H;
  r.checks = checks;
  record_target(r, monotone_basis(k, j, j), options);
  return r;
}

MapResult adjusted_G(const Permutation& p, int k, int j, const MapOptions& options) {
  check_j(k, j, "Gadj");
  ClassChecks checks;
  require_source(p, monotone_basis(k, j, j), options, checks);
  MapResult r = reverse_blocks(p, k, j, /*exclude_lower=*/true, /*expect_increasing=*/true);
  r.map = MapName::G_adjusted;
  r.checks = checks;
  record_target(r, monotone_basis(k, j, j - 1), options);
  return r;
}

void MapSpec::validate() const {
  switch (name) {
    case MapName::F:
    case MapName::F_inverse: check_F_params(k, param); break;
    case MapName::G:
    case MapName::G_inverse:
      if (k < 2) throw UsageError("G needs k >= 2");
      break;
    case MapName::H: check_j(k, param, "H"); break;
    case MapName::G_adjusted: check_j(k, param, "Gadj"); break;
  }
}

PatternBasis MapSpec::source() const {
  validate();
  switch (name) {
    case MapName::F: return monotone_basis(k, param + 1, param + 1);
    case MapName::F_inverse: return monotone_basis(k, param + 2, param + 2);
    case MapName::G: return monotone_basis(k, 2, 2);
    case MapName::G_inverse: return monotone_basis(k, 2, 1);
    case MapName::H:
      return monotone_basis(k, param, side == HSide::minus ? param - 1 : param + 1);
    case MapName::G_adjusted: return monotone_basis(k, param, param);
  }
  return {};
}

PatternBasis MapSpec::target() const {
  validate();
  switch (name) {
    case MapName::F: return monotone_basis(k, param + 2, param + 2);
    case MapName::F_inverse: return monotone_basis(k, param + 1, param + 1);
    case MapName::G: return monotone_basis(k, 2, 1);
    case MapName::G_inverse: return monotone_basis(k, 2, 2);
    case MapName::H: return monotone_basis(k, param, param);
    case MapName::G_adjusted: return monotone_basis(k, param, param - 1);
  }
  return {};
}

MapResult MapSpec::apply(const Permutation& p, const MapOptions& options) const {
  switch (name) {
    case MapName::F: return map_F(p, k, param, options);
    case MapName::F_inverse: return invert_F(p, k, param, options);
    case MapName::G: return map_G(p, k, GDirection::to_21, options);
    case MapName::G_inverse: return map_G(p, k, GDirection::to_22, options);
    case MapName::H: return map_H(p, k, param, side, options);
    case MapName::G_adjusted: return adjusted_G(p, k, param, options);
  }
  throw UsageError("unknown map");
}

std::optional<MapSpec> MapSpec::inverse() const {
  switch (name) {
    case MapName::F: return MapSpec{MapName::F_inverse, k, param, side};
    case MapName::F_inverse: return MapSpec{MapName::F, k, param, side};
    case MapName::G: return MapSpec{MapName::G_inverse, k, param, side};
    case MapName::G_inverse: return MapSpec{MapName::G, k, param, side};
    default: return std::nullopt;
  }
}

std::string MapSpec::label() const {
  std::string out = std::string(to_string(name)) + "(k=" + std::to_string(k);
  switch (name) {
    case MapName::F:
    case MapName::F_inverse: out += ",i=" + std::to_string(param); break;
    case MapName::H:
      out += ",j=" + std::to_string(param) + (side == HSide::plus ? ",side=plus" : "");
      break;
    case MapName::G_adjusted: out += ",j=" + std::to_string(param); break;
    default: break;
  }
  return out + ")";
}

}  // namespace patlab
