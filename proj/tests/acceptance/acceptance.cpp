// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when all of them pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "patlab/cli.hpp"
#include "patlab/rank_capability.hpp"
#include "patlab/verification.hpp"

using namespace patlab;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string M(int k, int j, int i) { return MonotoneSpec{k, j, i}.label(); }

bool same_counts(const PatternBasis& a, const PatternBasis& b, int max_n) {
  return verify_wilf(a, b, max_n).equal();
}

bool certified(const MapSpec& spec, int max_n, MapVerdict want) {
  return certify_map(spec, max_n).verdict == want;
}

Check engine_equivalence() {
  Check c;
  int classes = 0;
  for (int k = 2; k <= 4; ++k) {
    for (int j = 1; j <= k + 1; ++j) {
      for (int i = 1; i <= k + 1; ++i) {
        const auto basis = monotone_basis(k, j, i);
        c.require(count_sequence(8, basis).counts == brute_force_count_sequence(8, basis).counts,
                  M(k, j, i) + " differs");
        ++classes;
      }
    }
  }
  if (c.ok) c.detail = std::to_string(classes) + " classes, n <= 8";
  return c;
}

Check wilf_chain() {
  Check c;
  for (auto [k, max_n] : {std::pair{3, 10}, std::pair{4, 9}}) {
    const auto first = count_sequence(max_n, monotone_basis(k, 1, 1));
    for (int t = 2; t <= k + 1; ++t) {
      c.require(count_sequence(max_n, monotone_basis(k, t, t)).counts == first.counts,
                M(k, t, t) + " vs " + M(k, 1, 1));
    }
    if (c.ok) c.detail += (c.detail.empty() ? "" : ", ") + M(k, 1, 1) + " n=" +
                          std::to_string(max_n) + ": " + std::to_string(first.counts.back());
  }
  return c;
}

Check f_certification() {
  Check c;
  for (int k = 3; k <= 4; ++k) {
    for (int i = 0; i < k; ++i) {
      const auto report = certify_map({MapName::F, k, i}, 8);
      c.require(report.verdict == MapVerdict::bijection && !report.counterexample,
                "F k=" + std::to_string(k) + " i=" + std::to_string(i));
      for (const auto& row : report.rows) {
        c.require(row.injective && row.image_in_target && row.surjective() && row.roundtrip == true,
                  "F row n=" + std::to_string(row.n));
      }
    }
  }
  if (c.ok) c.detail = "7 steps, n <= 8, zero counterexamples";
  return c;
}

Check worked_vector() {
  Check c;
  const auto in = Permutation::parse("8 3 2 11 12 5 6 9 10 14 4 1 13 7");
  const auto want = Permutation::parse("8 3 2 11 5 14 4 1 9 10 12 13 6 7");
  const auto out = map_F(in, 4, 2).output;
  c.require(out == want, "F gave " + out.to_string());
  c.require(invert_F(out, 4, 2).output == in, "inverse did not recover the input");
  if (c.ok) c.detail = out.to_string();
  return c;
}

Check g_bijection() {
  Check c;
  for (auto [k, max_n] : {std::pair{3, 9}, std::pair{4, 8}}) {
    c.require(certified({MapName::G, k}, max_n, MapVerdict::bijection), "G k=" + std::to_string(k));
    c.require(certified({MapName::G_inverse, k}, max_n, MapVerdict::bijection),
              "Ginv k=" + std::to_string(k));
    c.require(same_counts(monotone_basis(k, 2, 2), monotone_basis(k, 2, 1), max_n),
              M(k, 2, 2) + " vs " + M(k, 2, 1));
    c.require(same_counts(monotone_basis(k, 2, 2), monotone_basis(k, k, k + 1), max_n),
              M(k, 2, 2) + " vs " + M(k, k, k + 1));
  }
  return c;
}

Check h_injection() {
  Check c;
  const int k = 4;
  for (int j = 2; j <= 4; ++j) {
    const auto report = certify_map({MapName::H, k, j, HSide::minus}, 8);
    c.require(report.verdict != MapVerdict::failed && !report.counterexample, "H j=" + std::to_string(j));
    const auto diag = count_sequence(8, monotone_basis(k, j, j));
    for (int side : {j - 1, j + 1}) {
      const auto other = count_sequence(8, monotone_basis(k, j, side));
      for (int n = 0; n <= 8; ++n) {
        c.require(diag.at(n) >= other.at(n), M(k, j, side) + " exceeds the diagonal at n=" + std::to_string(n));
      }
    }
  }
  const auto naive = adjusted_G(Permutation::parse("312456"), 4, 3);
  c.require(naive.output == Permutation::parse("314256"), "naive map gave " + naive.output.to_string());
  c.require(contains(naive.output, Permutation::parse("23145")), "314256 should contain 23145");
  if (c.ok) c.detail = "312456 -> 314256 contains 23145";
  return c;
}

Check explicit_bases() {
  Check c;
  for (int k = 3; k <= 4; ++k) {
    PatternBasis s3 = monotone_basis(k, 3, 3);
    std::vector<int> extra{3, 1, 2};
    for (int v = 4; v <= k + 2; ++v) extra.push_back(v);
    s3.insert(Permutation(extra));
    c.require(same_counts(monotone_basis(k, 3, 2), s3, 8), M(k, 3, 2) + " vs S(j=3)");
    c.require(same_counts(monotone_basis(k, 4, 3), construct_S_explicit(k, 4), 8), M(k, 4, 3) + " vs S(j=4)");
  }
  return c;
}

Check basis_discovery() {
  Check c;
  PatternBasis want = monotone_basis(4, 3, 3);
  want.insert(Permutation::parse("312456"));
  const auto three = discover_basis(4, 3, 7);
  c.require(three.deletion_closed, "H-image not deletion-closed (4,3)");
  c.require(three.discovered == want, "discover_basis(4,3,7) mismatch");
  const auto two = discover_basis(3, 2, 6);
  c.require(two.deletion_closed, "H-image not deletion-closed (3,2)");
  c.require(two.discovered == monotone_basis(3, 2, 2), "discover_basis(3,2,6) mismatch");
  if (c.ok) c.detail = std::to_string(three.discovered.size()) + " + " + std::to_string(two.discovered.size()) + " basis elements";
  return c;
}

Check sandwich() {
  Check c;
  for (auto [k, max_n] : {std::pair{3, 9}, std::pair{4, 8}}) {
    for (int j = 2; j <= k; ++j) {
      const auto r = sandwich_check(k, j, max_n);
      c.require(r.holds(), "sandwich k=" + std::to_string(k) + " j=" + std::to_string(j));
      c.require(r.inclusion_checked_to == kInclusionCheckCap, "inclusions not checked to n=8");
    }
  }
  return c;
}

Check classical_anchors() {
  Check c;
  const std::vector<std::uint64_t> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  c.require(count_sequence(9, PatternBasis({Permutation::parse("123")})).counts == catalan, "Catalan");
  std::uint64_t fact = 1;
  std::vector<std::uint64_t> factorials{1};
  for (int n = 1; n <= 6; ++n) factorials.push_back(fact *= static_cast<std::uint64_t>(n));
  for (int k = 2; k <= 5; ++k) {
    for (int j = 1; j <= k + 1; ++j) {
      const auto basis = monotone_basis(k, j, 1);
      const auto seq = count_sequence(basis.min_length() - 1, basis);
      for (int n = 0; n <= seq.max_n(); ++n) {
        c.require(seq.at(n) == factorials[static_cast<std::size_t>(n)], "n! rule for " + M(k, j, 1));
      }
    }
  }
  return c;
}

std::string run_cli_capture(std::vector<std::string> args) {
  args.insert(args.begin(), "patlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

Check property_suite() {
  Check c;
  for (int k = 1; k <= 4; ++k) {
    for (int j = 1; j <= k + 1; ++j) {
      for (int i = 1; i <= k + 1; ++i) {
        c.require(basis_reverse_complement(monotone_basis(k, j, i)) == monotone_basis(k, k + 2 - j, k + 2 - i),
                  "rc identity " + M(k, j, i));
      }
    }
  }

  std::vector<Permutation> patterns;
  for (int m = 1; m <= 5; ++m) {
    for (auto& q : oracle::all(m)) patterns.push_back(q);
  }
  for (int n = 0; n <= 7 && c.ok; ++n) {
    for (const auto& p : oracle::all(n)) {
      const auto rp = reverse_complement(p);
      for (const auto& q : patterns) {
        if (contains(p, q) != contains(rp, reverse_complement(q))) {
          c.require(false, "rc commutation " + p.to_string() + " / " + q.to_string());
        }
      }
    }
  }

  for (int n = 0; n <= 8 && c.ok; ++n) {
    for (const auto& p : oracle::all(n)) {
      for (int k = 1; k <= 5; ++k) {
        const RankCapabilityTable t(p, k);
        const auto want = oracle::rank_capable(p, k);
        for (int r = 1; r <= k; ++r) {
          for (int pos = 1; pos <= n; ++pos) {
            if (t.can_act_as(pos, r) != want[static_cast<std::size_t>(r)][static_cast<std::size_t>(pos)]) {
              c.require(false, "rank table " + p.to_string());
            }
          }
        }
      }
    }
  }

  const std::vector<std::vector<std::string>> configs = {
      {"count", "--class", "M(3,2,2)", "--n", "10", "--format", "csv"},
      {"verify-wilf", "--left", "M(4,1,1)", "--right", "M(4,5,5)", "--n", "9", "--format", "json"},
      {"certify", "--map", "F", "--k", "4", "--i", "2", "--n", "8", "--format", "json"},
      {"basis", "--k", "4", "--j", "3", "--n", "7", "--format", "json"},
      {"survey", "--perm", "123", "--n", "7", "--format", "json"},
  };
  for (const auto& config : configs) {
    auto seq = config;
    seq.push_back("--no-parallel");
    c.require(run_cli_capture(config) == run_cli_capture(seq), "CLI bytes differ for " + config[0]);
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"engine equivalence, k in {2,3,4}, n <= 8", engine_equivalence},
      {"Wilf chain M(3,t,t) n <= 10, M(4,t,t) n <= 9", wilf_chain},
      {"F certification k in {3,4}, n <= 8", f_certification},
      {"worked 14-entry vector for F and its inverse", worked_vector},
      {"G bijection and three-way count equality", g_bijection},
      {"H injection, count inequality, naive map counterexample", h_injection},
      {"explicit S for j = 3, 4", explicit_bases},
      {"basis discovery and deletion closure", basis_discovery},
      {"count sandwich with inclusion witnesses", sandwich},
      {"Catalan and n! anchors", classical_anchors},
      {"property suite and CLI determinism", property_suite},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = check();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!c.ok) ++failures;
    std::printf("criterion %2d %s  %s%s%s (%.1fs)\n", index, c.ok ? "PASS" : "FAIL", name,
                c.detail.empty() ? "" : ": ", c.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", index - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
