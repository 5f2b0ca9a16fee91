#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "patlab/errors.hpp"
#include "patlab/verification.hpp"

using patlab::PatternBasis;
using patlab::Permutation;

namespace {

PatternBasis with(PatternBasis b, std::initializer_list<const char*> extra) {
  for (const char* s : extra) b.insert(Permutation::parse(s));
  return b;
}

}  // namespace

TEST(Wilf, EqualAndUnequal) {
  EXPECT_TRUE(patlab::verify_wilf(patlab::monotone_basis(3, 1, 1), patlab::monotone_basis(3, 2, 2), 9).equal());
  EXPECT_TRUE(patlab::verify_wilf(PatternBasis({Permutation::parse("123")}),
                                  PatternBasis({Permutation::parse("321")}), 8).equal());
  const auto r = patlab::verify_wilf(PatternBasis({Permutation::parse("123")}),
                                     PatternBasis({Permutation::parse("1234")}), 6);
  EXPECT_EQ(r.diverges_at, 3);
}

TEST(Wilf, ReverseComplementPairs) {
  for (int k = 1; k <= 4; ++k) {
    for (int j = 1; j <= k + 1; ++j) {
      for (int i = 1; i <= k + 1; ++i) {
        EXPECT_TRUE(patlab::verify_wilf(patlab::monotone_basis(k, j, i),
                                        patlab::monotone_basis(k, k + 2 - j, k + 2 - i), 8).equal());
      }
    }
  }
}

TEST(ConstructS, ExplicitBases) {
  EXPECT_EQ(patlab::construct_S_explicit(4, 2), patlab::monotone_basis(4, 2, 2));
  EXPECT_EQ(patlab::construct_S_explicit(4, 3), with(patlab::monotone_basis(4, 3, 3), {"312456"}));
  EXPECT_EQ(patlab::construct_S_explicit(3, 3), with(patlab::monotone_basis(3, 3, 3), {"31245"}));
  EXPECT_EQ(patlab::construct_S_explicit(3, 4),
            with(patlab::monotone_basis(3, 4, 4), {"14235", "451236", "351246"}));
  EXPECT_THROW(patlab::construct_S_explicit(5, 5), patlab::UsageError);
  EXPECT_THROW(patlab::construct_S_explicit(2, 4), patlab::UsageError);
}

TEST(ConstructS, CountsMatch) {
  EXPECT_TRUE(patlab::verify_wilf(patlab::monotone_basis(3, 2, 1), patlab::construct_S_explicit(3, 2), 9).equal());
  EXPECT_TRUE(patlab::verify_wilf(patlab::monotone_basis(4, 3, 2), patlab::construct_S_explicit(4, 3), 8).equal());
  EXPECT_TRUE(patlab::verify_wilf(patlab::monotone_basis(4, 4, 3), patlab::construct_S_explicit(4, 4), 8).equal());
}

// Stronger than counts: Av_n(S) is exactly the H-image of Av_n(M(k,j,j-1)).
TEST(ConstructS, EqualsImageOfH) {
  for (int k = 3; k <= 4; ++k) {
    for (int j = 2; j <= std::min(k, 4); ++j) {
      for (int n = 0; n <= 7; ++n) {
        std::vector<Permutation> image;
        for (const auto& p : oracle::avoiders(n, patlab::monotone_basis(k, j, j - 1).patterns())) {
          image.push_back(patlab::map_H(p, k, j, patlab::HSide::minus, {.validate = false}).output);
        }
        std::sort(image.begin(), image.end());
        EXPECT_EQ(image, oracle::avoiders(n, patlab::construct_S_explicit(k, j).patterns()))
            << k << "," << j << " n=" << n;
      }
    }
  }
}

TEST(Certify, Verdicts) {
  const auto f = patlab::certify_map({patlab::MapName::F, 4, 2}, 8);
  EXPECT_EQ(f.verdict, patlab::MapVerdict::bijection);
  EXPECT_FALSE(f.counterexample);
  ASSERT_EQ(f.rows.size(), 9u);
  for (const auto& row : f.rows) EXPECT_EQ(row.roundtrip, true);

  const auto h = patlab::certify_map({patlab::MapName::H, 4, 3}, 8);
  EXPECT_EQ(h.verdict, patlab::MapVerdict::injection);
  EXPECT_FALSE(h.rows.back().surjective());
  EXPECT_LT(h.rows.back().source_size, h.rows.back().target_size);

  const auto gadj = patlab::certify_map({patlab::MapName::G_adjusted, 4, 3}, 6);
  EXPECT_EQ(gadj.verdict, patlab::MapVerdict::failed);
  ASSERT_TRUE(gadj.counterexample);
  EXPECT_EQ(gadj.counterexample->input, Permutation::parse("312456"));
  EXPECT_EQ(gadj.counterexample->output, Permutation::parse("314256"));
}

TEST(Discovery, KnownBases) {
  const auto three = patlab::discover_basis(4, 3, 7);
  EXPECT_TRUE(three.deletion_closed);
  EXPECT_EQ(three.discovered, with(patlab::monotone_basis(4, 3, 3), {"312456"}));
  EXPECT_EQ(three.matches_prediction, true);

  const auto two = patlab::discover_basis(3, 2, 6);
  EXPECT_EQ(two.discovered, patlab::monotone_basis(3, 2, 2));
}

TEST(Sandwich, Holds) {
  const auto r = patlab::sandwich_check(3, 2, 9);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.inclusion_checked_to, 8);
  for (const auto& row : r.rows) EXPECT_TRUE(row.ordered());
  EXPECT_TRUE(patlab::sandwich_check(4, 3, 8).holds());
}

TEST(Growth, RecomputedFromCounts) {
  const auto d = patlab::growth_diagnostics(PatternBasis({Permutation::parse("123")}), 10);
  for (int n = 1; n <= 10; ++n) {
    const double want = std::pow(static_cast<double>(d.counts.at(n)), 1.0 / n);
    EXPECT_NEAR(d.roots[static_cast<std::size_t>(n)], want, 1e-9);
    EXPECT_LT(d.roots[static_cast<std::size_t>(n)], 4.0);
    if (n >= 2) EXPECT_GT(d.roots[static_cast<std::size_t>(n)], d.roots[static_cast<std::size_t>(n - 1)]);
  }
  ASSERT_TRUE(d.ratios[10]);
  EXPECT_EQ(d.ratios[10]->num * d.counts.at(9), d.ratios[10]->den * d.counts.at(10));
  EXPECT_EQ(patlab::format_root(2.0), "2");
}

TEST(Growth, ReferenceBounds) {
  const auto d42 = patlab::reference_growth_bounds(patlab::parse_class_expression("D(4,2)"));
  ASSERT_TRUE(d42);
  EXPECT_EQ(*d42, std::make_pair(9.0, 10.0));
  EXPECT_EQ(patlab::distant_growth_bounds(3), std::make_pair(4.0, 5.0));
  EXPECT_FALSE(patlab::reference_growth_bounds(patlab::parse_class_expression("123;321")));
}

TEST(Survey, DiagonalGroupsTogether) {
  const auto r = patlab::survey_almost_distant(Permutation::parse("123"), 7);
  const patlab::SurveyGroup* diagonal = nullptr;
  for (const auto& g : r.groups) {
    for (const auto& s : g.specs) {
      if (s == std::make_pair(1, 1)) diagonal = &g;
    }
  }
  ASSERT_NE(diagonal, nullptr);
  EXPECT_TRUE(diagonal->matches_diagonal);
  for (int j = 1; j <= 4; ++j) {
    EXPECT_NE(std::find(diagonal->specs.begin(), diagonal->specs.end(), std::make_pair(j, j)),
              diagonal->specs.end());
  }
  // Every spec lands in exactly one group, and rc pairs share a group.
  std::size_t total = 0;
  for (const auto& g : r.groups) {
    total += g.specs.size();
    for (const auto& [j, i] : g.specs) {
      EXPECT_NE(std::find(g.specs.begin(), g.specs.end(), std::make_pair(5 - j, 5 - i)), g.specs.end());
    }
  }
  EXPECT_EQ(total, 16u);
}
