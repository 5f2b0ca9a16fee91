#include <gtest/gtest.h>

#include "oracles.hpp"
#include "patlab/class_expression.hpp"
#include "patlab/enumeration.hpp"
#include "patlab/errors.hpp"
#include "patlab/pattern_classes.hpp"

using patlab::PatternBasis;
using patlab::Permutation;

namespace {

PatternBasis B(std::initializer_list<const char*> items) {
  std::vector<Permutation> v;
  for (const char* s : items) v.push_back(Permutation::parse(s));
  return PatternBasis(v);
}

// Occurrence of q in p whose letters j-1 and j are not adjacent in p
// (j = 1: not at the very start, j = k+1: not at the very end).
bool distant_occurs(const Permutation& p, const Permutation& q, int j) {
  const int n = p.size();
  const int k = q.size();
  bool found = false;
  oracle::for_each_subset(n, k, [&](const std::vector<int>& idx) {
    if (found || !oracle::same_order(p, idx, q)) return;
    const int before = j == 1 ? -1 : idx[static_cast<std::size_t>(j - 2)];
    const int after = j == k + 1 ? n : idx[static_cast<std::size_t>(j - 1)];
    found = after - before >= 2;
  });
  return found;
}

}  // namespace

TEST(PatternClasses, ExpansionExamples) {
  const auto q = Permutation::parse("123");
  EXPECT_EQ(patlab::expand_distant({q, 3}), B({"2314", "1324", "1234", "1243"}));
  EXPECT_EQ(patlab::expand_distant({Permutation::parse("12"), 2}), B({"213", "123", "132"}));
  EXPECT_EQ(patlab::expand_almost_distant({q, 3, 2}), B({"2314", "1234", "1243"}));
  EXPECT_EQ(patlab::monotone_basis(4, 3, 3), B({"23145", "13245", "12435", "12534"}));
  EXPECT_EQ(patlab::monotone_basis(2, 1, 1), B({"213", "312"}));
  EXPECT_EQ(patlab::insertion_pattern(q, 1, 1), Permutation::parse("1234"));
}

TEST(PatternClasses, ExpansionFollowsInsertionRule) {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& q : oracle::all(k)) {
      for (int j = 1; j <= k + 1; ++j) {
        std::vector<Permutation> want;
        for (int v = 1; v <= k + 1; ++v) want.push_back(oracle::insert_at(q, j, v));
        EXPECT_EQ(patlab::expand_distant({q, j}), PatternBasis(want));
        for (int i = 1; i <= k + 1; ++i) {
          std::vector<Permutation> drop;
          for (int v = 1; v <= k + 1; ++v) {
            if (v != i) drop.push_back(oracle::insert_at(q, j, v));
          }
          EXPECT_EQ(patlab::expand_almost_distant({q, j, i}), PatternBasis(drop));
        }
      }
    }
  }
}

// Avoiding the expansion is the same as avoiding the gapped occurrence.
TEST(PatternClasses, DistantExpansionMatchesGapSemantics) {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& q : oracle::all(k)) {
      for (int j = 1; j <= k + 1; ++j) {
        const auto basis = patlab::expand_distant({q, j});
        for (int n = 0; n <= 7; ++n) {
          for (const auto& p : oracle::all(n)) {
            ASSERT_EQ(patlab::avoids_basis(p, basis), !distant_occurs(p, q, j))
                << p.to_string() << " " << q.to_string() << " j=" << j;
          }
        }
      }
    }
  }
}

TEST(PatternClasses, SpecValidation) {
  EXPECT_THROW(patlab::monotone_basis(0, 1, 1), patlab::UsageError);
  EXPECT_THROW(patlab::monotone_basis(3, 5, 1), patlab::UsageError);
  EXPECT_THROW(patlab::monotone_basis(3, 1, 0), patlab::UsageError);
  EXPECT_EQ((patlab::MonotoneSpec{4, 3, 2}).label(), "M(4,3,2)");
}

// Reverse-complement of M(k,j,i) is M(k,k+2-j,k+2-i), all k <= 5.
TEST(PatternClasses, ReverseComplementIdentity) {
  for (int k = 1; k <= 5; ++k) {
    for (int j = 1; j <= k + 1; ++j) {
      for (int i = 1; i <= k + 1; ++i) {
        EXPECT_EQ(patlab::basis_reverse_complement(patlab::monotone_basis(k, j, i)),
                  patlab::monotone_basis(k, k + 2 - j, k + 2 - i))
            << k << "," << j << "," << i;
      }
    }
  }
}

TEST(PatternClasses, BasisBookkeeping) {
  auto b = B({"321", "12", "321"});
  EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(b.min_length(), 2);
  EXPECT_EQ(b.max_length(), 3);
  EXPECT_TRUE(b.has(Permutation::parse("12")));
  EXPECT_TRUE(patlab::is_antichain(b));
  b.insert(Permutation::parse("132"));
  EXPECT_FALSE(patlab::is_antichain(b));
  EXPECT_EQ(PatternBasis().min_length(), -1);
  EXPECT_EQ(patlab::basis_union(B({"12"}), B({"21"})), B({"12", "21"}));
  EXPECT_EQ(patlab::increasing_basis(3), B({"123"}));
}

TEST(PatternClasses, MonotoneExpansionIsAntichain) {
  for (int k = 2; k <= 5; ++k) {
    for (int j = 1; j <= k + 1; ++j) {
      EXPECT_TRUE(patlab::is_antichain(patlab::distant_basis(k, j)));
      for (int i = 1; i <= k + 1; ++i) EXPECT_TRUE(patlab::is_antichain(patlab::monotone_basis(k, j, i)));
    }
  }
}
