#include <gtest/gtest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "hyperoct/root_system.hpp"
#include "test_support.hpp"

namespace hyperoct {
namespace {

using testing::all_elements;

std::vector<int> coordinates(const Root& r) {
  std::vector<int> x(r.n(), 0);
  x[static_cast<std::size_t>(r.hi()) - 1] = r.hi_sign();
  if (!r.is_single()) x[static_cast<std::size_t>(r.lo()) - 1] = r.lo_sign();
  return x;
}

TEST(Root, CanonicalForm) {
  const auto r = Root::pair(5, 2, 1, 5, -1);  // e_2 - e_5
  EXPECT_EQ(r.hi(), 5);
  EXPECT_EQ(r.hi_sign(), -1);
  EXPECT_EQ(r.lo(), 2);
  EXPECT_EQ(r.lo_sign(), 1);
  EXPECT_TRUE(r.is_negative());
  EXPECT_EQ(r.to_string(), "-e5+e2");
  EXPECT_EQ((-r).to_string(), "e5-e2");
  EXPECT_THROW(Root::pair(3, 2, 1, 2, 1), std::invalid_argument);
  EXPECT_THROW(Root::single(3, 4, 1), std::out_of_range);
}

TEST(PositiveRoots, Counts) {
  const auto p1 = positive_roots(1);
  ASSERT_EQ(p1.size(), 1u);
  EXPECT_EQ(p1[0], Root::single(1, 1, 1));
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(positive_roots(n).size(), n * n);
    EXPECT_EQ(positive_roots(n).size(), n + 2 * (n * (n - 1) / 2));
  }
  EXPECT_EQ(positive_roots(3).size(), 9u);
}

TEST(PositiveRoots, MatchCoordinateDefinition) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> from_roots;
    for (const auto& r : positive_roots(n)) from_roots.insert(coordinates(r));
    const auto expected = testing::positive_root_vectors(n);
    EXPECT_EQ(from_roots, std::set<std::vector<int>>(expected.begin(), expected.end()));
  }
}

TEST(PositiveRoots, PsiIsDisjointUnionOfPositiveAndNegative) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = all_roots(n);
    std::set<Root> pos;
    for (const auto& r : positive_roots(n)) pos.insert(r);
    std::set<Root> every(all.begin(), all.end());
    EXPECT_EQ(every.size(), 2 * n * n);
    for (const auto& r : every) {
      const bool in_pos = pos.count(r) == 1;
      const bool in_neg = pos.count(-r) == 1;
      EXPECT_NE(in_pos, in_neg) << r.to_string();
      EXPECT_EQ(in_pos, r.is_positive());
      EXPECT_EQ(in_neg, r.is_negative());
    }
  }
}

TEST(PsiSubset, Examples) {
  const auto last = psi_subset(3, 3);
  ASSERT_EQ(last.size(), 1u);
  EXPECT_EQ(last[0], Root::single(3, 1, 1));

  const auto first = psi_subset(3, 1);
  const std::set<Root> got(first.begin(), first.end());
  const std::set<Root> expected{Root::single(3, 3, 1), Root::pair(3, 3, 1, 1, -1), Root::pair(3, 3, 1, 1, 1),
                                Root::pair(3, 3, 1, 2, -1), Root::pair(3, 3, 1, 2, 1)};
  EXPECT_EQ(got, expected);
  EXPECT_THROW(psi_subset(3, 0), std::out_of_range);
  EXPECT_THROW(psi_subset(3, 4), std::out_of_range);
}

TEST(PsiSubset, PartitionPositiveRoots) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<Root> seen;
    std::size_t total = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      const auto part = psi_subset(n, i);
      EXPECT_EQ(part.size(), 2 * (n - i) + 1);
      total += part.size();
      for (const auto& r : part) EXPECT_TRUE(seen.insert(r).second) << "overlap at " << r.to_string();
    }
    const auto pos = positive_roots(n);
    EXPECT_EQ(total, pos.size());
    EXPECT_EQ(seen, std::set<Root>(pos.begin(), pos.end()));
  }
}

TEST(Act, Examples) {
  const auto e3 = Root::single(3, 3, 1);
  EXPECT_EQ(act(identity(3), e3), e3);
  for (int l = 1; l <= 4; ++l) EXPECT_EQ(act(longest_element(4), Root::single(4, l, 1)), Root::single(4, l, -1));

  const SignedPermutation w({2, -5, -3, -1, 4});
  const auto image = act(w, Root::pair(5, 2, 1, 1, -1));  // e_2 - e_1
  EXPECT_EQ(image, Root::pair(5, 5, -1, 2, -1));
  EXPECT_EQ(image.to_string(), "-e5-e2");
  EXPECT_THROW(act(identity(2), e3), std::invalid_argument);
}

TEST(Act, AgreesWithMatrixActionOnB4) {
  for (const auto& w : all_elements(4)) {
    const auto m = testing::matrix_of(w);
    for (const auto& r : all_roots(4)) {
      ASSERT_EQ(coordinates(act(w, r)), testing::apply_matrix(m, coordinates(r)));
    }
  }
}

TEST(LengthOracle, Examples) {
  EXPECT_EQ(length_oracle(identity(5)), 0u);
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(length_oracle(longest_element(n)), n * n);
  EXPECT_EQ(length_oracle(SignedPermutation({2, 4, 1, -3, 6, 7, -5, 8})), 19u);
}

TEST(LengthOracle, EqualsMatrixCountAndIsInverseInvariant) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& w : all_elements(n)) {
      ASSERT_EQ(static_cast<int>(length_oracle(w)), testing::matrix_length(w));
    }
  }
  for (const auto& w : all_elements(3)) EXPECT_EQ(length_oracle(w), length_oracle(inverse(w)));
}

TEST(LengthOracle, EqualsCayleyGraphDistanceInB3) {
  const auto dist = testing::cayley_distances(3);
  ASSERT_EQ(dist.size(), 48u);
  for (const auto& w : all_elements(3)) {
    const std::vector<int> key(w.window().begin(), w.window().end());
    EXPECT_EQ(static_cast<int>(length_oracle(w)), dist.at(key)) << "w = " << key[0] << "," << key[1] << "," << key[2];
  }
}

TEST(InvIOracle, Examples) {
  const SignedPermutation w({2, 4, 1, -3, 6, 7, -5, 8});
  const std::vector<std::size_t> table{0, 11, 0, 0, 6, 2, 0, 0};
  for (std::size_t i = 1; i <= 8; ++i) EXPECT_EQ(inv_i_oracle(w, i), table[i - 1]) << "i=" << i;
  for (std::size_t i = 1; i <= 5; ++i) {
    EXPECT_EQ(inv_i_oracle(identity(5), i), 0u);
    EXPECT_EQ(inv_i_oracle(longest_element(5), i), 2 * (5 - i) + 1);
  }
  EXPECT_THROW(inv_i_oracle(w, 9), std::out_of_range);
}

TEST(InvIOracle, SumsToLengthOnB4) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& w : all_elements(n)) {
      std::size_t sum = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        const auto v = inv_i_oracle(w, i);
        EXPECT_LE(v, 2 * (n - i) + 1);
        sum += v;
      }
      ASSERT_EQ(sum, length_oracle(w));
    }
  }
}

}  // namespace
}  // namespace hyperoct
