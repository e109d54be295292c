#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <map>

#include "wreath/numeric.hpp"
#include "wreath/partitions.hpp"

namespace wreath {
namespace {

// Standard Young tableaux counted by removing the largest entry from each corner.
BigInt count_tableaux(Partition lambda) {
  static std::map<Partition, BigInt> memo;
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (lambda.empty()) return 1;
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  BigInt total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const bool corner = i + 1 == lambda.size() || lambda[i + 1] < lambda[i];
    if (!corner) continue;
    Partition smaller = lambda;
    --smaller[i];
    total += count_tableaux(smaller);
  }
  memo[lambda] = total;
  return total;
}

TEST(Partitions, CountsMatchKnownSequence) {
  const unsigned long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (unsigned n = 0; n < 13; ++n) {
    EXPECT_EQ(enumerate_partitions(n).size(), expected[n]) << n;
    EXPECT_EQ(partition_count(n), expected[n]) << n;
  }
  EXPECT_EQ(partition_count(100), BigInt("190569292"));
}

TEST(Partitions, EnumerationOrderIsReverseLexicographic) {
  const auto parts = enumerate_partitions(4);
  const std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(parts, expected);
}

TEST(Partitions, DimensionsAgreeWithTableauCount) {
  for (unsigned n = 1; n <= 10; ++n) {
    BigInt sum_sq = 0;
    for (const Partition& lambda : enumerate_partitions(n)) {
      const BigInt d = count_tableaux(lambda);
      EXPECT_EQ(dim_partition(lambda), d) << format_partition(lambda);
      EXPECT_EQ(dim_hook_length(lambda), d) << format_partition(lambda);
      EXPECT_NEAR(static_cast<double>(log_dim(lambda)), std::log(d.get_d()), 1e-9);
      sum_sq += d * d;
    }
    EXPECT_EQ(sum_sq, factorial(n));
  }
}

TEST(Partitions, ContentAndRatio) {
  EXPECT_EQ(content_sum({3}), 3);
  EXPECT_EQ(content_sum({2, 1}), 0);
  EXPECT_EQ(content_sum({1, 1, 1}), -3);
  for (unsigned n = 3; n <= 12; ++n) {
    EXPECT_EQ(r_of_partition({n - 1, 1}), frac(BigInt(static_cast<long>(n) - 3), BigInt(static_cast<long>(n) - 1)));
    for (const Partition& lambda : enumerate_partitions(n))
      EXPECT_EQ(r_of_partition(conjugate_partition(lambda)), -r_of_partition(lambda));
  }
}

TEST(Partitions, RatioIsTranspositionCharacterOverDimension) {
  for (unsigned n = 2; n <= 8; ++n) {
    Partition transposition{2};
    transposition.insert(transposition.end(), n - 2, 1);
    for (const Partition& lambda : enumerate_partitions(n)) {
      const Rational expected = frac(mn_character(lambda, transposition), dim_partition(lambda));
      EXPECT_EQ(r_of_partition(lambda), expected) << format_partition(lambda);
    }
  }
}

TEST(Partitions, CharacterTableOfS4) {
  // Rows [4],[3,1],[2,2],[2,1,1],[1^4]; columns 1^4, 2.1.1, 2.2, 3.1, 4.
  const std::vector<Partition> classes{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  const long table[5][5] = {{1, 1, 1, 1, 1},
                            {3, 1, -1, 0, -1},
                            {2, 0, 2, -1, 0},
                            {3, -1, -1, 0, 1},
                            {1, -1, 1, 1, -1}};
  const auto irreps = enumerate_partitions(4);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(mn_character(irreps[i], classes[j]), table[i][j]);
}

TEST(Partitions, ClassSizesAndCentralizers) {
  for (unsigned n = 1; n <= 9; ++n) {
    BigInt total = 0;
    for (const Partition& mu : enumerate_partitions(n)) {
      EXPECT_EQ(cycle_class_size(mu) * centralizer_order(mu), factorial(n));
      total += cycle_class_size(mu);
    }
    EXPECT_EQ(total, factorial(n));
  }
}

TEST(Partitions, DominanceAndConjugation) {
  EXPECT_TRUE(dominates({3, 1}, {2, 2}));
  EXPECT_FALSE(dominates({2, 2}, {3, 1}));
  EXPECT_FALSE(dominates({3, 1, 1, 1}, {2, 2, 2}));
  EXPECT_FALSE(dominates({2, 2, 2}, {3, 1, 1, 1}));
  EXPECT_EQ(conjugate_partition({4, 2, 1}), (Partition{3, 2, 1, 1}));
  EXPECT_EQ(parse_partition(format_partition({5, 3, 3})), (Partition{5, 3, 3}));
  EXPECT_TRUE(is_partition({3, 3, 1}));
  EXPECT_FALSE(is_partition({1, 2}));
}

TEST(Numeric, ExactHelpers) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(multinomial({2, 1, 1}), 12);
  EXPECT_EQ(to_string(frac(6, -4)), "-3/2");
  EXPECT_EQ(to_string(pow(Rational(frac(2, 3)), 3)), "8/27");
  EXPECT_NEAR(static_cast<double>(log_factorial(100)), std::lgamma(101.0), 1e-9);
  EXPECT_NEAR(static_cast<double>(log_abs(factorial(300))), std::lgamma(301.0), 1e-8);
}

TEST(Numeric, LogAccumulatorHandlesCancellationAndRange) {
  LogAccumulator acc;
  acc.add_log(10000.0L, 1);
  acc.add_log(10000.0L, 1);
  acc.add_log(std::log(3.0L) + 9999.0L, -1);
  const long double expected = 10000.0L + std::log(2.0L - 3.0L * std::exp(-1.0L));
  EXPECT_NEAR(static_cast<double>(acc.log_value()), static_cast<double>(expected), 1e-12);
  EXPECT_EQ(acc.sign(), 1);

  LogAccumulator zero;
  zero.add(2.5L);
  zero.add(-2.5L);
  EXPECT_EQ(zero.value(), 0.0L);
}

TEST(Numeric, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 230.25850929940458, 1e-300, -7.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

}  // namespace
}  // namespace wreath
