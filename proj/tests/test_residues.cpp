#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qrsum/primes.hpp"
#include "qrsum/residues.hpp"

using namespace qrsum;

namespace {

ResiduePartition expected(std::uint32_t p, std::array<std::uint64_t, 4> sums, std::array<std::uint64_t, 4> counts,
                          std::uint64_t n) {
  return ResiduePartition{OddPrime::from(p), sums[0],   sums[1],   sums[2],   sums[3],
                          counts[0],         counts[1], counts[2], counts[3], n};
}

}  // namespace

TEST(Classify, Examples) {
  const auto p7 = OddPrime::from(7);
  EXPECT_EQ(classify(0, p7), ResidueClass::kZero);
  EXPECT_EQ(classify(2, p7), ResidueClass::kResidue);
  EXPECT_EQ(classify(3, p7), ResidueClass::kNonresidue);
  EXPECT_THROW(classify(7, p7), std::out_of_range);
}

TEST(Classify, MatchesSquareEnumeration) {
  for (auto p : primes_between(3, 300)) {
    const auto q = oracle::squares_mod(p);
    const auto prime = OddPrime::from(p);
    for (std::uint64_t x = 1; x < p; ++x) {
      ASSERT_EQ(classify(x, prime), q.count(x) ? ResidueClass::kResidue : ResidueClass::kNonresidue);
    }
  }
}

TEST(PartitionBySquares, Examples) {
  EXPECT_EQ(partition_by_squares(OddPrime::from(7)), expected(7, {3, 4, 3, 11}, {2, 1, 1, 2}, 1));
  EXPECT_EQ(partition_by_squares(OddPrime::from(3)), expected(3, {1, 0, 0, 2}, {1, 0, 0, 1}, 0));

  const auto p11 = partition_by_squares(OddPrime::from(11));
  EXPECT_EQ(p11.sum_q(), 22u);
  EXPECT_EQ(p11.n_below_half, 1u);
}

TEST(PartitionBySymbol, Examples) {
  EXPECT_EQ(partition_by_symbol(OddPrime::from(7)), partition_by_squares(OddPrime::from(7)));

  const auto p23 = partition_by_symbol(OddPrime::from(23));
  EXPECT_EQ(p23.sum_q_l, 33u);
  EXPECT_EQ(p23.sum_n_l, 33u);
  EXPECT_EQ(p23.n_below_half, 4u);

  const auto p5 = partition_by_symbol(OddPrime::from(5));
  EXPECT_EQ(p5.sum_q(), 5u);
  EXPECT_EQ(p5.sum_n(), 5u);
}

TEST(Partition, MatchesBruteForceCensus) {
  for (auto p : primes_between(3, 600)) {
    const auto c = oracle::census(p);
    const auto part = partition_by_squares(OddPrime::from(p));
    ASSERT_EQ(part, expected(p, {c.sum_q_l, c.sum_q_u, c.sum_n_l, c.sum_n_u},
                             {c.count_q_l, c.count_q_u, c.count_n_l, c.count_n_u}, c.count_n_l))
        << p;
  }
}

TEST(Partition, BothAlgorithmsAgreeBelow10000) {
  for (auto p : primes_between(3, 9999)) {
    const auto prime = OddPrime::from(p);
    ASSERT_EQ(partition_by_squares(prime), partition_by_symbol(prime)) << p;
  }
}

TEST(Partition, StructuralInvariants) {
  for (auto p : primes_between(3, 9999)) {
    const auto part = partition_by_squares(OddPrime::from(p));
    const std::uint64_t half = (p - 1) / 2;
    const std::uint64_t p64 = p;
    ASSERT_EQ(part.count_q_l + part.count_q_u, half) << p;
    ASSERT_EQ(part.count_n_l + part.count_n_u, half) << p;
    ASSERT_EQ(part.sum_q() + part.sum_n(), p64 * (p64 - 1) / 2) << p;
    ASSERT_EQ(part.n_below_half, part.count_n_l) << p;
    for (auto s : {part.sum_q_l, part.sum_q_u, part.sum_n_l, part.sum_n_u}) ASSERT_LT(s, p64 * p64);
    if (p % 4 == 3) {
      ASSERT_EQ(part.count_q_u, part.n_below_half) << p;
      ASSERT_EQ(part.count_n_u, part.count_q_l) << p;
    }
  }
}

TEST(Partition, LargeModulus) {
  const std::uint64_t p = 268435399;  // largest prime below 2^28
  const auto part = partition_by_squares(OddPrime::from(p));
  EXPECT_EQ(part.sum_q() + part.sum_n(), p * (p - 1) / 2);
  EXPECT_EQ(part.count_q_l + part.count_q_u, (p - 1) / 2);
  EXPECT_EQ(part.count_q_u, part.n_below_half);
  EXPECT_EQ(part.sum_q(), part.n_below_half * p);  // p = 7 (mod 8)
}

TEST(Doubling, Examples) {
  EXPECT_EQ(doubling_image_class(OddPrime::from(7)), DoublingAction::kPreservesQ);
  EXPECT_EQ(doubling_image_class(OddPrime::from(11)), DoublingAction::kSwapsQN);
  EXPECT_EQ(doubling_image_class(OddPrime::from(5)), DoublingAction::kSwapsQN);
  EXPECT_EQ(doubling_image_class(OddPrime::from(3)), DoublingAction::kSwapsQN);
  EXPECT_EQ(doubling_image_class(OddPrime::from(17)), DoublingAction::kPreservesQ);
}

TEST(Doubling, PreservesExactlyWhenTwoIsResidue) {
  for (auto p : primes_between(3, 9999)) {
    const auto expected_action =
        jacobi(2, p) == Symbol::kPlus ? DoublingAction::kPreservesQ : DoublingAction::kSwapsQN;
    ASSERT_EQ(doubling_image_class(OddPrime::from(p)), expected_action) << p;
    ASSERT_EQ(expected_action == DoublingAction::kPreservesQ, p % 8 == 1 || p % 8 == 7) << p;
  }
}

TEST(Doubling, UpperHalfReducesBySubtractingP) {
  for (auto p : primes_between(3, 2000)) {
    const std::uint64_t half = (p - 1) / 2;
    for (std::uint64_t x = 1; x <= half; ++x) ASSERT_LT(2 * x, p);
    for (std::uint64_t x = half + 1; x < p; ++x) {
      const std::uint64_t y = 2 * x - p;
      ASSERT_GE(y, 1u);
      ASSERT_LE(y, p - 1);
      ASSERT_EQ(y, (2 * x) % p);
    }
  }
}

TEST(Negation, Examples) {
  EXPECT_TRUE(negation_check(OddPrime::from(7)));
  EXPECT_TRUE(negation_check(OddPrime::from(11)));
  EXPECT_TRUE(negation_check(OddPrime::from(3)));
  EXPECT_THROW(negation_check(OddPrime::from(13)), std::invalid_argument);
  EXPECT_THROW(negation_check(OddPrime::from(5)), std::invalid_argument);
}

TEST(Negation, HoldsFor3Mod4Below10000) {
  for (auto p : primes_between(3, 9999)) {
    if (p % 4 == 3) ASSERT_TRUE(negation_check(OddPrime::from(p))) << p;
  }
}

TEST(SquareTable, MatchesEnumeration) {
  for (auto p : primes_between(3, 500)) {
    const auto table = square_table(OddPrime::from(p));
    const auto q = oracle::squares_mod(p);
    ASSERT_EQ(table.size(), p);
    for (std::uint64_t x = 0; x < p; ++x) ASSERT_EQ(table[x], q.count(x) == 1) << x << " mod " << p;
  }
}
