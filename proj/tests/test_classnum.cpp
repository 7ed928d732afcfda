#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "qrsum/classnum.hpp"
#include "qrsum/primes.hpp"

using namespace qrsum;

TEST(ReducedForms, Examples) {
  EXPECT_EQ(reduced_forms(OddPrime::from(7)), (std::vector<QuadForm>{{1, 1, 2}}));
  EXPECT_EQ(reduced_forms(OddPrime::from(23)), (std::vector<QuadForm>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}}));
  EXPECT_EQ(reduced_forms(OddPrime::from(47)),
            (std::vector<QuadForm>{{1, 1, 12}, {2, -1, 6}, {2, 1, 6}, {3, -1, 4}, {3, 1, 4}}));
  EXPECT_EQ(reduced_forms(OddPrime::from(3)), (std::vector<QuadForm>{{1, 1, 1}}));
  EXPECT_THROW(reduced_forms(OddPrime::from(13)), std::invalid_argument);
}

TEST(ClassNumber, Examples) {
  EXPECT_EQ(class_number(OddPrime::from(7)), 1u);
  EXPECT_EQ(class_number(OddPrime::from(11)), 1u);
  EXPECT_EQ(class_number(OddPrime::from(23)), 3u);
  // h(-d) for a few more prime discriminants, from a brute-force form search
  const std::vector<std::pair<std::uint32_t, std::uint64_t>> known = {
      {19, 1}, {31, 3}, {43, 1}, {59, 3}, {67, 1}, {71, 7}, {79, 5}, {83, 3}, {103, 5}, {163, 1},
      {167, 11}, {199, 9}, {251, 7}};
  for (auto [p, h] : known) EXPECT_EQ(class_number(OddPrime::from(p)), h) << p;
}

TEST(ReducedForms, FormInvariants) {
  for (auto p : primes_between(3, 9999)) {
    if (p % 4 != 3) continue;
    const auto forms = reduced_forms(OddPrime::from(p));
    ASSERT_FALSE(forms.empty());
    for (const auto& f : forms) {
      ASSERT_EQ(f.discriminant(), -static_cast<std::int64_t>(p));
      ASSERT_TRUE(f.is_reduced()) << f.a << " " << f.b << " " << f.c;
      ASSERT_LE(3 * f.a * f.a, static_cast<std::int64_t>(p));
    }
    auto key = [](const QuadForm& f) { return std::tuple{f.a, std::abs(f.b), f.b > 0}; };
    ASSERT_TRUE(std::is_sorted(forms.begin(), forms.end(), [&](auto& x, auto& y) { return key(x) < key(y); }));
    ASSERT_TRUE(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
  }
}

TEST(ReducedForms, MatchesUnboundedSearch) {
  for (auto p : primes_between(3, 1500)) {
    if (p % 4 != 3) continue;
    const auto brute = oracle::reduced_forms(p);
    const auto forms = reduced_forms(OddPrime::from(p));
    ASSERT_EQ(forms.size(), brute.size()) << p;
    for (const auto& [a, b, c] : brute) {
      ASSERT_NE(std::find(forms.begin(), forms.end(), QuadForm{a, b, c}), forms.end()) << p;
    }
  }
}

TEST(QuadForm, ReducedPredicate) {
  EXPECT_TRUE((QuadForm{1, 1, 2}.is_reduced()));
  EXPECT_FALSE((QuadForm{2, -2, 3}.is_reduced()));  // b = -a
  EXPECT_FALSE((QuadForm{3, -1, 3}.is_reduced()));  // a == c needs b >= 0
  EXPECT_FALSE((QuadForm{3, 1, 2}.is_reduced()));   // a > c
  EXPECT_FALSE((QuadForm{0, 1, 2}.is_reduced()));
}

TEST(ClassCrossCheck, Examples) {
  auto check = [](std::uint32_t p) { return class_cross_check(partition_by_squares(OddPrime::from(p))); };
  auto r = check(7);
  EXPECT_EQ(r.lhs, 1);
  EXPECT_EQ(r.rhs, 1);
  EXPECT_TRUE(r.holds);
  r = check(11);
  EXPECT_EQ(r.lhs, 3);
  EXPECT_EQ(r.rhs, 3);
  r = check(23);
  EXPECT_EQ(r.lhs, 3);
  EXPECT_EQ(r.rhs, 3);
  EXPECT_EQ(r.id, IdentityId::kClassCount);
  EXPECT_THROW(check(3), std::invalid_argument);
  EXPECT_THROW(check(13), std::invalid_argument);
}

TEST(ClassCrossCheck, HoldsBelow10000) {
  for (auto p : primes_between(5, 9999)) {
    if (p % 4 != 3) continue;
    ASSERT_TRUE(class_cross_check(partition_by_squares(OddPrime::from(p))).holds) << p;
  }
}
