#include <gtest/gtest.h>

#include <set>

#include "asmloops/biject.hpp"
#include "asmloops/enumerate.hpp"
#include "oracles.hpp"

using namespace asmloops;

TEST(Enumerate, CountsMatchBruteForceOracle) {
  for (int n = 1; n <= 4; ++n) {
    const auto oracle_set = oracle::brute_force_asms(n);
    std::set<IntMatrix> expected(oracle_set.begin(), oracle_set.end());
    std::set<IntMatrix> got;
    for_each_asm(n, [&](const Asm& a) { got.insert(a.rows()); });
    EXPECT_EQ(got, expected) << n;
  }
}

TEST(Enumerate, CountsUpToSix) {
  const std::vector<std::size_t> counts = {1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    std::set<IntMatrix> seen;
    std::size_t items = 0;
    for_each_asm(n, [&](const Asm& a) {
      ++items;
      EXPECT_TRUE(oracle::is_asm(a.rows()));
      EXPECT_NO_THROW(validate_asm(a.rows()));
      seen.insert(a.rows());
    });
    EXPECT_EQ(items, counts[n - 1]);
    EXPECT_EQ(seen.size(), items);
  }
}

TEST(Enumerate, LexicographicAndReproducible) {
  for (int n = 1; n <= 5; ++n) {
    EnumerationCursor c(n);
    std::vector<HeightFunction> first;
    while (auto h = c.next()) first.push_back(*h);
    EXPECT_EQ(c.yielded(), first.size());
    EXPECT_FALSE(c.next().has_value());
    for (std::size_t k = 1; k < first.size(); ++k) EXPECT_LT(first[k - 1], first[k]);
    EnumerationCursor again(n);
    for (const auto& h : first) EXPECT_EQ(*again.next(), h);
    EXPECT_EQ(first.front(), HeightFunction::minimal(n));
    EXPECT_EQ(first.back(), HeightFunction::maximal(n));
  }
  EXPECT_THROW(EnumerationCursor(0), Error);
}

TEST(Lattice, BoundsAndMeetWithMinimum) {
  for (int n = 1; n <= 5; ++n) {
    const HeightFunction lo = HeightFunction::minimal(n), hi = HeightFunction::maximal(n);
    EnumerationCursor c(n);
    while (auto h = c.next()) {
      EXPECT_TRUE(height_leq(lo, *h));
      EXPECT_TRUE(height_leq(*h, hi));
      EXPECT_EQ(height_meet(*h, lo), lo);
      EXPECT_EQ(height_join(*h, hi), hi);
      EXPECT_EQ(height_join(*h, *h), *h);
    }
  }
  EXPECT_THROW(height_leq(HeightFunction::minimal(3), HeightFunction::minimal(4)), Error);
  EXPECT_THROW(height_meet(HeightFunction::minimal(3), HeightFunction::minimal(4)), Error);
}

TEST(Lattice, ClosureUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<HeightFunction> all;
    EnumerationCursor c(n);
    while (auto h = c.next()) all.push_back(*h);
    for (const auto& a : all) {
      for (const auto& b : all) {
        EXPECT_TRUE(oracle::is_height(height_meet(a, b).rows()));
        EXPECT_TRUE(oracle::is_height(height_join(a, b).rows()));
        EXPECT_EQ(height_leq(a, b), height_meet(a, b) == a);
      }
    }
  }
}

TEST(Lattice, LawsOnTriplesUpToThree) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<HeightFunction> all;
    EnumerationCursor c(n);
    while (auto h = c.next()) all.push_back(*h);
    for (const auto& a : all) {
      for (const auto& b : all) {
        EXPECT_EQ(height_meet(a, b), height_meet(b, a));
        EXPECT_EQ(height_join(a, b), height_join(b, a));
        EXPECT_EQ(height_meet(a, height_join(a, b)), a);
        EXPECT_EQ(height_join(a, height_meet(a, b)), a);
        for (const auto& x : all) {
          EXPECT_EQ(height_meet(a, height_meet(b, x)), height_meet(height_meet(a, b), x));
          EXPECT_EQ(height_join(a, height_join(b, x)), height_join(height_join(a, b), x));
        }
      }
    }
  }
}

TEST(VerifyAll, SmallRuns) {
  for (const auto& r : verify_all(3, all_suites())) {
    EXPECT_TRUE(r.ok()) << suite_name(r.suite);
    EXPECT_EQ(r.items, 7u);
  }
  const auto five = verify_all(5, {Suite::InvEquivalence});
  ASSERT_EQ(five.size(), 1u);
  EXPECT_TRUE(five[0].ok());
  EXPECT_EQ(five[0].items, 429u);
  const auto two = verify_all(2, {Suite::RoundTrips});
  EXPECT_TRUE(two[0].ok());
  EXPECT_EQ(two[0].items, 2u);
  EXPECT_THROW(verify_all(kMaxVerifySize + 1, {Suite::RoundTrips}), Error);
}

TEST(VerifyAll, ShardsPartitionAndJobsAgree) {
  std::size_t total = 0;
  for (int r = 0; r < 3; ++r) {
    VerifyOptions o;
    o.shard_modulus = 3;
    o.shard_residue = r;
    total += verify_all(5, {Suite::Reflection}, o)[0].items;
  }
  EXPECT_EQ(total, 429u);
  VerifyOptions many;
  many.jobs = 4;
  const auto r = verify_all(5, all_suites(), many);
  for (const auto& x : r) EXPECT_TRUE(x.ok()) << suite_name(x.suite);
}

TEST(Suites, NamesRoundTrip) {
  for (Suite s : all_suites()) EXPECT_EQ(parse_suite(suite_name(s)), s);
  EXPECT_FALSE(parse_suite("nope").has_value());
}
