#include "blockwitness/blocks.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "blockwitness/degrees.hpp"
#include "blockwitness/error.hpp"
#include "oracles.hpp"

namespace bw = blockwitness;

namespace {

bw::Partition P(std::vector<bw::Part> parts) { return bw::Partition(std::move(parts)); }

oracle::Parts raw(const bw::Partition& lambda) { return {lambda.parts().begin(), lambda.parts().end()}; }

bool contains(const std::vector<bw::Partition>& v, const bw::Partition& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST(BlockLabel, Examples) {
  EXPECT_EQ(bw::block_label(P({4}), 3).core, P({1}));
  EXPECT_EQ(bw::block_label(P({2, 1}), 3).core, bw::Partition{});
  const auto hook9 = P({2, 1, 1, 1, 1, 1, 1, 1});
  ASSERT_TRUE(oracle::rim_hook_core(raw(hook9), 3).empty());
  EXPECT_EQ(bw::block_label(hook9, 3), (bw::BlockLabel{bw::Partition{}, 3}));
  EXPECT_THROW(bw::block_label(hook9, 9), bw::NotPrime);
}

TEST(PrincipalBlock, Membership) {
  for (bw::Part n = 1; n <= 20; ++n) {
    for (bw::Natural p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
      EXPECT_TRUE(bw::principal_block_contains(bw::Partition::row(n), p)) << n << " " << p;
    }
  }
  EXPECT_TRUE(bw::principal_block_contains(P({2, 1, 1, 1, 1, 1, 1, 1}), 3));
  ASSERT_EQ(oracle::rim_hook_core({1, 1, 1, 1}, 3), (oracle::Parts{1}));
  EXPECT_TRUE(bw::principal_block_contains(P({1, 1, 1, 1}), 3));
  EXPECT_TRUE(bw::principal_block_contains(P({2, 2}), 3));
  EXPECT_FALSE(bw::principal_block_contains(P({3, 1}), 3));
}

TEST(PrincipalBlock, ColumnMembershipAgainstRimHookOracle) {
  for (bw::Part n = 1; n <= 20; ++n) {
    for (bw::Natural p : bw::primes_up_to(20)) {
      const auto core = oracle::rim_hook_core(oracle::Parts(n, 1), static_cast<std::uint32_t>(p));
      const oracle::Parts row_core = n % p == 0 ? oracle::Parts{} : oracle::Parts{static_cast<std::uint32_t>(n % p)};
      EXPECT_EQ(bw::principal_block_contains(bw::Partition::column(n), p), core == row_core) << n << " " << p;
    }
  }
}

TEST(PrincipalBlockMembers, Examples) {
  EXPECT_EQ(bw::principal_block_members(4, 2), bw::partitions_of(4));
  // p > n: weight-0 block of the core (n).
  EXPECT_EQ(bw::principal_block_members(4, 5), std::vector<bw::Partition>{P({4})});
  EXPECT_EQ(bw::principal_block_members(6, 7), std::vector<bw::Partition>{P({6})});
  const auto nine = bw::principal_block_members(9, 3);
  EXPECT_TRUE(contains(nine, P({9})));
  EXPECT_TRUE(contains(nine, P({2, 1, 1, 1, 1, 1, 1, 1})));
}

TEST(PrincipalBlockMembers, CardinalityIsMultipartitionCount) {
  for (std::uint32_t n = 1; n <= 20; ++n) {
    for (bw::Natural p : bw::primes_up_to(n)) {
      const auto members = bw::principal_block_members(n, p);
      const auto weight = static_cast<std::uint32_t>(n / p);
      ASSERT_EQ(bw::BigInt(members.size()), oracle::multipartition_count(static_cast<std::uint32_t>(p), weight))
          << n << " " << p;
      // Core (b) plus quotient determines the partition, so quotients are distinct.
      std::set<std::vector<bw::Partition>> quotients;
      for (const auto& lambda : members) quotients.insert(bw::p_quotient(lambda, static_cast<std::uint32_t>(p)));
      ASSERT_EQ(quotients.size(), members.size());
    }
  }
}

TEST(PrincipalBlockMembers, DeterminedByCore) {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    for (bw::Natural p : bw::primes_up_to(n)) {
      for (const auto& lambda : bw::partitions_of(n)) {
        ASSERT_EQ(bw::principal_block_contains(lambda, p),
                  bw::block_label(lambda, p).core == bw::principal_core(n, p));
      }
    }
  }
}

TEST(IrrPPrimePrincipal, Examples) {
  ASSERT_EQ(bw::degree(P({3, 1})).to_decimal(), "3");
  ASSERT_EQ(bw::degree(P({2, 2})).to_decimal(), "2");
  const std::vector<bw::Partition> expected{P({4}), P({3, 1}), P({2, 1, 1}), P({1, 1, 1, 1})};
  EXPECT_EQ(bw::irr_p_prime_principal(4, 2), expected);
  EXPECT_EQ(bw::irr_p_prime_principal(4, 5), std::vector<bw::Partition>{P({4})});
  EXPECT_TRUE(contains(bw::irr_p_prime_principal(9, 3), P({2, 1, 1, 1, 1, 1, 1, 1})));
}
