#include "blockwitness/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "blockwitness/blocks.hpp"
#include "blockwitness/degrees.hpp"
#include "blockwitness/error.hpp"
#include "oracles.hpp"
#include "seed.hpp"

namespace bw = blockwitness;

namespace {

bw::Partition P(std::vector<bw::Part> parts) { return bw::Partition(std::move(parts)); }

bool contains(const std::vector<bw::Partition>& set, const bw::Partition& x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

std::set<std::vector<bw::Part>> as_set(const std::vector<bw::Partition>& v) {
  std::set<std::vector<bw::Part>> s;
  for (const auto& x : v) s.emplace(x.parts().begin(), x.parts().end());
  return s;
}

}  // namespace

TEST(WitnessSets, Examples) {
  const auto sn = bw::witness_sets(9, 3, 2, bw::GroupKind::Sn);
  EXPECT_TRUE(contains(sn.p_block, P({2, 1, 1, 1, 1, 1, 1, 1})));
  const auto an = bw::witness_sets(9, 3, 2, bw::GroupKind::An);
  EXPECT_TRUE(contains(an.p_block, P({2, 1, 1, 1, 1, 1, 1, 1})));
  for (const auto& x : an.p_block) EXPECT_FALSE(bw::is_self_conjugate(x));
  for (const auto& x : an.q_block) EXPECT_FALSE(bw::is_self_conjugate(x));
  EXPECT_NO_THROW(bw::witness_sets(4, 3, 2, bw::GroupKind::Sn));
}

TEST(WitnessSets, Preconditions) {
  EXPECT_THROW(bw::witness_sets(9, 3, 3, bw::GroupKind::Sn), bw::InputError);
  EXPECT_THROW(bw::witness_sets(9, 4, 3, bw::GroupKind::Sn), bw::InputError);
  EXPECT_THROW(bw::witness_sets(9, 11, 3, bw::GroupKind::Sn), bw::InputError);
}

TEST(WitnessSets, MembersSatisfyDefinitionByBruteForce) {
  for (std::uint32_t n = 9; n <= 14; ++n) {
    const bw::SymmetricGroupData data(n);
    for (auto p : data.primes()) {
      for (auto q : data.primes()) {
        if (p == q) continue;
        const auto sets = bw::witness_sets(data, p, q, bw::GroupKind::Sn);
        std::size_t expected = 0;
        for (const auto& lambda : data.partitions()) {
          oracle::Parts raw(lambda.parts().begin(), lambda.parts().end());
          const bool in_block = oracle::rim_hook_core(raw, static_cast<std::uint32_t>(p)) ==
                                (n % p ? oracle::Parts{static_cast<std::uint32_t>(n % p)} : oracle::Parts{});
          const auto d = oracle::count_syt(raw);
          const bool member = in_block && d % p != 0 && d % q == 0;
          expected += member;
          EXPECT_EQ(contains(sets.p_block, lambda), member) << bw::to_string(lambda);
        }
        EXPECT_EQ(sets.p_block.size(), expected);
      }
    }
  }
}

TEST(CheckConjC, Examples) {
  EXPECT_TRUE(bw::check_conj_c(9, 3, 2, bw::GroupKind::Sn).condition_holds);
  EXPECT_TRUE(bw::check_conj_c(9, 3, 2, bw::GroupKind::An).condition_holds);
  EXPECT_TRUE(bw::check_conj_c(30, 7, 5, bw::GroupKind::Sn).condition_holds);
}

TEST(CheckConjC, ReportInvariants) {
  const bw::SymmetricGroupData data(12);
  for (auto kind : {bw::GroupKind::Sn, bw::GroupKind::An}) {
    const auto r = bw::check_conj_c(data, 5, 3, kind);
    for (const auto& x : r.witnesses_p_block) EXPECT_TRUE(contains(r.set_b_p, x));
    for (const auto& x : r.witnesses_q_block) EXPECT_TRUE(contains(r.set_b_q, x));
    EXPECT_EQ(r.condition_holds, !r.witnesses_p_block.empty() || !r.witnesses_q_block.empty());
    EXPECT_EQ(r.sets_equal, as_set(r.set_b_p) == as_set(r.set_b_q));
  }
}

TEST(CheckConjB, Examples) {
  auto r = bw::check_conj_b(9, 3, 2);
  EXPECT_FALSE(r.sets_equal);
  EXPECT_FALSE(r.violation);
  r = bw::check_conj_b(12, 3, 2);
  EXPECT_FALSE(r.sets_equal);
  EXPECT_THROW(bw::check_conj_b(9, 3, 3), bw::InputError);
}

TEST(CheckConjB, SetsMatchBlockModule) {
  for (std::uint32_t n = 2; n <= 16; ++n) {
    const bw::SymmetricGroupData data(n);
    for (auto p : data.primes()) {
      for (auto q : data.primes()) {
        if (p == q) continue;
        const auto r = bw::check_conj_b(data, p, q);
        EXPECT_EQ(as_set(r.set_b_p), as_set(bw::irr_p_prime_principal(n, p)));
        EXPECT_EQ(as_set(r.set_b_q), as_set(bw::irr_p_prime_principal(n, q)));
        EXPECT_FALSE(r.violation) << n << " " << p << " " << q;
      }
    }
  }
}

TEST(CrossValidate, Examples) {
  auto a = bw::cross_validate(9, 3, 2);
  ASSERT_TRUE(a.oracle_agrees.has_value());
  EXPECT_TRUE(*a.oracle_agrees);
  EXPECT_EQ(a.case_id(), bw::CaseId::IA);

  auto d = bw::cross_validate(11, 7, 5);
  ASSERT_TRUE(std::holds_alternative<bw::Deferral>(d.constructor));
  EXPECT_EQ(std::get<bw::Deferral>(d.constructor).reason, bw::DeferralReason::AbelianSylow);
  EXPECT_FALSE(d.oracle_agrees.has_value());
  EXPECT_TRUE(d.oracle_holds_sn);
  EXPECT_TRUE(d.oracle_holds_an);

  auto b = bw::cross_validate(10, 5, 2);
  ASSERT_TRUE(b.oracle_agrees.has_value());
  EXPECT_TRUE(*b.oracle_agrees);
  EXPECT_EQ(b.case_id(), bw::CaseId::IIA);
}

TEST(CrossValidate, FalsifiedTreeIsRecordedNotThrown) {
  const auto r = bw::cross_validate(23, 11, 3);
  EXPECT_TRUE(std::holds_alternative<bw::ConstructionFailure>(r.constructor));
  EXPECT_FALSE(r.case_id().has_value());
  EXPECT_TRUE(r.oracle_holds_sn);
  EXPECT_TRUE(r.oracle_holds_an);
}

TEST(SymmetricGroupData, ResultsIndependentOfEnumerationOrder) {
  const std::uint32_t n = 13;
  const bw::SymmetricGroupData data(n);
  auto shuffled = data.partitions();
  std::mt19937_64 rng(testing_support::seed());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  for (auto p : data.primes()) {
    for (auto q : data.primes()) {
      if (p == q) continue;
      std::vector<bw::Partition> recomputed;
      for (const auto& lambda : shuffled) {
        if (bw::principal_block_contains(lambda, p) && bw::degree_valuation(lambda, p) == 0 &&
            bw::degree_valuation(lambda, q) > 0)
          recomputed.push_back(lambda);
      }
      EXPECT_EQ(as_set(recomputed), as_set(bw::witness_sets(data, p, q, bw::GroupKind::Sn).p_block));
    }
  }
}
