#include "blockwitness/factored.hpp"

#include <random>

#include <gtest/gtest.h>

#include "blockwitness/error.hpp"
#include "oracles.hpp"
#include "seed.hpp"

namespace bw = blockwitness;

namespace {

bw::FactoredNatural fm(bw::FactoredNatural::Map m) { return bw::FactoredNatural::from_map(std::move(m)); }

}  // namespace

TEST(Factor, SmallValues) {
  EXPECT_EQ(bw::factor(12), fm({{2, 2}, {3, 1}}));
  EXPECT_EQ(bw::factor(1), bw::FactoredNatural{});
  EXPECT_TRUE(bw::factor(1).is_one());
}

TEST(Factor, SevenTwentyMatchesProductOracle) {
  const auto expected = oracle::trial_factor(oracle::factorial_product(6));
  ASSERT_EQ(expected, (std::map<std::uint64_t, std::uint32_t>{{2, 4}, {3, 2}, {5, 1}}));
  EXPECT_EQ(bw::factor(720), fm({{2, 4}, {3, 2}, {5, 1}}));
}

TEST(Factor, RejectsZero) { EXPECT_THROW(bw::factor(0), bw::InputError); }

TEST(FactoredNatural, FromMapValidates) {
  EXPECT_THROW(fm({{4, 1}}), bw::InputError);
  EXPECT_THROW(fm({{2, 0}}), bw::InputError);
}

TEST(Mul, AddsExponents) {
  EXPECT_EQ(bw::mul(fm({{2, 2}}), fm({{2, 1}, {3, 1}})), fm({{2, 3}, {3, 1}}));
  EXPECT_EQ(bw::mul({}, fm({{5, 1}})), fm({{5, 1}}));
  EXPECT_EQ(bw::mul(bw::factor(8), bw::factor(9)), bw::factor(72));
}

TEST(Div, SubtractsAndDropsZeros) {
  EXPECT_EQ(bw::div(fm({{2, 3}}), fm({{2, 1}})), fm({{2, 2}}));
  EXPECT_EQ(bw::div(bw::factor(5040), bw::factor(70)), bw::factor(72));
  EXPECT_EQ(bw::div(bw::factor(6), bw::factor(6)), bw::FactoredNatural{});
  EXPECT_TRUE(bw::div(bw::factor(6), bw::factor(3)).factors().count(3) == 0);
}

TEST(Div, NonDivisorIsHardError) {
  EXPECT_THROW(bw::div(fm({{3, 1}}), fm({{2, 1}})), bw::NotDivisible);
  EXPECT_THROW(bw::div(fm({{2, 1}}), fm({{2, 2}})), bw::NotDivisible);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(bw::valuation(fm({{2, 3}, {5, 1}}), 2), 3u);
  EXPECT_EQ(bw::valuation({}, 7), 0u);
  EXPECT_EQ(bw::valuation(bw::factor(100), 5), 2u);
}

TEST(FactorialFactored, Examples) {
  EXPECT_EQ(bw::factorial_factored(0), bw::FactoredNatural{});
  EXPECT_EQ(bw::factorial_factored(1), bw::FactoredNatural{});
  EXPECT_EQ(bw::factorial_factored(4), fm({{2, 3}, {3, 1}}));
  const auto expected10 = oracle::trial_factor(oracle::factorial_product(10));
  EXPECT_EQ(bw::factorial_factored(10).factors(), (bw::FactoredNatural::Map(expected10.begin(), expected10.end())));
  EXPECT_EQ(bw::factorial_factored(10), fm({{2, 8}, {3, 4}, {5, 2}, {7, 1}}));
}

TEST(ToDecimal, Examples) {
  EXPECT_EQ(bw::to_decimal({}), "1");
  EXPECT_EQ(bw::to_decimal(fm({{2, 2}, {3, 1}})), "12");
  ASSERT_EQ(oracle::factorial_product(12).str(), "479001600");
  EXPECT_EQ(bw::to_decimal(bw::factorial_factored(12)), "479001600");
  EXPECT_EQ(bw::factorial_factored(30).to_decimal(), oracle::factorial_product(30).str());
}

TEST(ToFactoredString, Renders) {
  EXPECT_EQ(bw::FactoredNatural{}.to_factored_string(), "1");
  EXPECT_EQ(bw::factor(360).to_factored_string(), "2^3*3^2*5");
}

TEST(Primes, Basics) {
  EXPECT_FALSE(bw::is_prime(0));
  EXPECT_FALSE(bw::is_prime(1));
  EXPECT_TRUE(bw::is_prime(2));
  EXPECT_FALSE(bw::is_prime(91));
  EXPECT_TRUE(bw::is_prime(97));
  EXPECT_EQ(bw::primes_up_to(20), (std::vector<bw::Natural>{2, 3, 5, 7, 11, 13, 17, 19}));
}

// Properties.

TEST(FactoredProperties, DecimalRoundTrip) {
  std::mt19937_64 rng(testing_support::seed());
  std::uniform_int_distribution<bw::Natural> dist(1, 1'000'000);
  for (int i = 0; i < 10'000; ++i) {
    const auto k = dist(rng);
    ASSERT_EQ(bw::factor(k).to_decimal(), std::to_string(k)) << k;
  }
}

TEST(FactoredProperties, MulDivInverseAndValuationAdditive) {
  std::mt19937_64 rng(testing_support::seed() + 1);
  std::uniform_int_distribution<bw::Natural> dist(1, 1'000'000);
  for (int i = 0; i < 10'000; ++i) {
    const auto a = bw::factor(dist(rng));
    const auto b = bw::factor(dist(rng));
    const auto ab = a * b;
    ASSERT_EQ(ab / b, a);
    for (bw::Natural p : {2, 3, 5, 7, 11, 13}) ASSERT_EQ(ab.valuation(p), a.valuation(p) + b.valuation(p));
  }
}

TEST(FactoredProperties, LegendreMatchesFold) {
  bw::FactoredNatural fold;
  for (bw::Natural k = 0; k <= 200; ++k) {
    if (k >= 1) fold *= bw::factor(k);
    ASSERT_EQ(bw::factorial_factored(k), fold) << k;
  }
}
