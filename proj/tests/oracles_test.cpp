#include <gtest/gtest.h>

#include "sos/error.hpp"
#include "sos/lengths.hpp"
#include "sos/oracles.hpp"
#include "test_util.hpp"

namespace sos {
namespace {

using testing::ffelem;
using testing::field;
using testing::rat;

TEST(LengthQOracle, Examples) {
  EXPECT_EQ(length_q_oracle(7), 4);
  EXPECT_EQ(length_q_oracle(3), 3);
  EXPECT_EQ(length_q_oracle(49), 1);
  EXPECT_EQ(length_q_oracle(15), 4);
  EXPECT_EQ(length_q_oracle(Rational(1, 7)), 4);
  EXPECT_EQ(length_q_oracle(Rational(2, 9)), 2);
  EXPECT_EQ(length_q_oracle(-5), kInfiniteLength);
  EXPECT_THROW(length_q_oracle(0), ZeroElement);
  EXPECT_EQ(length_q_report(15).value, "4");
  EXPECT_EQ(length_q_report(-1).value, "infinity");
}

TEST(LengthQOracle, TheoremMatchesEnumeration) {
  for (long m = 1; m <= kEnumerationLimit; ++m) ASSERT_EQ(length_q_theorem(m), length_q_enumerate(m)) << m;
  EXPECT_THROW(length_q_enumerate(kEnumerationLimit + 1), InstanceTooLarge);
  // beyond the enumeration range only the theorems apply
  EXPECT_EQ(length_q_theorem(Integer("1000000000000000000000007")), 4);
  EXPECT_EQ(length_q_theorem(Integer("1000000000000000000000003")), 3);
}

TEST(LengthFFOracle, Examples) {
  auto F3 = FunctionField::rational(3);
  EXPECT_EQ(length_ff_oracle(ffelem(F3, {1, 0, 1}), 2), FFOracleLength::Two);
  EXPECT_EQ(length_ff_oracle(F3.x(), 4), FFOracleLength::MoreThanTwo);
  EXPECT_EQ(length_ff_oracle(ffelem(F3, {1, 2, 1}), 2), FFOracleLength::One);
  EXPECT_EQ(length_ff_oracle(ffelem(F3, {1}, {1, 2, 1}), 2), FFOracleLength::One);
  EXPECT_EQ(length_ff_oracle(ffelem(FunctionField::rational(5), {0, 1}), 1), FFOracleLength::Two);
  EXPECT_THROW(length_ff_oracle(F3.zero(), 2), ZeroElement);
  EXPECT_THROW(length_ff_oracle(F3.x(), 40), InstanceTooLarge);
}

TEST(HilbertProductCheck, Examples) {
  auto Q = field({0, 1});
  EXPECT_TRUE(hilbert_product_check(7, Q));
  EXPECT_TRUE(hilbert_product_check(2, Q));
  EXPECT_TRUE(hilbert_product_check(-1, Q));
  EXPECT_THROW(hilbert_product_check(3, field({2, -1, 1})), MultipleDyadicPrimes);
  EXPECT_THROW(hilbert_product_check(0, Q), ZeroElement);
}

TEST(HilbertProductCheck, RandomRationals) {
  std::mt19937_64 rng(0x9e37);
  for (auto K : {field({0, 1}), field({-1, -1, 1}), field({-2, 0, 1}), field({2, 0, 1}), field({1, 0, 1})}) {
    for (int i = 0; i < 40; ++i) {
      long n = static_cast<long>(rng() % 2001) - 1000, d = 1 + static_cast<long>(rng() % 60);
      if (n == 0) continue;
      Rational a(n, d);
      a.canonicalize();
      EXPECT_TRUE(hilbert_product_check(a, K)) << a;
    }
  }
}

TEST(DyadicBruteForce, Examples) {
  auto Q = field({0, 1});
  auto D = dyadic_completion(split_prime(Q, 2)[0]);
  EXPECT_EQ(hilbert_dyadic_bruteforce(rat(Q, -1), rat(Q, -1), D), -1);
  EXPECT_EQ(hilbert_dyadic_bruteforce(rat(Q, -1), rat(Q, 2), D), 1);
  EXPECT_EQ(hilbert_dyadic_bruteforce(rat(Q, 3), rat(Q, 1), D), 1);
  EXPECT_EQ(hilbert_dyadic_bruteforce(rat(Q, 2), rat(Q, 3), D), -1);
  EXPECT_EQ(hilbert_dyadic_bruteforce(rat(Q, 2), rat(Q, 5), D), -1);
  EXPECT_EQ(hilbert_dyadic_bruteforce(rat(Q, 3), rat(Q, 5), D), 1);
  EXPECT_EQ(hilbert_dyadic_bruteforce(rat(Q, 3, 4), rat(Q, 3), D), -1);
  EXPECT_THROW(hilbert_dyadic_bruteforce(Q.zero(), rat(Q, 3), D), ZeroElement);

  // residue degree 2 exceeds the size guard
  auto K5 = field({-1, -1, 1});
  EXPECT_THROW(hilbert_dyadic_bruteforce(rat(K5, -1), rat(K5, 3), dyadic_completion(split_prime(K5, 2)[0])),
               InstanceTooLarge);
}

TEST(DyadicBruteForce, MatchesClassicalSymbolOverQ2) {
  auto Q = field({0, 1});
  auto D = dyadic_completion(split_prime(Q, 2)[0]);
  // (a, b)_2 for units a, b: -1 iff both are 3 mod 4; (2, u)_2 = -1 iff u = 3, 5 mod 8
  for (long a : {1, 3, 5, 7})
    for (long b : {1, 3, 5, 7}) {
      EXPECT_EQ(hilbert_dyadic_bruteforce(rat(Q, a), rat(Q, b), D), (a % 4 == 3 && b % 4 == 3) ? -1 : 1);
      const int two_u = (b % 8 == 3 || b % 8 == 5) ? -1 : 1;
      EXPECT_EQ(hilbert_dyadic_bruteforce(rat(Q, 2), rat(Q, b), D), two_u);
    }
}

TEST(DyadicBruteForce, AgreesWithProductionOnMinusOne) {
  auto Q = field({0, 1});
  auto K = field({2, -1, 1});
  std::vector<std::pair<NumberField, DyadicCompletion>> cases;
  cases.emplace_back(Q, dyadic_completion(split_prime(Q, 2)[0]));
  for (const auto& P : split_prime(K, 2)) cases.emplace_back(K, dyadic_completion(P));
  for (const auto& [F, D] : cases)
    for (long a = -99; a <= 99; a += 2) {
      const NFElem x = rat(F, a);
      EXPECT_EQ(hilbert_dyadic_bruteforce(-F.one(), x, D), sum_of_two_squares_dyadic(x, D) ? 1 : -1)
          << a << " at " << D.prime().to_string();
    }
}

TEST(DyadicBruteForce, RamifiedQuadratic) {
  // Q_2(i): every element is a sum of two squares since -1 is a square
  auto G = field({1, 0, 1});
  auto D = dyadic_completion(split_prime(G, 2)[0]);
  for (long a : {3, 5, 7, -3})
    EXPECT_EQ(hilbert_dyadic_bruteforce(-G.one(), rat(G, a), D), 1);
  // Q_2(sqrt 2): small elements of valuation 0 or 1, i.e. not both coordinates even
  auto K = field({-2, 0, 1});
  auto DK = dyadic_completion(split_prime(K, 2)[0]);
  for (long u = -3; u <= 3; ++u)
    for (long v = -3; v <= 3; ++v) {
      if (u % 2 == 0 && v % 2 == 0) continue;
      NFElem x = testing::elem(K, {u, v});
      EXPECT_EQ(hilbert_dyadic_bruteforce(-K.one(), x, DK), sum_of_two_squares_dyadic(x, DK) ? 1 : -1) << x.to_string();
    }
}

}  // namespace
}  // namespace sos
