#include <gtest/gtest.h>

#include "sos/arith.hpp"
#include "sos/error.hpp"
#include "sos/prime_ideal.hpp"
#include "test_util.hpp"

namespace sos {
namespace {

using testing::elem;
using testing::field;
using testing::rat;

TEST(Dedekind, Examples) {
  EXPECT_TRUE(dedekind_is_pmaximal(field({1, 0, 1}), 2));
  EXPECT_FALSE(dedekind_is_pmaximal(field({7, 0, 1}), 2));
  EXPECT_TRUE(dedekind_is_pmaximal(field({2, -1, 1}), 2));
  EXPECT_TRUE(dedekind_is_pmaximal(field({0, 1}), 2));
  EXPECT_FALSE(dedekind_is_pmaximal(field({-5, 0, 1}), 2));  // Z[sqrt 5] has index 2
  EXPECT_FALSE(dedekind_is_pmaximal(field({-3 * 3 * 5, 0, 1}), 3));
  EXPECT_THROW(split_prime(field({7, 0, 1}), 2), NotPMaximal);
  try {
    split_prime(field({7, 0, 1}), 2);
  } catch (const NotPMaximal& e) {
    EXPECT_EQ(e.prime(), 2);
  }
}

TEST(SplitPrime, Examples) {
  auto G = field({1, 0, 1});
  auto five = split_prime(G, 5);
  ASSERT_EQ(five.size(), 2u);
  for (const auto& P : five) {
    EXPECT_EQ(P.e(), 1);
    EXPECT_EQ(P.f_deg(), 1);
  }
  EXPECT_EQ(five[0].gbar(), ZPoly({2, 1}));
  auto two = split_prime(G, 2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].e(), 2);
  EXPECT_EQ(two[0].f_deg(), 1);
  auto K = split_prime(field({-1, -1, 1}), 2);
  ASSERT_EQ(K.size(), 1u);
  EXPECT_EQ(K[0].e(), 1);
  EXPECT_EQ(K[0].f_deg(), 2);
  auto M = split_prime(field({2, -1, 1}), 2);
  ASSERT_EQ(M.size(), 2u);
}

TEST(SplitPrime, SumEFEqualsDegree) {
  for (auto K : {field({1, 0, 1}), field({-1, -1, 1}), field({-2, 0, 0, 1}), field({1, 1, 0, 0, 1}),
                 field({2, -1, 1}), field({1, -3, 0, 1}), field({-2, 0, 0, 0, 1})}) {
    PrimeStream ps(2);
    for (int i = 0; i < 25; ++i) {
      Integer p = ps.next();
      if (!dedekind_is_pmaximal(K, p)) continue;
      int sum = 0;
      for (const auto& P : split_prime(K, p)) {
        sum += P.e() * P.f_deg();
        EXPECT_EQ(valuation(P.pi(), P), 1);
        EXPECT_EQ(valuation(P.tau(), P), -1);
        EXPECT_EQ(valuation(K.from_rational(Rational(p)), P), P.e());
      }
      EXPECT_EQ(sum, K.degree());
    }
  }
}

TEST(Valuation, Examples) {
  auto Q = field({0, 1});
  auto P2 = split_prime(Q, 2)[0];
  EXPECT_EQ(valuation(rat(Q, 12), P2), 2);
  EXPECT_EQ(valuation(rat(Q, 1, 2), P2), -1);
  auto G = field({1, 0, 1});
  EXPECT_EQ(valuation(G.one() + G.theta(), split_prime(G, 2)[0]), 1);
  EXPECT_THROW(valuation(G.zero(), split_prime(G, 2)[0]), ZeroElement);
}

TEST(Valuation, AdditiveAndMatchesNorm) {
  std::mt19937_64 rng(0x5eed20);
  for (auto K : {field({1, 0, 1}), field({-1, -1, 1}), field({-2, 0, 0, 1}), field({1, 1, 0, 0, 1}),
                 field({2, -1, 1})}) {
    for (long p : {2L, 3L, 5L, 7L, 13L}) {
      if (!dedekind_is_pmaximal(K, p)) continue;
      auto primes = split_prime(K, p);
      for (int t = 0; t < 10; ++t) {
        NFElem a = testing::random_elem(K, rng, 30, true), b = testing::random_elem(K, rng, 30, true);
        long weighted = 0;
        for (const auto& P : primes) {
          EXPECT_EQ(valuation(a * b, P), valuation(a, P) + valuation(b, P));
          weighted += P.f_deg() * valuation(a, P);
        }
        // sum_P f_P v_P(a) = v_p(N(a))
        EXPECT_EQ(weighted, valuation_p(a.norm(), Integer(p)));
      }
    }
  }
}

TEST(ResidueOfUnitPart, Examples) {
  auto Q = field({0, 1});
  auto P5 = split_prime(Q, 5)[0];
  EXPECT_EQ(residue_of_unit_part(rat(Q, 3), P5).rep, ZPoly({3}));
  EXPECT_EQ(residue_of_unit_part(rat(Q, 50), P5).rep, ZPoly({2}));
  auto G = field({1, 0, 1});
  auto five = split_prime(G, 5);
  ASSERT_EQ(five[0].gbar(), ZPoly({2, 1}));
  EXPECT_EQ(residue_of_unit_part(G.theta(), five[0]).rep, ZPoly({3}));
}

TEST(ResidueOfUnitPart, Multiplicative) {
  std::mt19937_64 rng(0x5eed21);
  for (auto K : {field({1, 0, 1}), field({-2, 0, 0, 1}), field({1, 1, 0, 0, 1})}) {
    for (long p : {3L, 5L, 7L, 17L}) {
      if (!dedekind_is_pmaximal(K, p)) continue;
      for (const auto& P : split_prime(K, p)) {
        const FqField& F = P.residue_field();
        for (int t = 0; t < 8; ++t) {
          NFElem a = testing::random_elem(K, rng, 30, true), b = testing::random_elem(K, rng, 30, true);
          auto ra = residue_of_unit_part(a, P), rb = residue_of_unit_part(b, P);
          EXPECT_EQ(residue_of_unit_part(a * b, P).rep, F.mul(ra.rep, rb.rep));
        }
      }
    }
  }
}

TEST(LocalSquareNondyadic, Examples) {
  auto Q = field({0, 1});
  EXPECT_TRUE(is_local_square_nondyadic(rat(Q, 4), split_prime(Q, 3)[0]));
  EXPECT_FALSE(is_local_square_nondyadic(rat(Q, 3), split_prime(Q, 3)[0]));
  EXPECT_FALSE(is_local_square_nondyadic(rat(Q, 2), split_prime(Q, 5)[0]));
  EXPECT_THROW(is_local_square_nondyadic(rat(Q, 2), split_prime(Q, 2)[0]), std::invalid_argument);
}

TEST(LocalSquareNondyadic, SquaresAreLocalSquares) {
  std::mt19937_64 rng(0x5eed22);
  auto K = field({-2, 0, 0, 1});
  for (long p : {5L, 7L, 11L, 31L})
    for (const auto& P : split_prime(K, p))
      for (int t = 0; t < 10; ++t) {
        NFElem a = testing::random_elem(K, rng, 15, true);
        EXPECT_TRUE(is_local_square_nondyadic(a * a, P));
      }
}

TEST(HilbertNondyadic, Examples) {
  auto Q = field({0, 1});
  EXPECT_EQ(hilbert_nondyadic(rat(Q, 3), rat(Q, 5), split_prime(Q, 5)[0]), -1);
  EXPECT_EQ(hilbert_nondyadic(rat(Q, 2), rat(Q, 3), split_prime(Q, 7)[0]), 1);
  EXPECT_EQ(hilbert_nondyadic(rat(Q, -1), rat(Q, 3), split_prime(Q, 3)[0]), -1);
}

TEST(HilbertNondyadic, SymmetryBimultiplicativityAndMinusA) {
  std::mt19937_64 rng(0x5eed23);
  for (auto K : {field({0, 1}), field({1, 0, 1}), field({-1, -1, 1}), field({-2, 0, 0, 1})}) {
    for (long p : {3L, 5L, 7L, 11L}) {
      if (!dedekind_is_pmaximal(K, p)) continue;
      for (const auto& P : split_prime(K, p)) {
        for (int t = 0; t < 6; ++t) {
          // products of uniformizer and units
          auto pick = [&]() {
            NFElem u = testing::random_elem(K, rng, 8);
            return u * P.pi().pow(static_cast<long>(rng() % 3));
          };
          NFElem a = pick(), b = pick(), c = pick();
          EXPECT_EQ(hilbert_nondyadic(a, b, P), hilbert_nondyadic(b, a, P));
          EXPECT_EQ(hilbert_nondyadic(a * c, b, P), hilbert_nondyadic(a, b, P) * hilbert_nondyadic(c, b, P));
          EXPECT_EQ(hilbert_nondyadic(a, -a, P), 1);
          if (!(a == K.one())) EXPECT_EQ(hilbert_nondyadic(a, K.one() - a, P), 1);
        }
      }
    }
  }
}

TEST(HilbertReal, Examples) {
  auto Q = field({0, 1});
  const auto& rho = Q.real_embeddings()[0];
  EXPECT_EQ(hilbert_real(rat(Q, -1), rat(Q, -1), rho), -1);
  EXPECT_EQ(hilbert_real(rat(Q, 2), rat(Q, -3), rho), 1);
  auto K = field({-1, -1, 1});
  EXPECT_EQ(hilbert_real(-K.theta(), -K.theta(), K.real_embeddings()[1]), -1);
}

}  // namespace
}  // namespace sos
