#include <gtest/gtest.h>

#include "sos/error.hpp"
#include "sos/global_square.hpp"
#include "test_util.hpp"

namespace sos {
namespace {

using testing::elem;
using testing::field;
using testing::rat;

TEST(NumberField, Construction) {
  EXPECT_EQ(field({1, 0, 1}).degree(), 2);
  auto K = field({-1, -1, 1});
  EXPECT_EQ(K.discriminant(), 5);
  EXPECT_EQ(K.real_embeddings().size(), 2u);
  EXPECT_EQ(field({2, -2, 1}).degree(), 2);
  EXPECT_THROW(field({-1, 0, 1}), ReduciblePolynomial);
}

TEST(NumberField, NormalizesNonMonicInput) {
  // 2x^2 - 3: theta = 2 alpha with theta^2 = 6
  auto K = NumberField::from_polynomial(ZPoly({-3, 0, 2}));
  EXPECT_TRUE(K.was_normalized());
  EXPECT_EQ(K.polynomial(), ZPoly({-6, 0, 1}));
  NFElem alpha = K.input_generator();
  EXPECT_EQ(Rational(2) * alpha.coords()[1], 1);
  EXPECT_EQ(alpha * alpha, rat(K, 3, 2));
  // rational coefficients: x^2 - 1/4 x + 1
  auto L = NumberField::from_polynomial(QPoly({Rational(1), Rational(-1, 4), Rational(1)}));
  NFElem b = L.input_generator();
  EXPECT_TRUE((b * b - Rational(1, 4) * b + L.one()).is_zero());
}

TEST(NumberField, Arithmetic) {
  auto K = field({1, 0, 1});
  NFElem i = K.theta();
  EXPECT_EQ(nf_mul(i, i), rat(K, -1));
  EXPECT_EQ(nf_norm(K.one() + i), 2);
  EXPECT_EQ(nf_inv(rat(K, 2)), rat(K, 1, 2));
  EXPECT_THROW(K.zero().inverse(), DivisionByZero);
  auto [b, c] = nf_denominator_clear(elem(K, {1, 0}) / rat(K, 6) + i / rat(K, 4));
  EXPECT_EQ(c, 12);
  EXPECT_EQ(b, (std::vector<Integer>{2, 3}));
}

TEST(NumberField, FieldAxiomsAndNormMultiplicative) {
  std::mt19937_64 rng(0x5eed10);
  for (auto K : {field({1, 0, 1}), field({-1, -1, 1}), field({-2, 0, 0, 1}), field({1, 1, 0, 0, 1})}) {
    for (int t = 0; t < 20; ++t) {
      NFElem a = testing::random_elem(K, rng, 5, true), b = testing::random_elem(K, rng, 5, true),
             c = testing::random_elem(K, rng, 5, true);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * a.inverse(), K.one());
      EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    }
  }
}

TEST(RealEmbeddings, CountsAndSigns) {
  EXPECT_TRUE(field({1, 0, 1}).real_embeddings().empty());
  EXPECT_EQ(field({-2, 0, 0, 1}).real_embeddings().size(), 1u);
  auto K = field({-1, -1, 1});
  const auto& re = K.real_embeddings();
  ASSERT_EQ(re.size(), 2u);
  // ascending: the negative root first
  EXPECT_EQ(sign_at(K.theta(), re[0]), -1);
  EXPECT_EQ(sign_at(K.theta(), re[1]), 1);
  EXPECT_EQ(sign_at(rat(K, -3), re[0]), -1);
  EXPECT_THROW(sign_at(K.zero(), re[0]), ZeroElement);
  auto Q = field({0, 1});
  ASSERT_EQ(Q.real_embeddings().size(), 1u);
  EXPECT_EQ(sign_at(rat(Q, -3), Q.real_embeddings()[0]), -1);
}

TEST(RealEmbeddings, MatchSturmCount) {
  for (auto K : {field({1, 0, 1}), field({-1, -1, 1}), field({-2, 0, 0, 1}), field({1, -3, 0, 1}),
                 field({-2, 0, 0, 0, 1}), field({1, 0, -4, 0, 1})}) {
    EXPECT_EQ(static_cast<int>(K.real_embeddings().size()), sturm_root_count(to_q(K.polynomial())));
  }
  EXPECT_EQ(field({1, -3, 0, 1}).real_embeddings().size(), 3u);
}

TEST(RealEmbeddings, CloseRootsSeparated) {
  // roots +-sqrt(2)/1000
  auto K = NumberField::from_polynomial(ZPoly({-2, 0, 1000000}));
  const auto& re = K.real_embeddings();
  ASSERT_EQ(re.size(), 2u);
  NFElem alpha = K.input_generator();
  EXPECT_EQ(sign_at(alpha, re[0]), -1);
  EXPECT_EQ(sign_at(alpha, re[1]), 1);
  EXPECT_EQ(sign_at(alpha - rat(K, 1414, 1000000), re[1]), 1);
  EXPECT_EQ(sign_at(alpha - rat(K, 1415, 1000000), re[1]), -1);
  EXPECT_EQ(sign_at(alpha + rat(K, 1414, 1000000), re[0]), -1);
}

TEST(TotallyPositive, Examples) {
  auto Q = field({0, 1});
  EXPECT_TRUE(is_totally_positive(rat(Q, 7)));
  auto K = field({-1, -1, 1});
  EXPECT_FALSE(is_totally_positive(K.theta()));
  auto G = field({1, 0, 1});
  EXPECT_TRUE(is_totally_positive(rat(G, -5)));
}

TEST(TotallyPositive, InvariantUnderSquares) {
  std::mt19937_64 rng(0x5eed11);
  for (auto K : {field({-1, -1, 1}), field({-2, 0, 0, 1}), field({1, -3, 0, 1})}) {
    for (int t = 0; t < 25; ++t) {
      NFElem a = testing::random_elem(K, rng), b = testing::random_elem(K, rng);
      EXPECT_EQ(is_totally_positive(a * a * b), is_totally_positive(b));
    }
  }
}

TEST(IsSquareGlobal, Examples) {
  auto Q = field({0, 1});
  auto r = is_square_global(rat(Q, 4));
  ASSERT_TRUE(r.is_square);
  EXPECT_EQ(*r.root * *r.root, rat(Q, 4));

  auto G = field({1, 0, 1});
  NFElem i = G.theta();
  auto n = is_square_global(i * i + i);
  EXPECT_FALSE(n.is_square);
  ASSERT_TRUE(n.witness.has_value());
  EXPECT_FALSE(is_local_square_nondyadic(i * i + i, *n.witness));

  auto s = is_square_global(rat(G, 2) * i);
  ASSERT_TRUE(s.is_square);
  EXPECT_EQ(*s.root * *s.root, rat(G, 2) * i);
  EXPECT_THROW(is_square_global(G.zero()), ZeroElement);
}

TEST(IsSquareGlobal, NegativeRationalAndFractions) {
  auto Q = field({0, 1});
  EXPECT_FALSE(is_square_global(rat(Q, -4)).is_square);
  EXPECT_TRUE(is_square_global(rat(Q, 9, 49)).is_square);
  EXPECT_FALSE(is_square_global(rat(Q, 2, 9)).is_square);
}

TEST(IsSquareGlobal, SquaresOfRandomElements) {
  std::mt19937_64 rng(0x5eed12);
  for (auto K : {field({1, 0, 1}), field({-1, -1, 1}), field({-2, 0, 0, 1}), field({1, 1, 0, 0, 1}),
                 field({-7, 0, 2}), field({1, -3, 0, 1})}) {
    for (int t = 0; t < 12; ++t) {
      NFElem a = testing::random_elem(K, rng, 20, true);
      auto r = is_square_global(a * a);
      ASSERT_TRUE(r.is_square);
      EXPECT_EQ(*r.root * *r.root, a * a);
    }
  }
}

TEST(IsSquareGlobal, NonsquaresHaveLocalWitness) {
  std::mt19937_64 rng(0x5eed13);
  for (auto K : {field({1, 0, 1}), field({-1, -1, 1}), field({-2, 0, 0, 1}), field({1, 1, 0, 0, 1})}) {
    for (int t = 0; t < 15; ++t) {
      NFElem a = testing::random_elem(K, rng, 9, true);
      auto r = is_square_global(a);
      if (r.is_square) {
        EXPECT_EQ(*r.root * *r.root, a);
        continue;
      }
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_FALSE(is_local_square_nondyadic(a, *r.witness));
    }
  }
}

TEST(IsSquareGlobal, NonsquareWithSquareNorm) {
  // N(theta) = 1 in Q(i), theta not a square; and 3 in Q(sqrt 5) has norm 9
  auto G = field({1, 0, 1});
  EXPECT_FALSE(is_square_global(G.theta()).is_square);
  auto K = field({-1, -1, 1});
  EXPECT_FALSE(is_square_global(rat(K, 3)).is_square);
  EXPECT_TRUE(is_square_global(rat(K, 5)).is_square);  // (2 theta - 1)^2 = 5
}

TEST(MinusOneSquare, Examples) {
  EXPECT_FALSE(is_minus_one_square(field({0, 1})));
  EXPECT_TRUE(is_minus_one_square(field({1, 0, 1})));
  EXPECT_FALSE(is_minus_one_square(field({-1, -1, 1})));
  EXPECT_FALSE(is_minus_one_square(field({2, -1, 1})));
  EXPECT_TRUE(is_minus_one_square(field({1, 0, 0, 0, 1})));  // Q(zeta_8)
  EXPECT_FALSE(is_minus_one_square(field({2, 0, 1})));
}

}  // namespace
}  // namespace sos
