#include <gtest/gtest.h>

#include <stdexcept>

#include "generators.hpp"
#include "predeg/predegree.hpp"
#include "predeg/quadric.hpp"
#include "predeg/segre.hpp"

namespace predeg {
namespace {

const ProductSpace kP15 = ProductSpace::projective(15);

// Independent evaluation of the predegree coefficient by a direct power
// series expansion over the rationals, one graded piece at a time.
Rational oracle_coefficient(int n, long d, const ChowClass& s, int i) {
  // Coefficient of H^i in (1 - dH)^{-1} ([P^N] - sum_j s_j H^j (1 - dH)^{-j}).
  auto geometric = [&](int exponent, int k) {
    // coefficient of H^k in (1 - dH)^{-exponent}
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), exponent + k - 1, k);
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), Integer(d).get_mpz_t(), k);
    return Rational(b * p);
  };
  Rational total = geometric(1, i);
  for (int j = 0; j <= std::min(i, n); ++j) {
    const Rational sj = s.coefficient({j});
    if (sj == 0) continue;
    total -= sj * geometric(j + 1, i - j);
  }
  return total;
}

TEST(TensorClass, Examples) {
  EXPECT_EQ(tensor_class(ChowClass::one(kP15), 5), ChowClass::one(kP15));
  const auto h7 = ChowClass::hyperplane_power(kP15, 7, 16);
  const auto expected =
      h7 * invert_unit(ChowClass::one(kP15) - ChowClass::hyperplane_power(kP15, 1, 2)).pow(7);
  EXPECT_EQ(tensor_class(h7, -2), expected);
}

TEST(TensorClass, ComposesAdditively) {
  RationalSampler rng(4);
  for (int trial = 0; trial < 15; ++trial) {
    const auto s = testing::random_class(rng, kP15, 0, 15, 30);
    const long a = rng.integer(-3, 3), b = rng.integer(-3, 3);
    EXPECT_EQ(tensor_class(tensor_class(s, a), b), tensor_class(s, a + b));
  }
}

TEST(PredegreeCoefficient, BezoutWhenSegreClassVanishes) {
  for (long d : {1, 2, 3, 5})
    for (int i = 0; i <= 15; ++i) {
      Integer expected;
      mpz_pow_ui(expected.get_mpz_t(), Integer(d).get_mpz_t(), i);
      EXPECT_EQ(predegree_coefficient(15, d, ChowClass::zero(kP15), i), expected);
    }
}

TEST(PredegreeCoefficient, QuadricValues) {
  const auto s = quadric::doubled_segre_class();
  EXPECT_EQ(predegree_coefficient(15, 2, s, 7), 112);
  EXPECT_EQ(predegree_coefficient(15, 2, s, 8), 140);
  EXPECT_EQ(predegree_coefficient(15, 2, s, 9), 40);
  for (int i = 0; i < 7; ++i) EXPECT_EQ(predegree_coefficient(15, 2, s, i), Integer(1) << i);
}

TEST(PredegreeCoefficient, MatchesSeriesOracle) {
  const auto s = quadric::doubled_segre_class();
  for (int i = 0; i <= 15; ++i)
    EXPECT_EQ(Rational(predegree_coefficient(15, 2, s, i)), oracle_coefficient(15, 2, s, i)) << i;
  RationalSampler rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = ChowClass::zero(kP15);
    for (int j = 0; j <= 15; ++j) t = t + ChowClass::hyperplane_power(kP15, j, rng.integer(-20, 20));
    const long d = rng.integer(-3, 4);
    const int i = rng.integer(0, 15);
    EXPECT_EQ(Rational(predegree_coefficient(15, d, t, i)), oracle_coefficient(15, d, t, i));
  }
}

TEST(PredegreeCoefficient, TruncationInsensitive) {
  const auto s = quadric::doubled_segre_class();
  RationalSampler rng(2718);
  for (int i = 0; i <= 9; ++i) {
    const Integer base = predegree_coefficient(15, 2, s, i);
    for (int trial = 0; trial < 100; ++trial) {
      const auto t = testing::random_class(rng, kP15, i + 1, 15, 60);
      EXPECT_EQ(predegree_coefficient(15, 2, s + t, i), base) << "i=" << i;
    }
  }
}

TEST(PredegreeCoefficient, Errors) {
  const auto half = ChowClass::hyperplane_power(kP15, 7, Rational(1, 2));
  EXPECT_THROW(predegree_coefficient(15, 2, half, 7), IntegralityError);
  EXPECT_THROW(predegree_coefficient(15, 2, ChowClass::zero(kP15), 16), std::out_of_range);
  EXPECT_THROW(predegree_coefficient(15, 2, ChowClass::zero(kP15), -1), std::out_of_range);
  EXPECT_THROW(predegree_coefficient(14, 2, ChowClass::zero(kP15), 0), std::invalid_argument);
}

TEST(PredegreeFromSegre, Examples) {
  const auto p = predegree_from_segre(15, 2, quadric::doubled_segre_class(), 9);
  const std::vector<Integer> expected{1, 2, 4, 8, 16, 32, 64, 112, 140, 40, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(p.coefficients(), expected);
  EXPECT_EQ(p.degree(), 9);
  EXPECT_EQ(p.to_string(),
            "1 + 2t + 4t^2 + 8t^3 + 16t^4 + 32t^5 + 64t^6 + 112t^7 + 140t^8 + 40t^9");

  const auto bezout = predegree_from_segre(15, 3, ChowClass::zero(kP15), 15);
  for (int i = 0; i <= 15; ++i) {
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), 3, i);
    EXPECT_EQ(bezout[i], e);
  }

  const auto point = predegree_from_segre(15, 2, quadric::doubled_segre_class(), 0);
  EXPECT_EQ(point.degree(), 0);
  EXPECT_EQ(point[0], 1);
  EXPECT_EQ(point.to_string(), "1");
  EXPECT_THROW(predegree_from_segre(15, 2, ChowClass::zero(kP15), 16), std::out_of_range);
}

TEST(ChernCharacterForm, Examples) {
  const auto p = quadric::predegree_quadric_p3();
  const auto ch = chern_character_form(p);
  ASSERT_EQ(ch.size(), 16u);
  EXPECT_EQ(ch[0], 1);
  EXPECT_EQ(ch[1], 2);
  EXPECT_EQ(ch[2], 2);
  EXPECT_EQ(ch[3], Rational(4, 3));
  EXPECT_EQ(ch[9], Rational(1, 9072));
  for (std::size_t i = 0; i < ch.size(); ++i) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), i);
    EXPECT_EQ(ch[i] * f, Rational(p[i]));
  }
  const auto zeros = chern_character_form(PredegreePolynomial({0, 0, 0}));
  for (const auto& x : zeros) EXPECT_EQ(x, 0);
}

TEST(GroupDegrees, Values) {
  EXPECT_EQ(deg_so(2), 2);
  EXPECT_EQ(deg_so(3), 8);
  EXPECT_EQ(deg_so(4), 40);
  EXPECT_EQ(deg_so(5), 384);
  for (int m = 2; m <= 8; ++m) {
    EXPECT_EQ(deg_po(m), deg_so(m));
    EXPECT_GT(deg_so(m), 0);
    EXPECT_EQ(deg_so(m) % 2, 0);
  }
  EXPECT_THROW(deg_so(0), std::invalid_argument);
}

TEST(FanoDim, Values) {
  EXPECT_EQ(fano_dim(3, 1), 1);
  EXPECT_EQ(fano_dim(3, 0), 2);
  EXPECT_EQ(fano_dim(1, 0), 0);
  EXPECT_EQ(fano_dim(4, 1), 3);
  EXPECT_THROW(fano_dim(3, 2), std::out_of_range);
}

TEST(MaxComponentDim, Values) {
  EXPECT_EQ(max_component_dim(1), 1);
  EXPECT_EQ(max_component_dim(2), 3);
  EXPECT_EQ(max_component_dim(3), 8);
  EXPECT_EQ(max_component_dim(4), 12);
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(8, 3), 56);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

}  // namespace
}  // namespace predeg
