#include <gtest/gtest.h>

#include "predeg/quadric.hpp"
#include "predeg/sampling.hpp"
#include "predeg/tangent.hpp"

namespace predeg::tangent {
namespace {

using Coords = std::vector<std::pair<int, int>>;

LinearSubspace random_subspace(RationalSampler& rng, std::size_t ambient, int count) {
  std::vector<linalg::Vector> vs;
  for (int i = 0; i < count; ++i) {
    linalg::Vector v(ambient);
    for (auto& x : v) x = rng.integer(0, 2) == 0 ? Rational(0) : rng.rational(3);
    vs.push_back(v);
  }
  return LinearSubspace::span(ambient, vs);
}

TEST(LinearSubspace, RejectsDependentBasis) {
  const linalg::Vector a{1, 2}, b{2, 4};
  EXPECT_THROW(LinearSubspace(2, {a, b}), std::invalid_argument);
  EXPECT_EQ(LinearSubspace::span(2, std::vector<linalg::Vector>{a, b}).dim(), 1u);
  EXPECT_EQ(LinearSubspace::zero(16).projective_dim(), -1);
}

TEST(LinearSubspace, DimensionFormulaAndDuality) {
  RationalSampler rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_subspace(rng, 16, rng.integer(0, 12));
    const auto b = random_subspace(rng, 16, rng.integer(0, 12));
    const auto s = sum(a, b), i = intersect(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(s.contains(a) && s.contains(b));
    EXPECT_TRUE(a.contains(i) && b.contains(i));
    EXPECT_EQ(a.annihilator().dim(), 16 - a.dim());
    EXPECT_EQ(a.annihilator().annihilator(), a);
    EXPECT_EQ(intersect(a.annihilator(), b.annihilator()), sum(a, b).annihilator());
  }
}

TEST(LinearSubspace, PerturbedBasisIsDetected) {
  const auto v = coordinate_vanishing(Coords{{0, 0}, {1, 2}, {3, 3}});
  auto basis = v.basis();
  basis[0][0] += 1;  // leaves the coordinate subspace
  const LinearSubspace w(16, basis);
  EXPECT_EQ(w.dim(), v.dim());
  EXPECT_FALSE(w == v);
  EXPECT_FALSE(v.contains(w));
}

TEST(PolarizationSet, SpansQuadraticForms) {
  const auto& qs = polarization_set();
  ASSERT_EQ(qs.size(), 10u);
  std::vector<Matrix4> squares;
  for (const auto& q : qs) squares.push_back(Matrix4::outer(q, q));
  EXPECT_EQ(LinearSubspace::span(squares).dim(), 10u);
}

TEST(GradientSpan, DimensionsByRank) {
  EXPECT_EQ(gradient_span(ProjMatrix(Matrix4::unit(0, 0))).dim(), 4u);
  EXPECT_EQ(gradient_span(ProjMatrix(Matrix4::unit(0, 0) + Matrix4::unit(1, 1))).dim(), 7u);
  EXPECT_EQ(gradient_span(ProjMatrix(Matrix4::identity())).dim(), 10u);
}

TEST(GradientSpan, RankTwoNormalFormGenerators) {
  const auto g = gradient_span(ProjMatrix(Matrix4::unit(0, 0) + Matrix4::unit(1, 1)));
  const std::vector<Matrix4> generators{
      Matrix4::unit(2, 0) - Matrix4::unit(3, 1), Matrix4::unit(2, 1), Matrix4::unit(2, 2),
      Matrix4::unit(2, 3), Matrix4::unit(3, 0), Matrix4::unit(3, 2), Matrix4::unit(3, 3)};
  EXPECT_EQ(g, LinearSubspace::span(generators));
}

TEST(GradientSpan, CanonicalRankOnePoint) {
  const ProjMatrix phi(Matrix4::unit(0, 0));
  const std::vector<Matrix4> expected{Matrix4::unit(3, 0), Matrix4::unit(3, 1), Matrix4::unit(3, 2),
                                      Matrix4::unit(3, 3)};
  EXPECT_EQ(gradient_span(phi), LinearSubspace::span(expected));
  EXPECT_EQ(common_tangent(phi).projective_dim(), 11);
}

TEST(GradientSpan, NonzeroAtPointsOfTheBaseLocus) {
  RationalSampler rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Vec2 p = rng.nonzero_vec2();
    const Matrix2x4 xi = rng.nonzero_2x4();
    EXPECT_GE(gradient_span(quadric::sigma1(p, xi)).dim(), 4u);
    EXPECT_GE(gradient_span(quadric::sigma2(p, xi)).dim(), 4u);
  }
}

TEST(TangentZ, CanonicalPoint) {
  const Vec2 p = unit2(1), q = unit2(0);
  const Vec4 k = unit4(2);
  ASSERT_EQ(quadric::rank_one_point(p, q, k), ProjMatrix(Matrix4::unit(2, 2)));
  const auto t1 = tangent_Z_at(Ruling::first, p, q, k);
  const auto t2 = tangent_Z_at(Ruling::second, p, q, k);
  EXPECT_EQ(t1, coordinate_vanishing(Coords{{0, 0}, {0, 1}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(t2, coordinate_vanishing(Coords{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {3, 0}, {3, 1}, {3, 3}}));
  const auto c1 = tangent_C1(p, q, k);
  EXPECT_EQ(c1, coordinate_vanishing(Coords{{0, 0}, {0, 1}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 3},
                                            {3, 0}, {3, 1}, {3, 3}}));
  EXPECT_EQ(intersect(t1, t2), c1);
}

TEST(TangentZ, DimensionAndContainsPoint) {
  RationalSampler rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Vec2 p = rng.nonzero_vec2();
    const Matrix2x4 xi = rng.nonzero_2x4();
    const auto t1 = tangent_Z(Ruling::first, p, xi);
    const auto t2 = tangent_Z(Ruling::second, p, xi);
    EXPECT_EQ(t1.dim(), 9u);
    EXPECT_EQ(t2.dim(), 9u);
    EXPECT_TRUE(t1.contains(quadric::sigma1_lift(p, xi).flatten()));
    EXPECT_TRUE(t2.contains(quadric::sigma2_lift(p, xi).flatten()));
  }
}

TEST(TangentZ, AnnihilatedByPointConditionGradients) {
  RationalSampler rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const Vec2 p = rng.nonzero_vec2();
    const Matrix2x4 xi = rng.nonzero_2x4();
    const Vec4 q = rng.nonzero_vec4();
    const auto phi = quadric::sigma1(p, xi);
    const auto grad = quadric::point_condition_gradient(phi, q).flatten();
    const auto tz = tangent_Z(Ruling::first, p, xi);
    for (const auto& v : tz.basis()) EXPECT_EQ(linalg::dot(grad, v), 0);
  }
}

TEST(TangentC1, DimensionAndContainment) {
  RationalSampler rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec2 p = rng.nonzero_vec2(), q = rng.nonzero_vec2();
    const Vec4 k = rng.nonzero_vec4();
    const auto c1 = tangent_C1(p, q, k);
    EXPECT_EQ(c1.dim(), 6u);
    EXPECT_TRUE(tangent_Z_at(Ruling::first, p, q, k).contains(c1));
    EXPECT_TRUE(tangent_Z_at(Ruling::second, p, q, k).contains(c1));
  }
}

TEST(Verify, RandomRankOnePoints) {
  RationalSampler rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec2 p = rng.nonzero_vec2(), q = rng.nonzero_vec2();
    const Vec4 k = rng.nonzero_vec4();
    EXPECT_TRUE(verify_rank_G(p, q, k));
    EXPECT_TRUE(verify_intersection_tangents(p, q, k));
  }
  EXPECT_TRUE(verify_rank_G(unit2(0), unit2(0), unit4(0)));
}

TEST(Verify, AlternativeCanonicalLabel) {
  // sigma((1:0),(0:1)) e_2^T = E_{1,2}.
  const Vec2 p = unit2(0), q = unit2(1);
  const Vec4 k = unit4(2);
  EXPECT_EQ(quadric::rank_one_point(p, q, k), ProjMatrix(Matrix4::unit(1, 2)));
  EXPECT_TRUE(verify_intersection_tangents(p, q, k));
  EXPECT_TRUE(verify_rank_G(p, q, k));
}

}  // namespace
}  // namespace predeg::tangent
