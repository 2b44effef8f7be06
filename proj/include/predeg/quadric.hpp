#pragma once

// The smooth quadric surface Q = V(x0 x3 - x1 x2) in P^3 and the rational map
// P End(A) --> P Sym^2(A^v), phi |-> Q o phi, whose base locus is
// B = { phi : im phi in Q } = Z_1 u Z_2 (matrices with image in a line of
// one of the two rulings).

#include <optional>
#include <string>
#include <vector>

#include "predeg/chow.hpp"
#include "predeg/matrix4.hpp"
#include "predeg/predegree.hpp"

namespace predeg::quadric {

/// Symmetric Gram matrix M of a quadratic form f(x) = x^T M x on K^4.
class QuadricGram {
 public:
  explicit QuadricGram(const Matrix4& m);

  /// x0 x3 - x1 x2.
  static QuadricGram canonical();

  const Matrix4& matrix() const { return m_; }
  Rational value(const Vec4& x) const;
  /// grad f(x) = 2 M x.
  Vec4 gradient(const Vec4& x) const;

 private:
  Matrix4 m_;
};

/// Nonzero 4x4 matrix taken up to scale: a point of P End(A) = P^15.
class ProjMatrix {
 public:
  explicit ProjMatrix(Matrix4 m);

  const Matrix4& matrix() const { return m_; }
  int rank() const { return m_.rank(); }

  /// Equality in P^15: the two representatives are proportional.
  friend bool operator==(const ProjMatrix& a, const ProjMatrix& b);

 private:
  Matrix4 m_;
};

/// Representative of s_q(phi) = f(phi q).
Rational point_condition_value(const ProjMatrix& phi, const Vec4& q,
                               const QuadricGram& f = QuadricGram::canonical());

/// The matrix 2 (M phi q) q^T, i.e. grad s_q at phi as a functional on End(A)
/// under the Frobenius pairing: <grad, psi> = grad f(phi q) . (psi q).
Matrix4 point_condition_gradient(const ProjMatrix& phi, const Vec4& q,
                                 const QuadricGram& f = QuadricGram::canonical());

/// Standard Segre map P^1 x P^1 -> P^3, (s, t) |-> (s0 t0, s0 t1, s1 t0, s1 t1).
/// The a-line of p is sigma({p} x P^1) and the b-line of p is sigma(P^1 x {p}).
Vec4 segre_point(const Vec2& s, const Vec2& t);

/// Bilinear lifts of the two embeddings P^1 x P^7 -> P^15. Rows 0,1 of xi are
/// scaled by s0 and s1; sigma1 stacks them as (s0 xi; s1 xi), sigma2
/// interleaves them as (s0 xi_0; s1 xi_0; s0 xi_1; s1 xi_1).
Matrix4 sigma1_lift(const Vec2& p, const Matrix2x4& xi);
Matrix4 sigma2_lift(const Vec2& p, const Matrix2x4& xi);

ProjMatrix sigma1(const Vec2& p, const Matrix2x4& xi);
ProjMatrix sigma2(const Vec2& p, const Matrix2x4& xi);

/// The rank-one matrix with image sigma(p, q) and kernel k^perp, lifted: sigma(p,q) k^T.
Matrix4 rank_one_lift(const Vec2& p, const Vec2& q, const Vec4& k);
ProjMatrix rank_one_point(const Vec2& p, const Vec2& q, const Vec4& k);

/// im phi in Q, decided exactly as phi^T M phi = 0.
bool base_scheme_member(const ProjMatrix& phi, const QuadricGram& f = QuadricGram::canonical());

/// Codimension of Z_1 n Z_2 = Q x P^3 inside P^15.
inline constexpr int kIntersectionCodim = 15 - (2 + 3);
/// dim orb(Q) = dim P Sym^2(K^4).
inline constexpr int kOrbitDim = 9;

/// The doubled class S = 2 j_* s(Z_1, P^15) standing in for the Segre class of B.
ChowClass doubled_segre_class();

/// Full predegree polynomial of a smooth quadric surface.
PredegreePolynomial predegree_quadric_p3();

struct Table1Row {
  int n = 0;
  int sym_dim = 0;            // dim P Sym^2(A^v)
  int max_component_dim = 0;  // dim of the largest base-locus component
  /// a_0 .. a_{n^2+2n}; std::nullopt marks a coefficient not determined here.
  std::vector<std::optional<Integer>> coefficients;

  std::string polynomial_string() const;
};

Table1Row table1_row(int n);

struct Table2Row {
  int dim_l = 0;  // dimension of L = number of points
  Integer count;
};

/// Number of L-translates of Q through dim L general points, dim L = 0..9.
/// The last row divides out the stabilizer multiplicity deg PO(4).
std::vector<Table2Row> table2();

}  // namespace predeg::quadric
