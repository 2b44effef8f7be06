#pragma once

// Tangent-space checks at points of the base locus of the quadric map,
// done with exact linear algebra in the 16-dimensional space End(A).
//
// A LinearSubspace holds an independent basis of flattened 4x4 matrices.
// Embedded tangent spaces of parameterized loci come from the multilinear
// lift of the parameterization evaluated on basis directions; tangent spaces
// of point conditions come dually, as annihilators of gradients.

#include <cstddef>
#include <span>
#include <vector>

#include "predeg/linalg.hpp"
#include "predeg/matrix4.hpp"
#include "predeg/quadric.hpp"

namespace predeg::tangent {

using quadric::ProjMatrix;

class LinearSubspace {
 public:
  /// Takes an independent basis; throws std::invalid_argument otherwise.
  LinearSubspace(std::size_t ambient_dim, std::vector<linalg::Vector> basis);

  /// Span of arbitrary vectors; dependent ones are dropped.
  static LinearSubspace span(std::size_t ambient_dim, std::span<const linalg::Vector> vectors);
  static LinearSubspace span(std::span<const Matrix4> matrices);
  static LinearSubspace zero(std::size_t ambient_dim) { return LinearSubspace(ambient_dim, {}); }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  int projective_dim() const { return static_cast<int>(basis_.size()) - 1; }
  const std::vector<linalg::Vector>& basis() const { return basis_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const LinearSubspace& other) const;

  /// { psi : <b, psi> = 0 for every basis vector b }.
  LinearSubspace annihilator() const;

  friend LinearSubspace sum(const LinearSubspace& a, const LinearSubspace& b);
  friend LinearSubspace intersect(const LinearSubspace& a, const LinearSubspace& b);
  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b);

 private:
  std::size_t ambient_dim_;
  std::vector<linalg::Vector> basis_;
};

/// The coordinate subspace V(a_{i,j} : (i,j) in zeros) of End(A).
LinearSubspace coordinate_vanishing(std::span<const std::pair<int, int>> zeros);

/// q in {e_i} u {e_i + e_j : i < j}. q |-> grad s_q(phi) is quadratic in q,
/// so these ten vectors span the whole gradient family.
const std::vector<Vec4>& polarization_set();

/// Span of { grad s_q(phi) : q in P^3 }.
LinearSubspace gradient_span(const ProjMatrix& phi,
                             const quadric::QuadricGram& f = quadric::QuadricGram::canonical());

/// Intersection over q of the tangent spaces to the point conditions at phi.
LinearSubspace common_tangent(const ProjMatrix& phi,
                              const quadric::QuadricGram& f = quadric::QuadricGram::canonical());

enum class Ruling { first = 1, second = 2 };

/// Tangent space to Z_i at sigma_i(p, xi): spanned by sigma_i(p, E_j), j = 0..7,
/// together with sigma_i(e_0, xi) and sigma_i(e_1, xi).
LinearSubspace tangent_Z(Ruling which, const Vec2& p, const Matrix2x4& xi);

/// 2 x 4 matrix q k^T, the point rho'(q, k) of P^7.
Matrix2x4 rank_one_2x4(const Vec2& q, const Vec4& k);

/// Tangent spaces to Z_1 and Z_2 at the rank-one point sigma(p,q) k^T, using
/// sigma(p,q) k^T = sigma_1(p, q k^T) = sigma_2(q, p k^T).
LinearSubspace tangent_Z_at(Ruling which, const Vec2& p, const Vec2& q, const Vec4& k);

/// Tangent space to Z_1 n Z_2 at sigma(p,q) k^T, from the trilinear lift
/// (p, q, k) |-> sigma(p,q) k^T.
LinearSubspace tangent_C1(const Vec2& p, const Vec2& q, const Vec4& k);

/// T Z_1 n T Z_2 = T (Z_1 n Z_2) at sigma(p,q) k^T.
bool verify_intersection_tangents(const Vec2& p, const Vec2& q, const Vec4& k);

/// At the rank-one point sigma(p,q) k^T: the gradients span a 4-dimensional
/// space (common tangent of projective dimension 11) whose annihilator
/// contains T (Z_1 n Z_2).
bool verify_rank_G(const Vec2& p, const Vec2& q, const Vec4& k);

}  // namespace predeg::tangent
