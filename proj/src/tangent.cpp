#include "predeg/tangent.hpp"

#include <stdexcept>

namespace predeg::tangent {

LinearSubspace::LinearSubspace(std::size_t ambient_dim, std::vector<linalg::Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  for (const auto& v : basis_) {
    if (v.size() != ambient_dim_) throw std::invalid_argument("basis vector has the wrong length");
  }
  if (linalg::rank(basis_, ambient_dim_) != basis_.size()) {
    throw std::invalid_argument("basis vectors are linearly dependent");
  }
}

LinearSubspace LinearSubspace::span(std::size_t ambient_dim,
                                    std::span<const linalg::Vector> vectors) {
  std::vector<linalg::Vector> kept;
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("vector has the wrong length");
    if (linalg::is_zero(v)) continue;
    kept.push_back(v);
    if (linalg::rank(kept, ambient_dim) != kept.size()) kept.pop_back();
  }
  return LinearSubspace(ambient_dim, std::move(kept));
}

LinearSubspace LinearSubspace::span(std::span<const Matrix4> matrices) {
  std::vector<linalg::Vector> flat;
  flat.reserve(matrices.size());
  for (const auto& m : matrices) flat.push_back(m.flatten());
  return span(16, flat);
}

bool LinearSubspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector has the wrong length");
  std::vector<linalg::Vector> rows = basis_;
  rows.emplace_back(v.begin(), v.end());
  return linalg::rank(rows, ambient_dim_) == basis_.size();
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  std::vector<linalg::Vector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return linalg::rank(rows, ambient_dim_) == basis_.size();
}

LinearSubspace LinearSubspace::annihilator() const {
  return LinearSubspace(ambient_dim_, linalg::kernel(basis_, ambient_dim_));
}

LinearSubspace sum(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient_dim_ != b.ambient_dim_) throw std::invalid_argument("ambient mismatch");
  std::vector<linalg::Vector> all = a.basis_;
  all.insert(all.end(), b.basis_.begin(), b.basis_.end());
  return LinearSubspace::span(a.ambient_dim_, all);
}

LinearSubspace intersect(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient_dim_ != b.ambient_dim_) throw std::invalid_argument("ambient mismatch");
  const std::size_t n = a.ambient_dim_;
  const std::size_t da = a.dim();
  const std::size_t unknowns = da + b.dim();
  // sum x_i a_i - sum y_j b_j = 0, one equation per coordinate.
  std::vector<linalg::Vector> system(n, linalg::Vector(unknowns));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < da; ++i) system[c][i] = a.basis_[i][c];
    for (std::size_t j = 0; j < b.dim(); ++j) system[c][da + j] = -b.basis_[j][c];
  }
  std::vector<linalg::Vector> common;
  for (const auto& sol : linalg::kernel(system, unknowns)) {
    linalg::Vector v(n, Rational(0));
    for (std::size_t i = 0; i < da; ++i) {
      if (sol[i] == 0) continue;
      for (std::size_t c = 0; c < n; ++c) v[c] += sol[i] * a.basis_[i][c];
    }
    common.push_back(std::move(v));
  }
  return LinearSubspace::span(n, common);
}

bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
  return a.ambient_dim_ == b.ambient_dim_ && a.dim() == b.dim() && a.contains(b);
}

LinearSubspace coordinate_vanishing(std::span<const std::pair<int, int>> zeros) {
  std::vector<Matrix4> free;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      bool vanishes = false;
      for (const auto& [r, c] : zeros) vanishes = vanishes || (r == i && c == j);
      if (!vanishes) free.push_back(Matrix4::unit(i, j));
    }
  }
  return LinearSubspace::span(free);
}

const std::vector<Vec4>& polarization_set() {
  static const std::vector<Vec4> set = [] {
    std::vector<Vec4> qs;
    for (std::size_t i = 0; i < 4; ++i) qs.push_back(unit4(i));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        Vec4 q = unit4(i);
        q[j] = 1;
        qs.push_back(q);
      }
    }
    return qs;
  }();
  return set;
}

LinearSubspace gradient_span(const ProjMatrix& phi, const quadric::QuadricGram& f) {
  std::vector<Matrix4> grads;
  for (const auto& q : polarization_set()) grads.push_back(quadric::point_condition_gradient(phi, q, f));
  return LinearSubspace::span(grads);
}

LinearSubspace common_tangent(const ProjMatrix& phi, const quadric::QuadricGram& f) {
  return gradient_span(phi, f).annihilator();
}

LinearSubspace tangent_Z(Ruling which, const Vec2& p, const Matrix2x4& xi) {
  if (is_zero(p) || xi.is_zero()) throw std::invalid_argument("tangent_Z: p and xi must be nonzero");
  auto lift = which == Ruling::first ? quadric::sigma1_lift : quadric::sigma2_lift;
  std::vector<Matrix4> dirs;
  for (std::size_t j = 0; j < 8; ++j) dirs.push_back(lift(p, Matrix2x4::unit(j)));
  dirs.push_back(lift(unit2(0), xi));
  dirs.push_back(lift(unit2(1), xi));
  return LinearSubspace::span(dirs);
}

Matrix2x4 rank_one_2x4(const Vec2& q, const Vec4& k) {
  Matrix2x4 m;
  for (std::size_t c = 0; c < 4; ++c) {
    m(0, c) = q[0] * k[c];
    m(1, c) = q[1] * k[c];
  }
  return m;
}

LinearSubspace tangent_Z_at(Ruling which, const Vec2& p, const Vec2& q, const Vec4& k) {
  return which == Ruling::first ? tangent_Z(Ruling::first, p, rank_one_2x4(q, k))
                                : tangent_Z(Ruling::second, q, rank_one_2x4(p, k));
}

LinearSubspace tangent_C1(const Vec2& p, const Vec2& q, const Vec4& k) {
  if (is_zero(p) || is_zero(q) || is_zero(k)) {
    throw std::invalid_argument("tangent_C1: inputs must be nonzero");
  }
  std::vector<Matrix4> dirs;
  for (std::size_t a = 0; a < 2; ++a) dirs.push_back(quadric::rank_one_lift(unit2(a), q, k));
  for (std::size_t b = 0; b < 2; ++b) dirs.push_back(quadric::rank_one_lift(p, unit2(b), k));
  for (std::size_t c = 0; c < 4; ++c) dirs.push_back(quadric::rank_one_lift(p, q, unit4(c)));
  return LinearSubspace::span(dirs);
}

bool verify_intersection_tangents(const Vec2& p, const Vec2& q, const Vec4& k) {
  const auto t1 = tangent_Z_at(Ruling::first, p, q, k);
  const auto t2 = tangent_Z_at(Ruling::second, p, q, k);
  return intersect(t1, t2) == tangent_C1(p, q, k);
}

bool verify_rank_G(const Vec2& p, const Vec2& q, const Vec4& k) {
  const ProjMatrix phi = quadric::rank_one_point(p, q, k);
  if (phi.rank() != 1 || !quadric::base_scheme_member(phi)) return false;
  const auto grads = gradient_span(phi);
  if (grads.dim() != 4) return false;
  const auto common = grads.annihilator();
  return common.projective_dim() == 11 && common.contains(tangent_C1(p, q, k));
}

}  // namespace predeg::tangent
