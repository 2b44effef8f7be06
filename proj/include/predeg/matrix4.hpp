#pragma once

// Small exact vectors and matrices for the quadric surface case, where
// A = K^4 and P End(A) = P^15 with coordinates a_{i,j} (row i, column j).

#include <array>
#include <cstddef>
#include <string>

#include "predeg/chow.hpp"
#include "predeg/linalg.hpp"

namespace predeg {

using Vec2 = std::array<Rational, 2>;
using Vec4 = std::array<Rational, 4>;

template <std::size_t N>
bool is_zero(const std::array<Rational, N>& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vec4 unit4(std::size_t i);
Vec2 unit2(std::size_t i);

/// 2 x 4 matrix, identified with a point of P^7 = P M_{2,4} in row-major
/// order (t_0, ..., t_7).
struct Matrix2x4 {
  std::array<Vec4, 2> rows{};

  static Matrix2x4 from_coords(const std::array<Rational, 8>& t);
  static Matrix2x4 unit(std::size_t j);  // E_j in the t-coordinates
  Rational& operator()(std::size_t r, std::size_t c) { return rows[r][c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return rows[r][c]; }
  bool is_zero() const { return predeg::is_zero(rows[0]) && predeg::is_zero(rows[1]); }
  int rank() const;
};

class Matrix4 {
 public:
  Matrix4() = default;

  static Matrix4 identity();
  static Matrix4 unit(std::size_t row, std::size_t col);  // E_{row,col}
  static Matrix4 outer(const Vec4& u, const Vec4& v);     // u v^T
  /// Inverse of flatten().
  static Matrix4 from_flat(std::span<const Rational> entries);

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r][c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r][c]; }

  Matrix4 transpose() const;
  Vec4 operator*(const Vec4& v) const;
  Matrix4 operator*(const Matrix4& m) const;
  Matrix4 operator+(const Matrix4& m) const;
  Matrix4 operator-(const Matrix4& m) const;
  Matrix4 scaled(const Rational& c) const;

  bool is_zero() const;
  bool is_symmetric() const;
  int rank() const;
  Rational determinant() const;

  /// Row-major coordinates (a_{0,0}, a_{0,1}, ..., a_{3,3}).
  linalg::Vector flatten() const;

  std::string to_string() const;

  friend bool operator==(const Matrix4&, const Matrix4&) = default;

 private:
  std::array<std::array<Rational, 4>, 4> a_{};
};

/// Frobenius pairing sum_{i,j} a_{i,j} b_{i,j}.
Rational pairing(const Matrix4& a, const Matrix4& b);

Rational dot(const Vec4& a, const Vec4& b);

}  // namespace predeg
