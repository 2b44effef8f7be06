#include "predeg/matrix4.hpp"

#include <sstream>
#include <stdexcept>

namespace predeg {

Vec4 unit4(std::size_t i) {
  Vec4 v{};
  v.at(i) = 1;
  return v;
}

Vec2 unit2(std::size_t i) {
  Vec2 v{};
  v.at(i) = 1;
  return v;
}

Matrix2x4 Matrix2x4::from_coords(const std::array<Rational, 8>& t) {
  Matrix2x4 m;
  for (std::size_t j = 0; j < 8; ++j) m.rows[j / 4][j % 4] = t[j];
  return m;
}

Matrix2x4 Matrix2x4::unit(std::size_t j) {
  if (j >= 8) throw std::out_of_range("Matrix2x4::unit");
  Matrix2x4 m;
  m.rows[j / 4][j % 4] = 1;
  return m;
}

int Matrix2x4::rank() const {
  std::vector<linalg::Vector> r{{rows[0].begin(), rows[0].end()}, {rows[1].begin(), rows[1].end()}};
  return static_cast<int>(linalg::rank(r, 4));
}

Matrix4 Matrix4::identity() {
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i) m.a_[i][i] = 1;
  return m;
}

Matrix4 Matrix4::unit(std::size_t row, std::size_t col) {
  Matrix4 m;
  m.a_.at(row).at(col) = 1;
  return m;
}

Matrix4 Matrix4::outer(const Vec4& u, const Vec4& v) {
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m.a_[i][j] = u[i] * v[j];
  }
  return m;
}

Matrix4 Matrix4::from_flat(std::span<const Rational> entries) {
  if (entries.size() != 16) throw std::invalid_argument("a 4x4 matrix needs 16 entries");
  Matrix4 m;
  for (std::size_t k = 0; k < 16; ++k) m.a_[k / 4][k % 4] = entries[k];
  return m;
}

Matrix4 Matrix4::transpose() const {
  Matrix4 t;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) t.a_[j][i] = a_[i][j];
  }
  return t;
}

Vec4 Matrix4::operator*(const Vec4& v) const {
  Vec4 out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out[i] += a_[i][j] * v[j];
  }
  return out;
}

Matrix4 Matrix4::operator*(const Matrix4& m) const {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      if (a_[i][k] == 0) continue;
      for (std::size_t j = 0; j < 4; ++j) out.a_[i][j] += a_[i][k] * m.a_[k][j];
    }
  }
  return out;
}

Matrix4 Matrix4::operator+(const Matrix4& m) const {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out.a_[i][j] = a_[i][j] + m.a_[i][j];
  }
  return out;
}

Matrix4 Matrix4::operator-(const Matrix4& m) const { return *this + m.scaled(-1); }

Matrix4 Matrix4::scaled(const Rational& c) const {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out.a_[i][j] = a_[i][j] * c;
  }
  return out;
}

bool Matrix4::is_zero() const {
  for (const auto& row : a_) {
    if (!predeg::is_zero(row)) return false;
  }
  return true;
}

bool Matrix4::is_symmetric() const { return *this == transpose(); }

int Matrix4::rank() const {
  std::vector<linalg::Vector> rows;
  for (const auto& r : a_) rows.emplace_back(r.begin(), r.end());
  return static_cast<int>(linalg::rank(rows, 4));
}

Rational Matrix4::determinant() const {
  // Clear denominators row by row, take the integer determinant, then undo.
  std::vector<linalg::IntegerRow> rows;
  Rational scale = 1;
  for (const auto& r : a_) {
    auto ints = linalg::clear_denominators(r);
    for (std::size_t j = 0; j < 4; ++j) {
      if (r[j] != 0) {
        scale *= Rational(r[j]) / Rational(ints[j]);
        break;
      }
    }
    rows.push_back(std::move(ints));
  }
  return scale * Rational(linalg::determinant(std::move(rows)));
}

linalg::Vector Matrix4::flatten() const {
  linalg::Vector v;
  v.reserve(16);
  for (const auto& r : a_) v.insert(v.end(), r.begin(), r.end());
  return v;
}

std::string Matrix4::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < 4; ++i) {
    os << (i ? "; " : "[");
    for (std::size_t j = 0; j < 4; ++j) os << (j ? " " : "") << a_[i][j].get_str();
  }
  os << "]";
  return os.str();
}

Rational pairing(const Matrix4& a, const Matrix4& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) s += a(i, j) * b(i, j);
  }
  return s;
}

Rational dot(const Vec4& a, const Vec4& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace predeg
