#include "predeg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace predeg::linalg {

IntegerRow clear_denominators(std::span<const Rational> row) {
  Integer scale = 1;
  for (const auto& x : row) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  }
  IntegerRow out;
  out.reserve(row.size());
  for (const auto& x : row) out.push_back(x.get_num() * (scale / x.get_den()));
  return out;
}

Echelon fraction_free_echelon(std::vector<IntegerRow> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  Echelon e;
  e.cols = cols;
  Integer prev = 1;
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows.size(); ++col) {
    std::size_t piv = k;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[k]);
    const Integer& p = rows[k][col];
    for (std::size_t i = k + 1; i < rows.size(); ++i) {
      const Integer factor = rows[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = p * rows[i][j] - factor * rows[k][j];
        // Bareiss: the quotient is again a minor, so the division is exact.
        mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][col] = 0;
      // Columns before `col` are already zero in rows below k.
    }
    prev = p;
    e.pivots.push_back(col);
    ++k;
  }
  rows.resize(k);
  e.rows = std::move(rows);
  return e;
}

Echelon fraction_free_echelon(std::span<const Vector> rows, std::size_t cols) {
  std::vector<IntegerRow> ints;
  ints.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    ints.push_back(clear_denominators(r));
  }
  return fraction_free_echelon(std::move(ints), cols);
}

std::size_t rank(std::span<const Vector> rows, std::size_t cols) {
  return fraction_free_echelon(rows, cols).rank();
}

std::vector<Vector> kernel(std::span<const Vector> rows, std::size_t cols) {
  const Echelon e = fraction_free_echelon(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t k = e.rank(); k-- > 0;) {
      const std::size_t pc = e.pivots[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (x[j] != 0 && e.rows[k][j] != 0) acc += Rational(e.rows[k][j]) * x[j];
      }
      x[pc] = -acc / Rational(e.rows[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Integer determinant(std::vector<IntegerRow> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& r : m) {
    if (r.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace predeg::linalg
