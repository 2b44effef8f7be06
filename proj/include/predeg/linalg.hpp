#pragma once

// Exact linear algebra over Q. Every rank and kernel computation goes through
// fraction-free (Bareiss) elimination on integer rows: each rational row is
// first rescaled by the lcm of its denominators, which leaves the row space
// unchanged.

#include <cstddef>
#include <span>
#include <vector>

#include "predeg/chow.hpp"

namespace predeg::linalg {

using Vector = std::vector<Rational>;
using IntegerRow = std::vector<Integer>;

/// Row-echelon form produced by fraction-free elimination. Entry (k, pivots[k])
/// is the k-th leading principal minor along the pivot columns.
struct Echelon {
  std::vector<IntegerRow> rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;

  std::size_t rank() const { return pivots.size(); }
};

IntegerRow clear_denominators(std::span<const Rational> row);

Echelon fraction_free_echelon(std::span<const Vector> rows, std::size_t cols);
Echelon fraction_free_echelon(std::vector<IntegerRow> rows, std::size_t cols);

std::size_t rank(std::span<const Vector> rows, std::size_t cols);

/// Basis of { x : row . x = 0 for every row }.
std::vector<Vector> kernel(std::span<const Vector> rows, std::size_t cols);

/// Exact determinant of a square integer matrix.
Integer determinant(std::vector<IntegerRow> m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);

}  // namespace predeg::linalg
