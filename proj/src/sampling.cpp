#include "predeg/sampling.hpp"

namespace predeg {

int RationalSampler::integer(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Rational RationalSampler::rational(int bound) {
  Rational r(integer(-bound, bound), integer(1, bound));
  r.canonicalize();
  return r;
}

Rational RationalSampler::nonzero_rational(int bound) {
  Rational r;
  do {
    r = rational(bound);
  } while (r == 0);
  return r;
}

Vec2 RationalSampler::nonzero_vec2() {
  Vec2 v;
  do {
    for (auto& x : v) x = rational();
  } while (is_zero(v));
  return v;
}

Vec4 RationalSampler::nonzero_vec4() {
  Vec4 v;
  do {
    for (auto& x : v) x = rational();
  } while (is_zero(v));
  return v;
}

Matrix2x4 RationalSampler::nonzero_2x4() {
  Matrix2x4 m;
  do {
    for (auto& row : m.rows) {
      for (auto& x : row) x = rational();
    }
  } while (m.is_zero());
  return m;
}

Matrix4 RationalSampler::matrix4() {
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = rational();
  }
  return m;
}

}  // namespace predeg
