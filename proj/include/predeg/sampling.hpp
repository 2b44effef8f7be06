#pragma once

#include <cstdint>
#include <random>

#include "predeg/matrix4.hpp"

namespace predeg {

/// Seeded source of small rationals p/q with |p| <= 10 and 1 <= q <= 10.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  Rational rational(int bound = 10);
  Rational nonzero_rational(int bound = 10);
  int integer(int lo, int hi);

  Vec2 nonzero_vec2();
  Vec4 nonzero_vec4();
  Matrix2x4 nonzero_2x4();
  Matrix4 matrix4();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace predeg
