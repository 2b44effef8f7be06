#pragma once

// Segre classes of Segre-embedded products P^{n_1} x ... x P^{n_r} -> P^m,
// m = prod(n_i + 1) - 1, pushed forward to A*(P^m).

#include "predeg/chow.hpp"

namespace predeg::segre {

/// prod(n_i + 1) - 1.
int ambient_dim(const ProductSpace& p);

/// The target P^m as a ProductSpace.
ProductSpace target(const ProductSpace& p);

struct PushedMonomial {
  Integer coeff;
  int power = 0;

  friend bool operator==(const PushedMonomial&, const PushedMonomial&) = default;
};

/// Image of h_1^{a_1} ... h_r^{a_r} cap [Z] in A*(P^m): the product of linear
/// subspaces of dimensions d_i = n_i - a_i has Segre image of degree
/// (sum d_i)! / prod d_i! and codimension m - sum d_i.
PushedMonomial pushforward_monomial(const ProductSpace& p, const Exponents& exps);

ChowClass pushforward_class(const ProductSpace& p, const ChowClass& a);

/// c(N)^{-1} = prod (1 + h_i)^{n_i + 1} / (1 + sum h_i)^{m + 1} for the normal
/// bundle N of the Segre image. Needs r >= 2.
ChowClass normal_inverse_chern(const ProductSpace& p);

/// s(Z, P^m) = c(N)^{-1} cap [Z], pushed forward to P^m.
ChowClass segre_class_pushforward(const ProductSpace& p);

/// (sum n_i)! / prod n_i!.
Integer segre_variety_degree(const ProductSpace& p);

Integer multinomial(std::span<const int> parts);

}  // namespace predeg::segre
