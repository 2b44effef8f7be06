#pragma once

// Class-level calculus for predegree polynomials of hypersurfaces under the
// PGL action: the twist of a class by a line bundle, the coefficient formula
// e_{i,S}, and the group-degree and dimension formulas used for quadrics.
//
// Throughout, N is the dimension of P End(A); for a hypersurface in P^n this
// is n^2 + 2n.

#include <stdexcept>
#include <vector>

#include "predeg/chow.hpp"

namespace predeg {

/// Raised when a quantity that must be an integer comes out fractional,
/// which means the supplied Segre class is wrong.
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficients a_0, ..., a_N of P_X(t) = sum a_i t^i.
class PredegreePolynomial {
 public:
  explicit PredegreePolynomial(std::vector<Integer> coeffs);

  int space_dim() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }

  /// Largest i with a_i != 0, or -1.
  int degree() const;

  /// "1 + 2t + 4t^2 + ...", zero terms omitted.
  std::string to_string() const;

  friend bool operator==(const PredegreePolynomial&, const PredegreePolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// S (x) O(dH) on a single projective space: the codimension-j piece of S is
/// divided by (1 + dH)^j.
ChowClass tensor_class(const ChowClass& s, const Integer& d);

/// e_{i,S} = integral of H^{N-i} (1 - dH)^{-1} ([P^N] - S (x) O(-dH)).
/// S must live on P^N. Throws IntegralityError if the result is fractional.
Integer predegree_coefficient(int space_dim, const Integer& d, const ChowClass& s, int i);

/// a_i = e_{i,S} for i <= dim_orb and a_i = 0 above. The caller certifies
/// that the locus where S differs from the base-scheme Segre class has
/// codimension greater than dim_orb.
PredegreePolynomial predegree_from_segre(int space_dim, const Integer& d, const ChowClass& s,
                                         int dim_orb);

/// a_i / i!.
std::vector<Rational> chern_character_form(const PredegreePolynomial& p);

/// Degree of SO(m) in P(End(K^m) + K):
/// 2^{m-1} det( C(2m - 2i - 2j, m - 2i) )_{1 <= i,j <= floor(m/2)}.
Integer deg_so(int m);

/// Degree of PO(m) in P End(K^m); coincides with deg_so(m).
Integer deg_po(int m);

/// Dimension (n - 1 - 3k/2)(k + 1) of the Fano scheme of k-planes on a smooth
/// quadric in P^n.
int fano_dim(int n, int k);

/// Maximal dimension of a component of the base locus for a smooth quadric in
/// P^n, attained at k = floor((n - 1) / 2).
int max_component_dim(int n);

/// C(n, k) with the convention C(n, k) = 0 outside 0 <= k <= n.
Integer binomial(int n, int k);

}  // namespace predeg
