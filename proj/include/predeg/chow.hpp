#pragma once

// Exact arithmetic in the Chow ring of a product of projective spaces,
//
//   A*(P^{n_1} x ... x P^{n_r}) = Q[h_1, ..., h_r] / (h_1^{n_1+1}, ..., h_r^{n_r+1}),
//
// where h_i is the pullback of the hyperplane class of the i-th factor.
// Classes are kept in operator form; capping with the fundamental class
// happens implicitly in integrate().

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace predeg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent tuple (e_1, ..., e_r) of a monomial h_1^{e_1} ... h_r^{e_r}.
using Exponents = std::vector<int>;

/// Ambient P^{n_1} x ... x P^{n_r}.
class ProductSpace {
 public:
  explicit ProductSpace(std::vector<int> factor_dims);
  ProductSpace(std::initializer_list<int> factor_dims)
      : ProductSpace(std::vector<int>(factor_dims)) {}

  static ProductSpace projective(int n) { return ProductSpace({n}); }

  std::span<const int> factor_dims() const { return dims_; }
  int factor_dim(std::size_t i) const { return dims_.at(i); }
  std::size_t num_factors() const { return dims_.size(); }
  int total_dim() const { return total_dim_; }

  /// True iff 0 <= e_i <= n_i for every factor.
  bool admits(const Exponents& exps) const;

  std::string to_string() const;

  friend bool operator==(const ProductSpace&, const ProductSpace&) = default;

 private:
  std::vector<int> dims_;
  int total_dim_ = 0;
};

int codim_of(const Exponents& exps);

/// Element of A*(ambient) with exact rational coefficients. Terms are stored
/// sparsely; no stored coefficient is zero and every exponent respects the
/// truncation h_i^{n_i+1} = 0.
class ChowClass {
 public:
  using Terms = std::map<Exponents, Rational>;

  explicit ChowClass(ProductSpace ambient) : ambient_(std::move(ambient)) {}

  /// Builds a class from raw terms. Out-of-range monomials are rejected,
  /// zero coefficients are dropped and repeated keys cannot occur.
  ChowClass(ProductSpace ambient, const Terms& terms);

  static ChowClass zero(const ProductSpace& ambient) { return ChowClass(ambient); }
  static ChowClass one(const ProductSpace& ambient);
  static ChowClass constant(const ProductSpace& ambient, const Rational& c);
  /// The hyperplane class h_i of factor i.
  static ChowClass generator(const ProductSpace& ambient, std::size_t i);
  static ChowClass monomial(const ProductSpace& ambient, Exponents exps,
                            const Rational& coeff = 1);
  /// c * H^k on a single projective space; zero when k exceeds the dimension.
  static ChowClass hyperplane_power(const ProductSpace& ambient, int k,
                                    const Rational& coeff = 1);

  const ProductSpace& ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& exps) const;
  Rational constant_term() const;

  /// Lowest codimension carrying a nonzero term, or -1 for the zero class.
  int min_codim() const;
  int max_codim() const;

  ChowClass pow(unsigned e) const;
  ChowClass scaled(const Rational& c) const;

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a);
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const Rational& c, const ChowClass& a) { return a.scaled(c); }

  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }

  /// Human-readable form such as "1 - 14k1 - 8k2 + 128k1k2". A single
  /// factor prints as H, several factors print as h1, h2, ... unless
  /// custom symbols are given.
  std::string to_string(std::span<const std::string> symbols = {}) const;

 private:
  void accumulate(const Exponents& exps, const Rational& c);

  ProductSpace ambient_;
  Terms terms_;
};

void require_same_ambient(const ChowClass& a, const ChowClass& b);

ChowClass add(const ChowClass& a, const ChowClass& b);
ChowClass mul(const ChowClass& a, const ChowClass& b);

/// Inverse of a class of the form 1 + (nilpotent). Uses the geometric series
/// in the nilpotent part, which terminates past total_dim.
ChowClass invert_unit(const ChowClass& a);

/// Coefficient of the top monomial h_1^{n_1} ... h_r^{n_r}.
Rational integrate(const ChowClass& a);

/// The codimension-j piece of a.
ChowClass codim_part(const ChowClass& a, int j);

}  // namespace predeg
