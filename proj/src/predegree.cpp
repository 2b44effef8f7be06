#include "predeg/predegree.hpp"

#include <sstream>

#include "predeg/linalg.hpp"

namespace predeg {

PredegreePolynomial::PredegreePolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("predegree polynomial needs a_0");
}

int PredegreePolynomial::degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

std::string PredegreePolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Integer mag = abs(c);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return first ? "0" : os.str();
}

namespace {

void require_projective_space(const ChowClass& s) {
  if (s.ambient().num_factors() != 1) {
    throw std::invalid_argument("class must live on a single projective space");
  }
}

}  // namespace

ChowClass tensor_class(const ChowClass& s, const Integer& d) {
  require_projective_space(s);
  const ProductSpace& p = s.ambient();
  const ChowClass one = ChowClass::one(p);
  const ChowClass inv = invert_unit(one + ChowClass::hyperplane_power(p, 1, Rational(d)));
  ChowClass out(p);
  ChowClass inv_power = one;  // (1 + dH)^{-j}
  for (int j = 0; j <= p.total_dim(); ++j) {
    if (j > 0) inv_power = inv_power * inv;
    const ChowClass piece = codim_part(s, j);
    if (!piece.is_zero()) out = out + piece * inv_power;
  }
  return out;
}

Integer predegree_coefficient(int space_dim, const Integer& d, const ChowClass& s, int i) {
  require_projective_space(s);
  if (s.ambient().total_dim() != space_dim) {
    throw std::invalid_argument("Segre class does not live on P^N");
  }
  if (i < 0 || i > space_dim) throw std::out_of_range("predegree_coefficient: i out of [0, N]");
  const ProductSpace& p = s.ambient();
  const ChowClass one = ChowClass::one(p);
  const ChowClass twisted = tensor_class(s, -d);
  const ChowClass inv = invert_unit(one - ChowClass::hyperplane_power(p, 1, Rational(d)));
  const ChowClass integrand =
      ChowClass::hyperplane_power(p, space_dim - i) * inv * (one - twisted);
  const Rational value = integrate(integrand);
  if (value.get_den() != 1) {
    throw IntegralityError("e_{" + std::to_string(i) + ",S} = " + value.get_str() +
                           " is not an integer");
  }
  return value.get_num();
}

PredegreePolynomial predegree_from_segre(int space_dim, const Integer& d, const ChowClass& s,
                                         int dim_orb) {
  if (dim_orb < 0 || dim_orb > space_dim) {
    throw std::out_of_range("dim_orb must lie in [0, N]");
  }
  std::vector<Integer> coeffs(static_cast<std::size_t>(space_dim) + 1, Integer(0));
  for (int i = 0; i <= dim_orb; ++i) coeffs[i] = predegree_coefficient(space_dim, d, s, i);
  return PredegreePolynomial(std::move(coeffs));
}

std::vector<Rational> chern_character_form(const PredegreePolynomial& p) {
  std::vector<Rational> out;
  Integer factorial = 1;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i > 0) factorial *= static_cast<unsigned long>(i);
    Rational q(p[i], factorial);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Integer deg_so(int m) {
  if (m < 2) throw std::invalid_argument("deg_so needs m >= 2");
  const int size = m / 2;
  std::vector<linalg::IntegerRow> mat(size, linalg::IntegerRow(size));
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) mat[i - 1][j - 1] = binomial(2 * m - 2 * i - 2 * j, m - 2 * i);
  }
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(m - 1));
  return two_pow * linalg::determinant(std::move(mat));
}

Integer deg_po(int m) { return deg_so(m); }

int fano_dim(int n, int k) {
  if (n < 1 || k < 0 || k > (n - 1) / 2) {
    throw std::out_of_range("fano_dim: no k-planes on a smooth quadric in P^n for this k");
  }
  // (n - 1 - 3k/2)(k + 1) = (2n - 2 - 3k)(k + 1) / 2, exact because k(k + 1) is even.
  return (2 * n - 2 - 3 * k) * (k + 1) / 2;
}

int max_component_dim(int n) {
  if (n < 1) throw std::invalid_argument("max_component_dim needs n >= 1");
  const int k = (n - 1) / 2;
  return fano_dim(n, k) + (n + 1) * (k + 1) - 1;
}

}  // namespace predeg
