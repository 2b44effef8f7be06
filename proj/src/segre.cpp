#include "predeg/segre.hpp"

#include <limits>
#include <stdexcept>

namespace predeg::segre {

int ambient_dim(const ProductSpace& p) {
  long long prod = 1;
  for (int n : p.factor_dims()) {
    prod *= static_cast<long long>(n) + 1;
    if (prod > std::numeric_limits<int>::max()) throw std::overflow_error("Segre target too large");
  }
  return static_cast<int>(prod - 1);
}

ProductSpace target(const ProductSpace& p) { return ProductSpace::projective(ambient_dim(p)); }

Integer multinomial(std::span<const int> parts) {
  Integer result = 1;
  unsigned long running = 0;
  for (int k : parts) {
    if (k < 0) throw std::invalid_argument("multinomial: negative part");
    // Build up as a product of binomials C(d_1 + ... + d_i, d_i).
    running += static_cast<unsigned long>(k);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), running, static_cast<unsigned long>(k));
    result *= b;
  }
  return result;
}

PushedMonomial pushforward_monomial(const ProductSpace& p, const Exponents& exps) {
  if (!p.admits(exps)) throw std::invalid_argument("pushforward_monomial: exponent out of range");
  std::vector<int> d(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) d[i] = p.factor_dim(i) - exps[i];
  const int m = ambient_dim(p);
  return {multinomial(d), m - p.total_dim() + codim_of(exps)};
}

ChowClass pushforward_class(const ProductSpace& p, const ChowClass& a) {
  if (!(a.ambient() == p)) throw std::invalid_argument("pushforward_class: ambient mismatch");
  const ProductSpace tgt = target(p);
  ChowClass out(tgt);
  for (const auto& [e, c] : a.terms()) {
    const auto pm = pushforward_monomial(p, e);
    out = out + ChowClass::hyperplane_power(tgt, pm.power, c * Rational(pm.coeff));
  }
  return out;
}

ChowClass normal_inverse_chern(const ProductSpace& p) {
  if (p.num_factors() < 2) {
    throw std::invalid_argument("normal_inverse_chern needs at least two factors");
  }
  const int m = ambient_dim(p);
  const ChowClass one = ChowClass::one(p);
  ChowClass numerator = one;
  ChowClass sum = one;
  for (std::size_t i = 0; i < p.num_factors(); ++i) {
    const ChowClass h = ChowClass::generator(p, i);
    numerator = numerator * (one + h).pow(static_cast<unsigned>(p.factor_dim(i) + 1));
    sum = sum + h;
  }
  return numerator * invert_unit(sum.pow(static_cast<unsigned>(m + 1)));
}

ChowClass segre_class_pushforward(const ProductSpace& p) {
  return pushforward_class(p, normal_inverse_chern(p));
}

Integer segre_variety_degree(const ProductSpace& p) { return multinomial(p.factor_dims()); }

}  // namespace predeg::segre
