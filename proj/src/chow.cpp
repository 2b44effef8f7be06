#include "predeg/chow.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace predeg {

ProductSpace::ProductSpace(std::vector<int> factor_dims) : dims_(std::move(factor_dims)) {
  if (dims_.empty()) {
    throw std::invalid_argument("product space needs at least one factor");
  }
  for (int n : dims_) {
    if (n < 0) throw std::invalid_argument("factor dimension must be non-negative");
  }
  total_dim_ = std::accumulate(dims_.begin(), dims_.end(), 0);
}

bool ProductSpace::admits(const Exponents& exps) const {
  if (exps.size() != dims_.size()) return false;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (exps[i] < 0 || exps[i] > dims_[i]) return false;
  }
  return true;
}

std::string ProductSpace::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) os << " x ";
    os << "P^" << dims_[i];
  }
  return os.str();
}

int codim_of(const Exponents& exps) { return std::accumulate(exps.begin(), exps.end(), 0); }

ChowClass::ChowClass(ProductSpace ambient, const Terms& terms) : ambient_(std::move(ambient)) {
  for (const auto& [exps, c] : terms) {
    if (!ambient_.admits(exps)) {
      throw std::invalid_argument("monomial exponent out of range for " + ambient_.to_string());
    }
    if (c != 0) terms_.emplace(exps, c);
  }
}

ChowClass ChowClass::one(const ProductSpace& ambient) { return constant(ambient, 1); }

ChowClass ChowClass::constant(const ProductSpace& ambient, const Rational& c) {
  return monomial(ambient, Exponents(ambient.num_factors(), 0), c);
}

ChowClass ChowClass::generator(const ProductSpace& ambient, std::size_t i) {
  if (i >= ambient.num_factors()) throw std::out_of_range("no such factor");
  Exponents e(ambient.num_factors(), 0);
  if (ambient.factor_dim(i) == 0) return zero(ambient);
  e[i] = 1;
  return monomial(ambient, std::move(e));
}

ChowClass ChowClass::monomial(const ProductSpace& ambient, Exponents exps, const Rational& coeff) {
  return ChowClass(ambient, Terms{{std::move(exps), coeff}});
}

ChowClass ChowClass::hyperplane_power(const ProductSpace& ambient, int k, const Rational& coeff) {
  if (ambient.num_factors() != 1) {
    throw std::invalid_argument("hyperplane_power needs a single projective space");
  }
  if (k < 0) throw std::invalid_argument("negative power");
  if (k > ambient.total_dim()) return zero(ambient);
  return monomial(ambient, {k}, coeff);
}

Rational ChowClass::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ChowClass::constant_term() const {
  return coefficient(Exponents(ambient_.num_factors(), 0));
}

int ChowClass::min_codim() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int k = codim_of(e);
    if (best < 0 || k < best) best = k;
  }
  return best;
}

int ChowClass::max_codim() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, codim_of(e));
  return best;
}

void ChowClass::accumulate(const Exponents& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ChowClass ChowClass::scaled(const Rational& c) const {
  ChowClass out(ambient_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

ChowClass ChowClass::pow(unsigned e) const {
  ChowClass result = one(ambient_);
  ChowClass base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

void require_same_ambient(const ChowClass& a, const ChowClass& b) {
  if (!(a.ambient() == b.ambient())) {
    throw std::invalid_argument("ambient mismatch: " + a.ambient().to_string() + " vs " +
                                b.ambient().to_string());
  }
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  require_same_ambient(a, b);
  ChowClass out = a;
  for (const auto& [e, c] : b.terms_) out.accumulate(e, c);
  return out;
}

ChowClass operator-(const ChowClass& a) { return a.scaled(-1); }

ChowClass operator-(const ChowClass& a, const ChowClass& b) {
  require_same_ambient(a, b);
  ChowClass out = a;
  for (const auto& [e, c] : b.terms_) out.accumulate(e, -c);
  return out;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  require_same_ambient(a, b);
  const ProductSpace& p = a.ambient();
  ChowClass out(p);
  Exponents e(p.num_factors());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool vanishes = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > p.factor_dim(i)) {
          vanishes = true;
          break;
        }
      }
      if (!vanishes) out.accumulate(e, ca * cb);
    }
  }
  return out;
}

ChowClass add(const ChowClass& a, const ChowClass& b) { return a + b; }
ChowClass mul(const ChowClass& a, const ChowClass& b) { return a * b; }

ChowClass invert_unit(const ChowClass& a) {
  if (a.constant_term() != 1) {
    throw std::invalid_argument("invert_unit: constant term must be 1");
  }
  const ProductSpace& p = a.ambient();
  // a = 1 - x with x nilpotent, so a^{-1} = 1 + x + x^2 + ... ; x^k = 0 once k > total_dim.
  const ChowClass x = ChowClass::one(p) - a;
  ChowClass result = ChowClass::one(p);
  ChowClass power = ChowClass::one(p);
  for (int k = 1; k <= p.total_dim(); ++k) {
    power = power * x;
    if (power.is_zero()) break;
    result = result + power;
  }
  return result;
}

Rational integrate(const ChowClass& a) {
  const auto dims = a.ambient().factor_dims();
  return a.coefficient(Exponents(dims.begin(), dims.end()));
}

ChowClass codim_part(const ChowClass& a, int j) {
  ChowClass::Terms picked;
  for (const auto& [e, c] : a.terms()) {
    if (codim_of(e) == j) picked.emplace(e, c);
  }
  return ChowClass(a.ambient(), picked);
}

namespace {

void append_monomial(std::ostringstream& os, const Exponents& e,
                     std::span<const std::string> symbols) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    os << symbols[i];
    if (e[i] > 1) os << '^' << e[i];
  }
}

}  // namespace

std::string ChowClass::to_string(std::span<const std::string> symbols) const {
  std::vector<std::string> names;
  if (symbols.size() == ambient_.num_factors()) {
    names.assign(symbols.begin(), symbols.end());
  } else if (ambient_.num_factors() == 1) {
    names = {"H"};
  } else {
    for (std::size_t i = 0; i < ambient_.num_factors(); ++i) names.push_back("h" + std::to_string(i + 1));
  }
  if (terms_.empty()) return "0";

  // Codimension first; within a codimension, higher powers of earlier factors lead.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    int cl = codim_of(l.first), cr = codim_of(r.first);
    if (cl != cr) return cl < cr;
    return l.first > r.first;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = codim_of(e) == 0;
    if (mag != 1 || is_const) os << mag.get_str();
    append_monomial(os, e, names);
  }
  return os.str();
}

}  // namespace predeg
