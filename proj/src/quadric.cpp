#include "predeg/quadric.hpp"

#include <sstream>
#include <stdexcept>

#include "predeg/segre.hpp"

namespace predeg::quadric {

QuadricGram::QuadricGram(const Matrix4& m) : m_(m) {
  if (!m_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  if (m_.is_zero()) throw std::invalid_argument("Gram matrix must be nonzero");
}

QuadricGram QuadricGram::canonical() {
  Matrix4 m;
  const Rational half(1, 2);
  m(0, 3) = half;
  m(3, 0) = half;
  m(1, 2) = -half;
  m(2, 1) = -half;
  return QuadricGram(m);
}

Rational QuadricGram::value(const Vec4& x) const { return dot(x, m_ * x); }

Vec4 QuadricGram::gradient(const Vec4& x) const {
  Vec4 g = m_ * x;
  for (auto& v : g) v *= 2;
  return g;
}

ProjMatrix::ProjMatrix(Matrix4 m) : m_(std::move(m)) {
  if (m_.is_zero()) throw std::invalid_argument("the zero matrix is not a point of P^15");
}

bool operator==(const ProjMatrix& a, const ProjMatrix& b) {
  // Proportional iff every 2x2 minor of the 2 x 16 stacked matrix vanishes.
  const auto u = a.m_.flatten();
  const auto v = b.m_.flatten();
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = i + 1; j < 16; ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

namespace {

void require_nonzero(const Vec4& q) {
  if (is_zero(q)) throw std::invalid_argument("q must be a nonzero vector");
}

}  // namespace

Rational point_condition_value(const ProjMatrix& phi, const Vec4& q, const QuadricGram& f) {
  require_nonzero(q);
  return f.value(phi.matrix() * q);
}

Matrix4 point_condition_gradient(const ProjMatrix& phi, const Vec4& q, const QuadricGram& f) {
  require_nonzero(q);
  return Matrix4::outer(f.gradient(phi.matrix() * q), q);
}

Vec4 segre_point(const Vec2& s, const Vec2& t) {
  return {s[0] * t[0], s[0] * t[1], s[1] * t[0], s[1] * t[1]};
}

Matrix4 sigma1_lift(const Vec2& p, const Matrix2x4& xi) {
  Matrix4 m;
  for (std::size_t c = 0; c < 4; ++c) {
    m(0, c) = p[0] * xi(0, c);
    m(1, c) = p[0] * xi(1, c);
    m(2, c) = p[1] * xi(0, c);
    m(3, c) = p[1] * xi(1, c);
  }
  return m;
}

Matrix4 sigma2_lift(const Vec2& p, const Matrix2x4& xi) {
  Matrix4 m;
  for (std::size_t c = 0; c < 4; ++c) {
    m(0, c) = p[0] * xi(0, c);
    m(1, c) = p[1] * xi(0, c);
    m(2, c) = p[0] * xi(1, c);
    m(3, c) = p[1] * xi(1, c);
  }
  return m;
}

namespace {

void require_segre_input(const Vec2& p, const Matrix2x4& xi) {
  if (is_zero(p)) throw std::invalid_argument("p must be a nonzero point of P^1");
  if (xi.is_zero()) throw std::invalid_argument("xi must be a nonzero point of P^7");
}

}  // namespace

ProjMatrix sigma1(const Vec2& p, const Matrix2x4& xi) {
  require_segre_input(p, xi);
  return ProjMatrix(sigma1_lift(p, xi));
}

ProjMatrix sigma2(const Vec2& p, const Matrix2x4& xi) {
  require_segre_input(p, xi);
  return ProjMatrix(sigma2_lift(p, xi));
}

Matrix4 rank_one_lift(const Vec2& p, const Vec2& q, const Vec4& k) {
  return Matrix4::outer(segre_point(p, q), k);
}

ProjMatrix rank_one_point(const Vec2& p, const Vec2& q, const Vec4& k) {
  if (is_zero(p) || is_zero(q) || is_zero(k)) {
    throw std::invalid_argument("rank_one_point: inputs must be nonzero");
  }
  return ProjMatrix(rank_one_lift(p, q, k));
}

bool base_scheme_member(const ProjMatrix& phi, const QuadricGram& f) {
  const Matrix4& a = phi.matrix();
  return (a.transpose() * f.matrix() * a).is_zero();
}

ChowClass doubled_segre_class() {
  return segre::segre_class_pushforward(ProductSpace{1, 7}).scaled(2);
}

PredegreePolynomial predegree_quadric_p3() {
  static_assert(kIntersectionCodim == 10);
  static_assert(kIntersectionCodim > kOrbitDim,
                "S must agree with the Segre class of B past codimension dim orb(Q)");
  return predegree_from_segre(15, 2, doubled_segre_class(), kOrbitDim);
}

std::string Table1Row::polynomial_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const auto& c = coefficients[i];
    if (c && *c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (!c) {
      os << '*';
    } else if (i == 0 || *c != 1) {
      os << c->get_str();
    }
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return first ? "0" : os.str();
}

Table1Row table1_row(int n) {
  if (n < 1) throw std::invalid_argument("table1_row needs n >= 1");
  Table1Row row;
  row.n = n;
  row.sym_dim = (n + 1) * (n + 2) / 2 - 1;
  row.max_component_dim = max_component_dim(n);
  const int space_dim = n * n + 2 * n;
  row.coefficients.assign(static_cast<std::size_t>(space_dim) + 1, std::nullopt);

  if (n == 3) {
    const auto full = predegree_quadric_p3();
    for (int i = 0; i <= space_dim; ++i) row.coefficients[i] = full[i];
    return row;
  }

  // The orbit of a smooth quadric is dense, so dim orb = dim P Sym^2.
  const int dim_orb = row.sym_dim;
  const int base_codim = space_dim - row.max_component_dim;
  for (int i = 0; i <= space_dim; ++i) {
    if (i > dim_orb) {
      row.coefficients[i] = Integer(0);
    } else if (i == dim_orb) {
      row.coefficients[i] = deg_po(n + 1);
    } else if (i < base_codim) {
      Integer two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(i));
      row.coefficients[i] = two_pow;
    }
  }
  return row;
}

std::vector<Table2Row> table2() {
  const auto p = predegree_quadric_p3();
  std::vector<Table2Row> rows;
  for (int i = 0; i <= kOrbitDim; ++i) {
    Integer count = p[i];
    if (i == kOrbitDim) {
      const Integer stab = deg_po(4);
      if (count % stab != 0) throw IntegralityError("leading coefficient not divisible by deg PO(4)");
      count /= stab;
    }
    rows.push_back({i, count});
  }
  return rows;
}

}  // namespace predeg::quadric
