#include "predeg/verification.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "predeg/quadric.hpp"
#include "predeg/sampling.hpp"
#include "predeg/tangent.hpp"

namespace predeg::verification {

bool Report::all_passed() const { return failures() == 0; }

int Report::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return !c.passed; }));
}

namespace {

using quadric::ProjMatrix;
using tangent::LinearSubspace;
using Coords = std::vector<std::pair<int, int>>;

std::string describe(const Vec2& p, const Vec2& q, const Vec4& k) {
  std::ostringstream os;
  os << "p=(" << p[0].get_str() << "," << p[1].get_str() << ") q=(" << q[0].get_str() << ","
     << q[1].get_str() << ") k=(";
  for (std::size_t i = 0; i < 4; ++i) os << (i ? "," : "") << k[i].get_str();
  os << ")";
  return os.str();
}

/// Runs `check` on `samples` random rank-one points of Z_1 n Z_2 and stops
/// at the first failure.
CheckResult sample_rank_one(const std::string& name, RationalSampler& rng, int samples,
                            const std::function<bool(const Vec2&, const Vec2&, const Vec4&)>& check) {
  CheckResult r{name, true, 0, ""};
  for (int s = 0; s < samples; ++s) {
    const Vec2 p = rng.nonzero_vec2();
    const Vec2 q = rng.nonzero_vec2();
    const Vec4 k = rng.nonzero_vec4();
    ++r.points;
    if (!check(p, q, k)) {
      r.passed = false;
      r.detail = "failed at " + describe(p, q, k);
      return r;
    }
  }
  return r;
}

CheckResult rank_g_canonical() {
  // phi = E_{0,0}: image e_0 = sigma((1:0),(1:0)) in Q, kernel e_0^perp.
  const Vec2 p = unit2(0), q = unit2(0);
  const Vec4 k = unit4(0);
  const ProjMatrix phi = quadric::rank_one_point(p, q, k);
  const auto grads = tangent::gradient_span(phi);
  const Coords row3{{3, 0}, {3, 1}, {3, 2}, {3, 3}};
  const bool ok = phi == ProjMatrix(Matrix4::unit(0, 0)) && grads.dim() == 4 &&
                  tangent::common_tangent(phi) == tangent::coordinate_vanishing(row3) &&
                  tangent::verify_rank_G(p, q, k);
  std::ostringstream os;
  os << "gradient span dim " << grads.dim() << ", common tangent projective dim "
     << tangent::common_tangent(phi).projective_dim();
  return {"rank_G.canonical", ok, 1, os.str()};
}

CheckResult rank_two_stratum() {
  // sigma_1((1:0), (e_0; e_1)) = E_{0,0} + E_{1,1}.
  Matrix2x4 xi;
  xi(0, 0) = 1;
  xi(1, 1) = 1;
  const ProjMatrix phi = quadric::sigma1(unit2(0), xi);
  const auto grads = tangent::gradient_span(phi);
  const std::vector<Matrix4> generators{
      Matrix4::unit(2, 0) - Matrix4::unit(3, 1), Matrix4::unit(2, 1), Matrix4::unit(2, 2),
      Matrix4::unit(2, 3), Matrix4::unit(3, 0), Matrix4::unit(3, 2), Matrix4::unit(3, 3)};
  const bool ok = grads.dim() == 7 && grads == LinearSubspace::span(generators) &&
                  grads.annihilator() == tangent::tangent_Z(tangent::Ruling::first, unit2(0), xi);
  return {"gradient_span.rank2_normal_form", ok, 1,
          "gradient span dim " + std::to_string(grads.dim())};
}

CheckResult intersection_canonical() {
  // The point E_{2,2} = sigma((0:1),(1:0)) e_2^T, where the tangent spaces are
  // the coordinate subspaces below.
  const Vec2 p = unit2(1), q = unit2(0);
  const Vec4 k = unit4(2);
  const Coords z1{{0, 0}, {0, 1}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 3}};
  const Coords z2{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {3, 0}, {3, 1}, {3, 3}};
  const Coords c1{{0, 0}, {0, 1}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {3, 0}, {3, 1}, {3, 3}};
  const bool ok =
      quadric::rank_one_point(p, q, k) == ProjMatrix(Matrix4::unit(2, 2)) &&
      tangent::tangent_Z_at(tangent::Ruling::first, p, q, k) == tangent::coordinate_vanishing(z1) &&
      tangent::tangent_Z_at(tangent::Ruling::second, p, q, k) == tangent::coordinate_vanishing(z2) &&
      tangent::tangent_C1(p, q, k) == tangent::coordinate_vanishing(c1) &&
      tangent::verify_intersection_tangents(p, q, k);
  return {"intersection_tangents.canonical", ok, 1, "phi = E22"};
}

CheckResult tangent_inside_common_tangent(RationalSampler& rng, int samples) {
  CheckResult r{"tangent_Z.inside_common_tangent", true, 0, ""};
  for (int s = 0; s < samples && r.passed; ++s) {
    const Vec2 p = rng.nonzero_vec2();
    const Matrix2x4 xi = rng.nonzero_2x4();
    for (auto which : {tangent::Ruling::first, tangent::Ruling::second}) {
      const ProjMatrix phi = which == tangent::Ruling::first ? quadric::sigma1(p, xi)
                                                             : quadric::sigma2(p, xi);
      const auto tz = tangent::tangent_Z(which, p, xi);
      const auto grads = tangent::gradient_span(phi);
      const std::size_t expected = xi.rank() == 1 ? 4 : 7;
      ++r.points;
      if (tz.dim() != 9 || !tangent::common_tangent(phi).contains(tz) || grads.dim() != expected) {
        r.passed = false;
        r.detail = "failed at sample " + std::to_string(s) + " of ruling " +
                   std::to_string(static_cast<int>(which));
      }
    }
  }
  return r;
}

CheckResult base_membership(RationalSampler& rng, int samples) {
  CheckResult r{"base_scheme.sigma_images", true, 0, ""};
  for (int s = 0; s < samples; ++s) {
    const Vec2 p = rng.nonzero_vec2();
    const Matrix2x4 xi = rng.nonzero_2x4();
    r.points += 2;
    if (!quadric::base_scheme_member(quadric::sigma1(p, xi)) ||
        !quadric::base_scheme_member(quadric::sigma2(p, xi))) {
      r.passed = false;
      r.detail = "failed at sample " + std::to_string(s);
      return r;
    }
  }
  if (quadric::base_scheme_member(ProjMatrix(Matrix4::identity()))) {
    r.passed = false;
    r.detail = "identity reported inside the base locus";
  }
  return r;
}

}  // namespace

Report verify_tangents(std::uint64_t seed, int samples) {
  Report report;
  report.seed = seed;
  report.samples = samples;
  RationalSampler rng(seed);

  report.checks.push_back(rank_g_canonical());
  report.checks.push_back(sample_rank_one("rank_G.random", rng, samples, tangent::verify_rank_G));
  report.checks.push_back(rank_two_stratum());
  report.checks.push_back(intersection_canonical());
  report.checks.push_back(sample_rank_one("intersection_tangents.random", rng, samples,
                                          tangent::verify_intersection_tangents));
  report.checks.push_back(tangent_inside_common_tangent(rng, samples));
  report.checks.push_back(base_membership(rng, samples));
  return report;
}

}  // namespace predeg::verification
