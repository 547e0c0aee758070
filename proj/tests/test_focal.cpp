// Tests for complex focal radii, the lifted shape-operator spectrum, focal
// hyperplane arrangements and their real slices, Jacobi-field growth
// predicates, and affine invariance of catalog arrangements.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "equifocal/focal.hpp"
#include "equifocal/hermann.hpp"
#include "equifocal/reflgroup.hpp"
#include "equifocal/symcat.hpp"

using namespace equifocal;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

const std::vector<SymmetricSpaceDescriptor>& spaces() {
  static std::vector<SymmetricSpaceDescriptor> catalog =
      catalog_load(catalog_dir() + "/symmetric_spaces.json");
  return catalog;
}

const std::vector<HermannActionDescriptor>& actions() {
  static std::vector<HermannActionDescriptor> catalog =
      hermann_catalog_load(catalog_dir() + "/hermann_actions.json", spaces());
  return catalog;
}

const HermannActionDescriptor& action(const std::string& h_label,
                                      const std::string& space_label,
                                      std::map<std::string, long long> params) {
  const HermannActionDescriptor* found =
      find_action(actions(), h_label, space_label, params);
  REQUIRE(found != nullptr);
  return *found;
}

bool vec_eq(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

// A fixed rational basepoint with no repeated coordinates; for root systems
// spanning only the sum-zero subspace (A kinds and the rank-two hexagonal
// one) the mean is removed so the basepoint lies in the span of the roots.
ExactVector principal_basepoint(const SymmetricSpaceDescriptor& space) {
  static const std::vector<Rational> seed = {
      Rational(3), Rational(5, 2), Rational(7, 3), Rational(11, 4),
      Rational(13, 5)};
  RootSystem rs = restricted_system(space);
  ExactVector xi(rs.ambient_dim);
  for (Eigen::Index i = 0; i < rs.ambient_dim; ++i) xi(i) = seed.at(i);
  if (space.restricted_type == "A" || space.restricted_type == "G2") {
    Rational mean(0);
    for (Eigen::Index i = 0; i < rs.ambient_dim; ++i) mean += xi(i);
    mean = mean / Rational(rs.ambient_dim);
    for (Eigen::Index i = 0; i < rs.ambient_dim; ++i) xi(i) -= mean;
  }
  // Principal for every root, not just the vertical ones.
  for (const Root& r : positive_roots(rs))
    REQUIRE(!inner(r.vector, xi).is_zero());
  return xi;
}

ExactVector rational_vec(std::vector<Rational> entries) {
  ExactVector v(static_cast<Eigen::Index>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) v(i) = entries[i];
  return v;
}

FocalHyperplane plane(std::vector<Rational> root, Rational offset,
                      FocalHyperplane::Family family, int j_min, int j_max) {
  FocalHyperplane h;
  h.root = rational_vec(std::move(root));
  h.family = family;
  h.offset = offset;
  h.base_offset = offset.to_double();
  double shift = family == FocalHyperplane::Family::half_integer_pi ? 0.5 : 0.0;
  for (int j = j_min; j <= j_max; ++j)
    h.levels.push_back(ComplexScalar(h.base_offset, (j + shift) * kPi));
  return h;
}

// Positive roots that are not the sum of two positive roots.
std::vector<ExactVector> simple_roots(const std::vector<Root>& pos) {
  std::vector<ExactVector> out;
  for (size_t i = 0; i < pos.size(); ++i) {
    bool decomposable = false;
    for (size_t a = 0; a < pos.size() && !decomposable; ++a)
      for (size_t b = a; b < pos.size() && !decomposable; ++b)
        if (vec_eq(pos[a].vector + pos[b].vector, pos[i].vector))
          decomposable = true;
    if (!decomposable) out.push_back(pos[i].vector);
  }
  return out;
}

}  // namespace

TEST_CASE("complex focal radii across the branch classification") {
  SUBCASE("shape eigenvalue dominating the curvature speed") {
    std::vector<ComplexScalar> radii = complex_focal_radii(2.0, 1.0);
    REQUIRE(radii.size() == 7);
    for (const ComplexScalar& z : radii)
      CHECK(z.real() == doctest::Approx(0.5493061443340548).epsilon(1e-12));
    CHECK(radii[3].imag() == doctest::Approx(0.0));
    CHECK(radii[4].imag() == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(radii[0].imag() == doctest::Approx(-3 * kPi).epsilon(1e-12));
  }
  SUBCASE("curvature speed dominating the shape eigenvalue") {
    std::vector<ComplexScalar> radii = complex_focal_radii(1.0, 2.0, 0, 0);
    REQUIRE(radii.size() == 1);
    CHECK(radii[0].real() == doctest::Approx(0.2746530721670274).epsilon(1e-12));
    CHECK(radii[0].imag() == doctest::Approx(kPi / 4.0).epsilon(1e-12));
  }
  SUBCASE("flat direction") {
    std::vector<ComplexScalar> radii = complex_focal_radii(3.0, 0.0);
    REQUIRE(radii.size() == 1);
    CHECK(radii[0].real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(radii[0].imag() == 0.0);
    CHECK(complex_focal_radii(0.0, 0.0).empty());
  }
  SUBCASE("umbilical-speed boundary has no focal radius") {
    CHECK(complex_focal_radii(1.0, 1.0).empty());
    CHECK(complex_focal_radii(-1.0, 1.0).empty());
    CHECK(complex_focal_radii(2.0 + 1e-12, 2.0).empty());
  }
  SUBCASE("kernel eigenvalue with curved direction") {
    std::vector<ComplexScalar> radii = complex_focal_radii(0.0, 1.0, 0, 1);
    REQUIRE(radii.size() == 2);
    CHECK(radii[0].real() == doctest::Approx(0.0));
    CHECK(radii[0].imag() == doctest::Approx(1.5707963267948966).epsilon(1e-12));
    CHECK(radii[1].imag() == doctest::Approx(3 * kPi / 2.0).epsilon(1e-12));
  }
  SUBCASE("negative eigenvalue lands in the mirrored branch") {
    std::vector<ComplexScalar> radii = complex_focal_radii(-2.0, 1.0, 0, 0);
    REQUIRE(radii.size() == 1);
    CHECK(radii[0].real() == doctest::Approx(-0.5493061443340548).epsilon(1e-12));
  }
  SUBCASE("empty index range and invalid speed") {
    CHECK(complex_focal_radii(2.0, 1.0, 1, 0).empty());
    CHECK(complex_focal_radii(3.0, 0.0, 1, 0).size() == 1);
    CHECK_THROWS_AS(complex_focal_radii(1.0, -0.5), std::invalid_argument);
  }
}

TEST_CASE("each focal radius solves the focal equation") {
  struct Probe {
    double lambda, beta_v;
  };
  for (const Probe& p : std::vector<Probe>{
           {2.0, 1.0}, {-3.0, 1.0}, {0.5, 2.0}, {0.0, 1.7}, {10.0, 0.25}}) {
    for (const ComplexScalar& z : complex_focal_radii(p.lambda, p.beta_v)) {
      ComplexScalar arg = z * p.beta_v;
      ComplexScalar residual =
          std::cosh(arg) - p.lambda * std::sinh(arg) / p.beta_v;
      CHECK(std::abs(residual) < 1e-9);
    }
  }
  for (const ComplexScalar& z : complex_focal_radii(3.0, 0.0))
    CHECK(std::abs(1.0 - z * 3.0) < 1e-9);
}

TEST_CASE("lifted spectrum values and duality with focal radii") {
  SUBCASE("frozen branch values") {
    JacobiSpectralDatum strong{{{2.0, -1.0, 1.0}}};
    std::vector<ComplexScalar> lifted = lifted_spectrum(strong, 0, 0);
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0] == ComplexScalar(0.0, 0.0));
    CHECK(lifted[1].real() == doctest::Approx(1.8204784532536746).epsilon(1e-12));
    CHECK(lifted[1].imag() == doctest::Approx(0.0));

    JacobiSpectralDatum kernel{{{0.0, -1.0, 1.0}}};
    lifted = lifted_spectrum(kernel, 0, 0);
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[1].real() == doctest::Approx(0.0));
    CHECK(lifted[1].imag() ==
          doctest::Approx(-0.6366197723675814).epsilon(1e-12));

    JacobiSpectralDatum flat{{{5.0, 0.0, 1.0}}};
    lifted = lifted_spectrum(flat, 0, 0);
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[1] == ComplexScalar(5.0, 0.0));
  }
  SUBCASE("rejections") {
    CHECK_THROWS_WITH_AS(lifted_spectrum({{{1.0, -1.0, 1.0}}}, 0, 0),
                         "not proper complex equifocal datum",
                         std::invalid_argument);
    CHECK_THROWS_AS(lifted_spectrum({{{1.0, 0.5, 1.0}}}, 0, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(lifted_spectrum({{{1.0, -4.0, 0.0}}}, 0, 0),
                    std::invalid_argument);
  }
  SUBCASE("reciprocal pairing with complex focal radii") {
    struct Probe {
      double lambda, mu;
    };
    for (const Probe& p : std::vector<Probe>{
             {2.0, -1.0}, {0.3, -4.0}, {-5.0, -2.25}, {0.0, -1.0}}) {
      double s = std::sqrt(-p.mu);
      std::vector<ComplexScalar> radii = complex_focal_radii(p.lambda, s, -2, 2);
      JacobiSpectralDatum datum{{{p.lambda, p.mu, 1.0}}};
      std::vector<ComplexScalar> lifted = lifted_spectrum(datum, -2, 2);
      REQUIRE(lifted.size() == radii.size() + 1);
      for (size_t i = 0; i < radii.size(); ++i)
        CHECK(std::abs(lifted[i + 1] - 1.0 / radii[i]) < 1e-9);
    }
  }
}

TEST_CASE("jacobi field growth, decay, and zeros") {
  SUBCASE("boundary-eigenvalue direction decays exponentially") {
    JacobiSpectralDatum datum{{{1.0, -1.0, 1.0}}};
    CHECK(jacobi_norm_sq(datum, 1.0) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    double far = jacobi_norm_sq(datum, 50.0);
    CHECK(far > 0.0);
    CHECK(far < 1e-40);
  }
  SUBCASE("constant field") {
    JacobiSpectralDatum datum{{{0.0, 0.0, 1.0}}};
    CHECK(jacobi_norm_sq(datum, 0.0) == doctest::Approx(1.0));
    CHECK(jacobi_norm_sq(datum, 3.7) == doctest::Approx(1.0));
  }
  SUBCASE("flat focal zero") {
    JacobiSpectralDatum datum{{{2.0, 0.0, 1.0}}};
    CHECK(jacobi_norm_sq(datum, 0.5) == doctest::Approx(0.0));
  }
  SUBCASE("superlinear growth away from the boundary eigenvalues") {
    for (const JacobiSpectralDatum& datum :
         std::vector<JacobiSpectralDatum>{{{{2.0, -1.0, 1.0}, {0.0, 0.0, 3.0}}},
                                          {{{0.0, -1.0, 1.0}}},
                                          {{{-3.0, -4.0, 0.5}}}}) {
      double t = 50.0;
      CHECK(jacobi_norm_sq(datum, t) / (t * t) > 1e10);
    }
  }
  SUBCASE("invalid data") {
    CHECK_THROWS_AS(jacobi_norm_sq({{{1.0, 0.5, 1.0}}}, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(jacobi_norm_sq({{{1.0, -1.0, -2.0}}}, 1.0),
                    std::invalid_argument);
  }
}

TEST_CASE("focal points at the ideal boundary") {
  IdealBoundaryFocal r = ideal_boundary_focal({{{1.0, -1.0, 1.0}}});
  CHECK(r.has_focal);
  CHECK(r.has_non_euclidean_focal);

  r = ideal_boundary_focal({{{2.0, -1.0, 1.0}}});
  CHECK(!r.has_focal);
  CHECK(!r.has_non_euclidean_focal);

  r = ideal_boundary_focal({{{0.0, 0.0, 1.0}}});
  CHECK(r.has_focal);
  CHECK(!r.has_non_euclidean_focal);

  r = ideal_boundary_focal({{{-2.0, -4.0, 1.0}}});
  CHECK(r.has_focal);
  CHECK(r.has_non_euclidean_focal);

  r = ideal_boundary_focal({{{2.0, -1.0, 1.0}, {0.0, 0.0, 1.0}}});
  CHECK(r.has_focal);
  CHECK(!r.has_non_euclidean_focal);

  r = ideal_boundary_focal({{{-1.0000000001, -1.0, 1.0}}});
  CHECK(r.has_non_euclidean_focal);

  CHECK_THROWS_AS(ideal_boundary_focal({{{1.0, 0.5, 1.0}}}),
                  std::invalid_argument);
}

TEST_CASE("basepoint arrangements of catalog actions") {
  SUBCASE("isotropy action: one whole-lattice family per root") {
    const HermannActionDescriptor& act = action("SO(3)", "AI", {{"n", 3}});
    ExactVector xi = principal_basepoint(act.space);
    std::vector<FocalHyperplane> arr = hermann_focal_arrangement(act, xi);
    REQUIRE(arr.size() == 3);
    // Positive roots in canonical order pair with xi = (7/18, -1/9, -5/18).
    std::vector<Rational> expected_offsets = {Rational(-1, 6), Rational(-1, 2),
                                              Rational(-2, 3)};
    for (size_t k = 0; k < arr.size(); ++k) {
      CHECK(arr[k].family == FocalHyperplane::Family::integer_pi);
      CHECK(arr[k].offset == expected_offsets[k]);
      CHECK(arr[k].base_offset ==
            doctest::Approx(expected_offsets[k].to_double()));
      REQUIRE(arr[k].levels.size() == 7);
      CHECK(arr[k].levels[3].imag() == doctest::Approx(0.0));
      CHECK(arr[k].levels[4].imag() == doctest::Approx(kPi).epsilon(1e-12));
      CHECK(arr[k].levels[0].real() ==
            doctest::Approx(expected_offsets[k].to_double()));
    }
  }
  SUBCASE("mixed split: vertical, horizontal, and double families") {
    const HermannActionDescriptor& act =
        action("SO_0(1,2)", "AIII", {{"p", 1}, {"q", 2}});
    ExactVector xi = rational_vec({Rational(3)});
    std::vector<FocalHyperplane> arr = hermann_focal_arrangement(act, xi, 0, 0);
    REQUIRE(arr.size() == 3);
    CHECK(arr[0].root_index == 0);
    CHECK(arr[0].family == FocalHyperplane::Family::integer_pi);
    CHECK(arr[0].offset == Rational(-3));
    CHECK(arr[1].root_index == 0);
    CHECK(arr[1].family == FocalHyperplane::Family::half_integer_pi);
    CHECK(arr[1].levels[0].imag() == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(arr[2].root_index == 1);
    CHECK(arr[2].family == FocalHyperplane::Family::integer_pi);
    CHECK(arr[2].offset == Rational(-6));
  }
  SUBCASE("empty index range keeps families, drops levels") {
    const HermannActionDescriptor& act = action("SO(3)", "AI", {{"n", 3}});
    std::vector<FocalHyperplane> arr =
        hermann_focal_arrangement(act, principal_basepoint(act.space), 1, 0);
    REQUIRE(arr.size() == 3);
    for (const FocalHyperplane& h : arr) CHECK(h.levels.empty());
  }
  SUBCASE("rejections") {
    const HermannActionDescriptor& agg = action("Sp(4,R)", "EII", {});
    ExactVector xi4 = principal_basepoint(agg.space);
    CHECK_THROWS_WITH_AS(hermann_focal_arrangement(agg, xi4),
                         "insufficient split data: action 'Sp(4,R)' on EII "
                         "carries aggregate counts only",
                         std::invalid_argument);

    const HermannActionDescriptor& act = action("SO(3)", "AI", {{"n", 3}});
    ExactVector degenerate = rational_vec({Rational(1), Rational(1), Rational(0)});
    CHECK_THROWS_WITH_AS(hermann_focal_arrangement(act, degenerate),
                         "non-principal basepoint: a vertical root vanishes "
                         "on xi",
                         std::invalid_argument);
    ExactVector wrong_dim = rational_vec({Rational(1), Rational(2)});
    CHECK_THROWS_AS(hermann_focal_arrangement(act, wrong_dim),
                    std::invalid_argument);
  }
}

TEST_CASE("real slices concur in the reflected basepoint") {
  for (const HermannActionDescriptor& act : actions()) {
    if (!act.per_root) continue;
    ExactVector xi = principal_basepoint(act.space);
    std::vector<FocalHyperplane> arr = hermann_focal_arrangement(act, xi, -1, 1);
    RealFocalSet rf = real_focal_set(arr);
    REQUIRE(!rf.hyperplanes.empty());
    REQUIRE(rf.common_point.has_value());
    ExactVector minus_xi = -xi;
    for (const auto& [root, offset] : rf.hyperplanes) {
      CHECK(inner(root, *rf.common_point) == offset);
      CHECK(inner(root, minus_xi) == offset);
    }
    // The returned point is the minimum-norm representative: it coincides
    // with the reflected basepoint exactly when the basepoint lies in the
    // span of the real-slice normals.
    ExactMatrix normals(xi.size(),
                        static_cast<Eigen::Index>(rf.hyperplanes.size()));
    for (size_t i = 0; i < rf.hyperplanes.size(); ++i)
      for (Eigen::Index r = 0; r < xi.size(); ++r)
        normals(r, static_cast<Eigen::Index>(i)) = rf.hyperplanes[i].first(r);
    bool xi_in_span = solve(normals, xi).has_value();
    CHECK(vec_eq(*rf.common_point, minus_xi) == xi_in_span);
  }
}

TEST_CASE("real slices of synthetic arrangements") {
  SUBCASE("independent hyperplanes meet in one exact point") {
    std::vector<FocalHyperplane> arr = {
        plane({Rational(1), Rational(0)}, Rational(1),
              FocalHyperplane::Family::integer_pi, 0, 0),
        plane({Rational(0), Rational(1)}, Rational(2),
              FocalHyperplane::Family::integer_pi, 0, 0),
        plane({Rational(1), Rational(1)}, Rational(3),
              FocalHyperplane::Family::integer_pi, 0, 0)};
    RealFocalSet rf = real_focal_set(arr);
    REQUIRE(rf.hyperplanes.size() == 3);
    REQUIRE(rf.common_point.has_value());
    CHECK(vec_eq(*rf.common_point, rational_vec({Rational(1), Rational(2)})));
  }
  SUBCASE("parallel distinct hyperplanes have no common point") {
    std::vector<FocalHyperplane> arr = {
        plane({Rational(1), Rational(0)}, Rational(0),
              FocalHyperplane::Family::integer_pi, 0, 0),
        plane({Rational(1), Rational(0)}, Rational(1),
              FocalHyperplane::Family::integer_pi, 0, 0)};
    RealFocalSet rf = real_focal_set(arr);
    CHECK(rf.hyperplanes.size() == 2);
    CHECK(!rf.common_point.has_value());
  }
  SUBCASE("arrangements with no whole-lattice family have no real slice") {
    std::vector<FocalHyperplane> arr = {
        plane({Rational(1)}, Rational(2),
              FocalHyperplane::Family::half_integer_pi, -1, 1)};
    RealFocalSet rf = real_focal_set(arr);
    CHECK(rf.hyperplanes.empty());
    CHECK(!rf.common_point.has_value());
  }
}

TEST_CASE("catalog arrangements are invariant under their affine reflections") {
  int covered = 0;
  for (const HermannActionDescriptor& act : actions()) {
    if (!act.per_root || act.space.rank > 3) continue;
    RootSystem rs = restricted_system(act.space);
    std::vector<Root> pos = positive_roots(rs);
    ExactVector xi = principal_basepoint(act.space);
    std::vector<FocalHyperplane> arr = hermann_focal_arrangement(act, xi, -1, 1);
    // Reflections in the arrangement's own hyperplanes along the simple
    // directions, anchored at two consecutive lattice levels so the ball
    // contains lattice translations as well.
    std::vector<AffineIsometry> gens;
    for (const ExactVector& alpha : simple_roots(pos)) {
      size_t idx = 0;
      while (!vec_eq(pos[idx].vector, alpha)) ++idx;
      Rational anchor = -inner(alpha, xi);
      if (!act.split[idx].in_V) anchor += Rational(1, 2);
      gens.push_back(affine_reflection(alpha, anchor));
      gens.push_back(affine_reflection(alpha, anchor + Rational(1)));
    }
    GeneratedGroup ball = generate_affine_ball(gens, 4);
    CHECK(arrangement_invariance(arr, ball, 1e-9));
    ++covered;
  }
  CHECK(covered >= 40);
}

TEST_CASE("invariance mechanics on synthetic arrangements") {
  SUBCASE("unit lattice in one dimension") {
    std::vector<FocalHyperplane> arr = {plane(
        {Rational(1)}, Rational(0), FocalHyperplane::Family::integer_pi, -2, 2)};
    std::vector<AffineIsometry> gens = {
        affine_reflection(rational_vec({Rational(1)}), Rational(0)),
        affine_reflection(rational_vec({Rational(1)}), Rational(1))};
    GeneratedGroup ball = generate_affine_ball(gens, 4);
    CHECK(arrangement_invariance(arr, ball, 1e-9));
  }
  SUBCASE("deleting one family breaks the symmetry") {
    auto family = [](std::vector<Rational> root) {
      return plane(std::move(root), Rational(0),
                   FocalHyperplane::Family::integer_pi, -1, 1);
    };
    std::vector<FocalHyperplane> full = {
        family({Rational(1), Rational(-1), Rational(0)}),
        family({Rational(0), Rational(1), Rational(-1)}),
        family({Rational(1), Rational(0), Rational(-1)})};
    std::vector<FocalHyperplane> broken = {full[0], full[1]};
    std::vector<AffineIsometry> gens = {affine_reflection(
        rational_vec({Rational(0), Rational(1), Rational(-1)}), Rational(0))};
    GeneratedGroup ball = generate_affine_ball(gens, 1);
    CHECK(arrangement_invariance(full, ball, 1e-9));
    CHECK(!arrangement_invariance(broken, ball, 1e-9));
    GeneratedGroup identity_only = generate_affine_ball(gens, 0);
    CHECK(arrangement_invariance(broken, identity_only, 1e-9));
  }
  SUBCASE("rejections") {
    std::vector<FocalHyperplane> arr = {plane(
        {Rational(1)}, Rational(0), FocalHyperplane::Family::integer_pi, 0, 0)};
    std::vector<AffineIsometry> gens = {
        affine_reflection(rational_vec({Rational(1)}), Rational(0))};
    GeneratedGroup ball = generate_affine_ball(gens, 1);
    CHECK_THROWS_AS(arrangement_invariance(arr, ball, 0.0),
                    std::invalid_argument);
    std::vector<AffineIsometry> gens2 = {affine_reflection(
        rational_vec({Rational(1), Rational(0)}), Rational(0))};
    GeneratedGroup ball2 = generate_affine_ball(gens2, 1);
    CHECK_THROWS_AS(arrangement_invariance(arr, ball2, 1e-9),
                    std::invalid_argument);
  }
}
