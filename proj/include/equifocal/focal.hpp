// Complex focal radii of isoparametric-style normal data, the lifted
// eigenvalue spectrum of the associated complexified shape operator, focal
// hyperplane arrangements in complexified section coordinates, their real
// slices, and Jacobi-field growth predicates.
#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "equifocal/hermann.hpp"
#include "equifocal/linalg.hpp"
#include "equifocal/reflgroup.hpp"

namespace equifocal {

using ComplexScalar = std::complex<double>;

// One family of parallel complex hyperplanes (b^c)^{-1}(level): all levels
// share the real part `base_offset`; the imaginary parts run over j*pi
// (integer_pi) or (j+1/2)*pi (half_integer_pi) and `levels` enumerates them
// over the requested j range (possibly empty).  `offset` is the exact value
// of the shared real part when one is available (it always is for catalog
// arrangements, where it equals -b(xi)).
struct FocalHyperplane {
  enum class Family { integer_pi, half_integer_pi };
  int root_index = -1;
  ExactVector root;
  Family family = Family::integer_pi;
  Rational offset;        // exact real part of every level
  double base_offset = 0; // offset as a double
  std::vector<ComplexScalar> levels;
};

// Eigenvalue data of one normal direction: for each joint eigenspace, the
// shape eigenvalue lambda, the curvature eigenvalue mu <= 0 of the Jacobi
// operator, and the squared norm of the component (weight > 0).
struct JacobiSpectralDatum {
  struct Entry {
    double lambda = 0;
    double mu = 0;
    double weight = 1;
  };
  std::vector<Entry> pairs;
};

// Complex radii z at which the normal geodesic with speed data (lambda,
// beta_v) hits a focal point: solutions of tanh(z*beta_v) = beta_v/lambda.
//   beta_v = 0, lambda != 0   -> { 1/lambda }           (Euclidean direction)
//   |lambda| > beta_v > 0     -> { (arctanh(beta_v/lambda) + j*pi*i)/beta_v }
//   |lambda| < beta_v         -> { (arctanh(lambda/beta_v) + (j+1/2)*pi*i)/beta_v }
//   |lambda| = beta_v != 0    -> {}   (the focal point escapes to infinity)
//   lambda = beta_v = 0       -> {}
// Throws std::invalid_argument when beta_v < 0.
std::vector<ComplexScalar> complex_focal_radii(double lambda, double beta_v,
                                               int j_min = -3, int j_max = 3);

// Eigenvalues of the complexified shape operator lifted over the normal
// geodesic: 0, the plain lambda of every mu = 0 pair, and for mu < 0 the two
// reciprocal-arctanh families over the j range.  Throws std::invalid_argument
// on a pair with |lambda| = sqrt(-mu) != 0 ("not proper complex equifocal
// datum") and on mu > 0.
std::vector<ComplexScalar> lifted_spectrum(const JacobiSpectralDatum& data,
                                           int j_min = -3, int j_max = 3);

// Squared norm of the Jacobi field with the given spectral components at
// parameter t: sum over mu < 0 of (cosh(t*s) - lambda*sinh(t*s)/s)^2 * w with
// s = sqrt(-mu), plus sum over mu = 0 of (1 - t*lambda)^2 * w.
double jacobi_norm_sq(const JacobiSpectralDatum& data, double t);

// Whether the normal geodesic has a focal point at the ideal boundary:
// has_non_euclidean_focal iff some pair has mu != 0 and lambda = +-sqrt(-mu);
// has_focal additionally on a mu = 0 pair with lambda = 0 (a direction of
// bounded linear growth).
struct IdealBoundaryFocal {
  bool has_focal = false;
  bool has_non_euclidean_focal = false;
};
IdealBoundaryFocal ideal_boundary_focal(const JacobiSpectralDatum& data);

// Focal hyperplane arrangement of a catalog action at basepoint coordinates
// xi: one integer_pi family per vertical root and one half_integer_pi family
// per horizontal root, each with exact real offset -b(xi).  Requires per-root
// split data and a principal xi.  An empty j range (j_min > j_max) lists the
// families with no enumerated levels.
std::vector<FocalHyperplane> hermann_focal_arrangement(
    const HermannActionDescriptor& action, const ExactVector& xi,
    int j_min = -3, int j_max = 3);

// Real slice of an arrangement: the integer_pi families meet the real section
// in b(x) = offset.  common_point is the minimum-norm exact solution of all of
// these equations when they are consistent (for a basepoint arrangement whose
// real normals span the basepoint it recovers the basepoint, -xi exactly);
// nullopt when they are inconsistent or there are no real hyperplanes.
struct RealFocalSet {
  std::vector<std::pair<ExactVector, Rational>> hyperplanes;
  std::optional<ExactVector> common_point;
};
RealFocalSet real_focal_set(const std::vector<FocalHyperplane>& arrangement);

// Whether every element of the group ball maps every enumerated hyperplane of
// the arrangement onto a hyperplane of the periodically extended arrangement.
// Bookkeeping is in pi units: a family contributes real levels offset/pi + j
// (+ 1/2 for half_integer_pi), extended over all integers j, and the ball is
// read as acting on these pi-unit coordinates.  Directions are compared after
// primitive-integer canonicalization, levels within tol.
bool arrangement_invariance(const std::vector<FocalHyperplane>& arrangement,
                            const GeneratedGroup& ball, double tol);

}  // namespace equifocal
