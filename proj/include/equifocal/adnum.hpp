// Floating-point matrix models of small non-compact symmetric pairs:
// explicit orthonormal tangent bases, Jacobi operators X -> -[v,[v,X]],
// the even/odd transport operators via functional calculus, numeric focal
// detection along normal geodesics, and commuting-family checks.  Serves as
// an independent numeric cross-check for the exact root-system closed forms.
#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "equifocal/rootsys.hpp"

namespace equifocal {

// A realized pair: traceless symmetric matrices for sl(n,R)/so(n), or the
// off-diagonal block model for so(p,q)/(so(p) x so(q)).  basis_p is
// orthonormal for the model's trace form and its first `rank` entries span
// the flat (maximal abelian) subspace.
struct MatrixModel {
  enum class Family { sl_n_R, so_p_q };
  Family family = Family::sl_n_R;
  int n = 0;         // sl: matrix size
  int p = 0, q = 0;  // so: signature, p <= q
  int rank = 0;      // dimension of the flat
  std::vector<Eigen::MatrixXd> basis_p;
};

// Supported desk-scale sizes: 2 <= n <= 5.  Throws std::invalid_argument
// ("model too large") outside that range.
MatrixModel make_sl_model(int n);

// Supported desk-scale signatures: 1 <= p <= q and 3 <= p + q <= 6.
// Throws std::invalid_argument ("model too large" / "unsupported model").
MatrixModel make_so_model(int p, int q);

// The restricted root system matching the model's flat coordinates, with
// multiplicities (all 1 for sl(n,R); q - p on the short roots of so(p,q)).
RootSystem model_restricted_system(const MatrixModel& model);

// Flat-coordinate embedding: diag(v) recentered to trace zero for sl (v has
// n entries), or the sum of the p standard flat generators for so (v has p
// entries).  Throws std::invalid_argument on a size mismatch.
Eigen::MatrixXd flat_element(const MatrixModel& model, const Eigen::VectorXd& v);

// Matrix of X -> -[v,[v,X]] on the tangent model in basis_p coordinates;
// symmetric with spectrum {-b(v)^2 : b restricted root} plus `rank` zeros.
Eigen::MatrixXd jacobi_operator(const MatrixModel& model,
                                const Eigen::VectorXd& v);

// Even/odd transport operators at parameter s: on each eigenblock of the
// Jacobi operator with eigenvalue -b^2 the first factor is cosh(s b) and the
// second sinh(s b)/(s b), with both equal to 1 on the kernel.  s = 0 gives a
// pair of identities.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> d_operators(
    const MatrixModel& model, const Eigen::VectorXd& v, double s);

// Smallest singular value of the focal operator co(t) - t * si(t) * shape_op
// at each grid point.  shape_op must be symmetric and commute with the
// Jacobi operator of v to 1e-9; otherwise throws std::invalid_argument
// ("not curvature-adapted").
std::vector<double> numeric_focal_sweep(const MatrixModel& model,
                                        const Eigen::VectorXd& v,
                                        const Eigen::MatrixXd& shape_op,
                                        const std::vector<double>& t_grid);

// Zeros of the focal determinant factors on (0, t_max], one bisection per
// joint eigenblock of (jacobi_operator(v), shape_op); sorted ascending,
// deduplicated to 1e-9.  Same curvature-adaptedness requirement as the
// sweep.
std::vector<double> numeric_focal_radii(const MatrixModel& model,
                                        const Eigen::VectorXd& v,
                                        const Eigen::MatrixXd& shape_op,
                                        double t_max);

// True iff the flat elements of b_basis pairwise commute, and all pairwise
// commutators among their Jacobi operators together with shape_ops have
// Frobenius norm below tol.
bool commuting_family_check(const MatrixModel& model,
                            const std::vector<Eigen::VectorXd>& b_basis,
                            const std::vector<Eigen::MatrixXd>& shape_ops,
                            double tol);

}  // namespace equifocal
