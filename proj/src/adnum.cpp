#include "equifocal/adnum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace equifocal {

namespace {

// Trace form making basis_p orthonormal: tr(XY) for the symmetric sl model,
// tr(XY)/2 for the doubled off-diagonal so blocks.
double model_inner(const MatrixModel& model, const Eigen::MatrixXd& x,
                   const Eigen::MatrixXd& y) {
  double t = (x * y).trace();
  return model.family == MatrixModel::Family::so_p_q ? 0.5 * t : t;
}

Eigen::MatrixXd bracket(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a * b - b * a;
}

struct JointBlock {
  double beta = 0;    // root value, sqrt of minus the Jacobi eigenvalue
  double lambda = 0;  // shape eigenvalue on the block
};

// Simultaneous eigenstructure of the Jacobi operator and a commuting
// symmetric shape operator: cluster the Jacobi spectrum, then diagonalize the
// shape operator inside each cluster.  Throws when the two do not commute.
std::vector<JointBlock> joint_blocks(const MatrixModel& model,
                                     const Eigen::VectorXd& v,
                                     const Eigen::MatrixXd& shape_op) {
  Eigen::MatrixXd m = jacobi_operator(model, v);
  if (shape_op.rows() != m.rows() || shape_op.cols() != m.cols())
    throw std::invalid_argument(
        "shape operator size does not match the tangent model");
  double scale = std::max(1.0, m.norm() * shape_op.norm());
  if ((shape_op - shape_op.transpose()).norm() > 1e-9 * scale ||
      bracket(m, shape_op).norm() > 1e-9 * scale)
    throw std::invalid_argument("not curvature-adapted");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXd& vals = es.eigenvalues();
  const Eigen::MatrixXd& basis = es.eigenvectors();
  std::vector<JointBlock> out;
  Eigen::Index start = 0;
  while (start < vals.size()) {
    Eigen::Index stop = start + 1;
    while (stop < vals.size() && vals(stop) - vals(start) < 1e-8) ++stop;
    Eigen::MatrixXd cluster = basis.middleCols(start, stop - start);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sub(
        cluster.transpose() * shape_op * cluster);
    double beta = std::sqrt(std::max(0.0, -vals(start)));
    for (Eigen::Index i = 0; i < sub.eigenvalues().size(); ++i)
      out.push_back({beta, sub.eigenvalues()(i)});
    start = stop;
  }
  return out;
}

// cosh(t b) - lambda sinh(t b)/b for b > 0, (1 - t lambda) on the kernel; in
// exponential form so the boundary cancellation is exact.
double focal_factor(const JointBlock& block, double t) {
  if (block.beta == 0) return 1.0 - t * block.lambda;
  double c = block.lambda / block.beta;
  double x = t * block.beta;
  return 0.5 * ((1.0 - c) * std::exp(x) + (1.0 + c) * std::exp(-x));
}

}  // namespace

MatrixModel make_sl_model(int n) {
  if (n < 2 || n > 5)
    throw std::invalid_argument(
        "model too large: sl(n,R) is supported for 2 <= n <= 5");
  MatrixModel model;
  model.family = MatrixModel::Family::sl_n_R;
  model.n = n;
  model.rank = n - 1;
  // Orthonormal traceless diagonals first (the flat), then the symmetric
  // pair matrices.
  for (int k = 1; k < n; ++k) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    double s = 1.0 / std::sqrt(double(k) * (k + 1));
    for (int i = 0; i < k; ++i) d(i, i) = s;
    d(k, k) = -double(k) * s;
    model.basis_p.push_back(d);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(n, n);
      sym(i, j) = sym(j, i) = 1.0 / std::sqrt(2.0);
      model.basis_p.push_back(sym);
    }
  return model;
}

MatrixModel make_so_model(int p, int q) {
  if (p < 1 || p > q)
    throw std::invalid_argument("unsupported model: so(p,q) needs 1 <= p <= q");
  if (p + q < 3 || p + q > 6)
    throw std::invalid_argument(
        "model too large: so(p,q) is supported for 3 <= p + q <= 6");
  MatrixModel model;
  model.family = MatrixModel::Family::so_p_q;
  model.p = p;
  model.q = q;
  model.n = p + q;
  model.rank = p;
  int n = p + q;
  auto block = [&](int k, int l) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    m(k, p + l) = m(p + l, k) = 1.0;
    return m;
  };
  for (int k = 0; k < p; ++k) model.basis_p.push_back(block(k, k));
  for (int k = 0; k < p; ++k)
    for (int l = 0; l < q; ++l)
      if (l != k) model.basis_p.push_back(block(k, l));
  return model;
}

RootSystem model_restricted_system(const MatrixModel& model) {
  if (model.family == MatrixModel::Family::sl_n_R)
    return build_root_system("A", model.n - 1);
  RootSystem rs = model.p < model.q ? build_root_system("B", model.p)
                                    : build_root_system("D", model.p);
  int short_mult = model.q - model.p;
  for (Root& r : rs.roots)
    if (inner(r.vector, r.vector) == Rational(1)) r.multiplicity = short_mult;
  return rs;
}

Eigen::MatrixXd flat_element(const MatrixModel& model,
                             const Eigen::VectorXd& v) {
  if (model.family == MatrixModel::Family::sl_n_R) {
    if (v.size() != model.n)
      throw std::invalid_argument(
          "flat coordinates must have one entry per diagonal slot");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(model.n, model.n);
    double mean = v.mean();
    for (int i = 0; i < model.n; ++i) m(i, i) = v(i) - mean;
    return m;
  }
  if (v.size() != model.p)
    throw std::invalid_argument(
        "flat coordinates must have one entry per flat generator");
  int n = model.p + model.q;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < model.p; ++k)
    m(k, model.p + k) = m(model.p + k, k) = v(k);
  return m;
}

Eigen::MatrixXd jacobi_operator(const MatrixModel& model,
                                const Eigen::VectorXd& v) {
  Eigen::MatrixXd vm = flat_element(model, v);
  const auto& basis = model.basis_p;
  Eigen::Index d = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd out(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    Eigen::MatrixXd image = -bracket(vm, bracket(vm, basis[j]));
    for (Eigen::Index i = 0; i < d; ++i)
      out(i, j) = model_inner(model, basis[i], image);
  }
  return 0.5 * (out + out.transpose());
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> d_operators(
    const MatrixModel& model, const Eigen::VectorXd& v, double s) {
  Eigen::MatrixXd m = jacobi_operator(model, v);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  Eigen::VectorXd co(es.eigenvalues().size());
  Eigen::VectorXd si(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    double beta = std::sqrt(std::max(0.0, -es.eigenvalues()(k)));
    double x = s * beta;
    co(k) = std::cosh(x);
    si(k) = std::abs(x) < 1e-8 ? 1.0 + x * x / 6.0 : std::sinh(x) / x;
  }
  const Eigen::MatrixXd& u = es.eigenvectors();
  return {u * co.asDiagonal() * u.transpose(),
          u * si.asDiagonal() * u.transpose()};
}

std::vector<double> numeric_focal_sweep(const MatrixModel& model,
                                        const Eigen::VectorXd& v,
                                        const Eigen::MatrixXd& shape_op,
                                        const std::vector<double>& t_grid) {
  std::vector<JointBlock> blocks = joint_blocks(model, v, shape_op);
  std::vector<double> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    std::pair<Eigen::MatrixXd, Eigen::MatrixXd> d = d_operators(model, v, t);
    Eigen::MatrixXd focal = d.first - t * d.second * shape_op;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(focal);
    out.push_back(svd.singularValues().minCoeff());
  }
  return out;
}

std::vector<double> numeric_focal_radii(const MatrixModel& model,
                                        const Eigen::VectorXd& v,
                                        const Eigen::MatrixXd& shape_op,
                                        double t_max) {
  if (!(t_max > 0))
    throw std::invalid_argument("focal search bound must be positive");
  std::vector<double> radii;
  for (const JointBlock& block : joint_blocks(model, v, shape_op)) {
    // The factor starts at 1; a real zero on (0, t_max] needs the shape
    // eigenvalue to dominate the root value.  Bracket by scanning for the
    // first sign change, then bisect.
    double prev_t = 0.0;
    double prev_f = 1.0;
    double lo = -1.0, hi = -1.0;
    const int steps = 256;
    for (int i = 1; i <= steps; ++i) {
      double t = t_max * double(i) / steps;
      double f = focal_factor(block, t);
      if (prev_f > 0 && f <= 0) {
        lo = prev_t;
        hi = t;
        break;
      }
      prev_t = t;
      prev_f = f;
    }
    if (hi < 0) continue;
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
      double mid = 0.5 * (lo + hi);
      if (focal_factor(block, mid) > 0)
        lo = mid;
      else
        hi = mid;
    }
    radii.push_back(0.5 * (lo + hi));
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end(),
                          [](double a, double b) { return b - a <= 1e-9; }),
              radii.end());
  return radii;
}

bool commuting_family_check(const MatrixModel& model,
                            const std::vector<Eigen::VectorXd>& b_basis,
                            const std::vector<Eigen::MatrixXd>& shape_ops,
                            double tol) {
  if (!(tol > 0))
    throw std::invalid_argument("commuting check tolerance must be positive");
  for (size_t i = 0; i < b_basis.size(); ++i)
    for (size_t j = i + 1; j < b_basis.size(); ++j)
      if (bracket(flat_element(model, b_basis[i]),
                  flat_element(model, b_basis[j]))
              .norm() >= tol)
        return false;
  std::vector<Eigen::MatrixXd> family;
  for (const Eigen::VectorXd& v : b_basis)
    family.push_back(jacobi_operator(model, v));
  family.insert(family.end(), shape_ops.begin(), shape_ops.end());
  for (const Eigen::MatrixXd& op : family)
    if (op.rows() != static_cast<Eigen::Index>(model.basis_p.size()) ||
        op.cols() != op.rows())
      throw std::invalid_argument(
          "shape operator size does not match the tangent model");
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (bracket(family[i], family[j]).norm() >= tol) return false;
  return true;
}

}  // namespace equifocal
