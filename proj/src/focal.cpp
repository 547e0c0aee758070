#include "equifocal/focal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "equifocal/symcat.hpp"

namespace equifocal {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void validate_pair(const JacobiSpectralDatum::Entry& e) {
  if (e.mu > 0)
    throw std::invalid_argument(
        "spectral datum: positive curvature eigenvalue (non-compact type "
        "requires mu <= 0)");
  if (e.weight <= 0)
    throw std::invalid_argument("spectral datum: weight must be positive");
}

// True when lambda sits on the |lambda| = s boundary between the two
// arctanh branches (s >= 0).
bool on_branch_boundary(double lambda, double s) {
  return std::abs(std::abs(lambda) - s) <= 1e-9 * std::max(1.0, s);
}

}  // namespace

std::vector<ComplexScalar> complex_focal_radii(double lambda, double beta_v,
                                               int j_min, int j_max) {
  if (beta_v < 0)
    throw std::invalid_argument(
        "complex focal radii: curvature speed must be nonnegative");
  std::vector<ComplexScalar> out;
  if (beta_v == 0) {
    if (lambda != 0) out.push_back(ComplexScalar(1.0 / lambda, 0.0));
    return out;
  }
  if (on_branch_boundary(lambda, beta_v)) return out;
  if (std::abs(lambda) > beta_v) {
    double re = std::atanh(beta_v / lambda);
    for (int j = j_min; j <= j_max; ++j)
      out.push_back(ComplexScalar(re / beta_v, j * kPi / beta_v));
  } else {
    double re = std::atanh(lambda / beta_v);
    for (int j = j_min; j <= j_max; ++j)
      out.push_back(ComplexScalar(re / beta_v, (j + 0.5) * kPi / beta_v));
  }
  return out;
}

std::vector<ComplexScalar> lifted_spectrum(const JacobiSpectralDatum& data,
                                           int j_min, int j_max) {
  std::vector<ComplexScalar> out;
  out.push_back(ComplexScalar(0.0, 0.0));
  for (const auto& e : data.pairs) {
    validate_pair(e);
    if (e.mu == 0) {
      out.push_back(ComplexScalar(e.lambda, 0.0));
      continue;
    }
    double s = std::sqrt(-e.mu);
    if (on_branch_boundary(e.lambda, s))
      throw std::invalid_argument("not proper complex equifocal datum");
    if (std::abs(e.lambda) > s) {
      double re = std::atanh(s / e.lambda);
      for (int j = j_min; j <= j_max; ++j)
        out.push_back(s / ComplexScalar(re, j * kPi));
    } else {
      double re = std::atanh(e.lambda / s);
      for (int j = j_min; j <= j_max; ++j)
        out.push_back(s / ComplexScalar(re, (j + 0.5) * kPi));
    }
  }
  return out;
}

double jacobi_norm_sq(const JacobiSpectralDatum& data, double t) {
  double total = 0.0;
  for (const auto& e : data.pairs) {
    validate_pair(e);
    double v;
    if (e.mu == 0) {
      v = 1.0 - t * e.lambda;
    } else {
      // cosh(ts) - lambda sinh(ts)/s in exponential form, so that the
      // lambda = s cancellation is exact instead of drowning in the
      // growing branch.
      double s = std::sqrt(-e.mu);
      double c = e.lambda / s;
      v = 0.5 * ((1.0 - c) * std::exp(t * s) + (1.0 + c) * std::exp(-t * s));
    }
    total += v * v * e.weight;
  }
  return total;
}

IdealBoundaryFocal ideal_boundary_focal(const JacobiSpectralDatum& data) {
  IdealBoundaryFocal out;
  for (const auto& e : data.pairs) {
    validate_pair(e);
    if (e.mu == 0) {
      if (std::abs(e.lambda) <= 1e-9) out.has_focal = true;
    } else if (on_branch_boundary(e.lambda, std::sqrt(-e.mu))) {
      out.has_focal = true;
      out.has_non_euclidean_focal = true;
    }
  }
  return out;
}

std::vector<FocalHyperplane> hermann_focal_arrangement(
    const HermannActionDescriptor& action, const ExactVector& xi, int j_min,
    int j_max) {
  if (!action.per_root)
    throw std::invalid_argument("insufficient split data: action '" +
                                action.h_label + "' on " + action.space.label +
                                " carries aggregate counts only");
  RootSystem restricted = restricted_system(action.space);
  if (xi.size() != restricted.ambient_dim)
    throw std::invalid_argument(
        "section coordinate dimension does not match the restricted system");
  std::vector<Root> pos = positive_roots(restricted);
  for (size_t k = 0; k < pos.size(); ++k)
    if (action.split[k].in_V && inner(pos[k].vector, xi).is_zero())
      throw std::invalid_argument("non-principal basepoint: a vertical root "
                                  "vanishes on xi");
  std::vector<FocalHyperplane> out;
  for (size_t k = 0; k < pos.size(); ++k) {
    Rational off = -inner(pos[k].vector, xi);
    auto make_family = [&](FocalHyperplane::Family fam, double half) {
      FocalHyperplane h;
      h.root_index = static_cast<int>(k);
      h.root = pos[k].vector;
      h.family = fam;
      h.offset = off;
      h.base_offset = off.to_double();
      for (int j = j_min; j <= j_max; ++j)
        h.levels.push_back(ComplexScalar(h.base_offset, (j + half) * kPi));
      out.push_back(std::move(h));
    };
    if (action.split[k].in_V)
      make_family(FocalHyperplane::Family::integer_pi, 0.0);
    if (action.split[k].in_H)
      make_family(FocalHyperplane::Family::half_integer_pi, 0.5);
  }
  return out;
}

RealFocalSet real_focal_set(const std::vector<FocalHyperplane>& arrangement) {
  RealFocalSet out;
  Eigen::Index dim = -1;
  for (const auto& h : arrangement) {
    if (h.family != FocalHyperplane::Family::integer_pi) continue;
    if (h.root.size() == 0)
      throw std::invalid_argument("real focal set: empty hyperplane normal");
    if (dim < 0)
      dim = h.root.size();
    else if (h.root.size() != dim)
      throw std::invalid_argument(
          "real focal set: hyperplane dimensions disagree");
    out.hyperplanes.emplace_back(h.root, h.offset);
  }
  if (out.hyperplanes.empty()) return out;
  const Eigen::Index k = static_cast<Eigen::Index>(out.hyperplanes.size());
  ExactMatrix a(k, dim);
  ExactVector b(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index c = 0; c < dim; ++c) a(i, c) = out.hyperplanes[i].first(c);
    b(i) = out.hyperplanes[i].second;
  }
  // Normal equations (A A^T) y = b with x = A^T y: solvable exactly when the
  // system is consistent, and the solution is the minimum-norm common point.
  // That representative lies in the span of the hyperplane normals, so a
  // basepoint arrangement whose normals span the section recovers the
  // basepoint itself.
  ExactMatrix gram = a * a.transpose();
  std::optional<ExactVector> y = solve(gram, b);
  if (y) out.common_point = a.transpose() * (*y);
  return out;
}

namespace {

// v = c * u with u a primitive integer vector whose first nonzero entry is
// positive; returns (u, c).  Throws on a zero vector.
std::pair<ExactVector, Rational> primitive_direction(const ExactVector& v) {
  long long lcm_den = 1;
  bool nonzero = false;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) nonzero = true;
    lcm_den = std::lcm(lcm_den, v(i).den());
  }
  if (!nonzero)
    throw std::invalid_argument("arrangement invariance: zero hyperplane normal");
  long long g = 0;
  std::vector<long long> scaled(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rational w = v(i) * Rational(lcm_den);
    scaled[i] = w.num();  // integer after clearing denominators
    g = std::gcd(g, std::abs(scaled[i]));
  }
  ExactVector u(v.size());
  int sign = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    long long c = scaled[i] / g;
    if (sign == 0 && c != 0) sign = c > 0 ? 1 : -1;
    u(i) = Rational(c);
  }
  Rational scale(g, lcm_den);
  if (sign < 0) {
    u = -u;
    scale = -scale;
  }
  return {u, scale};
}

bool vec_eq(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

struct CanonicalFamily {
  ExactVector dir;  // primitive integer, first nonzero entry positive
  double base = 0;  // one lattice level, in dir-coordinates
  double period = 0;
};

}  // namespace

bool arrangement_invariance(const std::vector<FocalHyperplane>& arrangement,
                            const GeneratedGroup& ball, double tol) {
  if (!(tol > 0))
    throw std::invalid_argument(
        "arrangement invariance: tolerance must be positive");
  if (arrangement.empty()) return true;
  const Eigen::Index dim = arrangement.front().root.size();
  // Levels are tracked in pi units: an imaginary step of pi in the enumerated
  // levels is one lattice step, and group translations shift the same
  // coordinate.  Each family becomes a full (untruncated) lattice of levels.
  std::vector<CanonicalFamily> families;
  std::vector<std::vector<std::pair<ExactVector, double>>> truncated;
  for (const auto& h : arrangement) {
    if (h.root.size() != dim)
      throw std::invalid_argument(
          "arrangement invariance: hyperplane dimensions disagree");
    auto [dir, scale] = primitive_direction(h.root);
    double c = scale.to_double();
    double shift =
        h.family == FocalHyperplane::Family::half_integer_pi ? 0.5 : 0.0;
    CanonicalFamily fam;
    fam.dir = dir;
    fam.base = (h.base_offset + shift) / c;
    fam.period = 1.0 / std::abs(c);
    families.push_back(fam);
    // The hyperplanes actually enumerated, read off the imaginary parts.
    std::vector<std::pair<ExactVector, double>> slices;
    if (h.levels.empty()) {
      slices.emplace_back(h.root, h.base_offset + shift);
    } else {
      for (const ComplexScalar& level : h.levels) {
        double j = std::round(level.imag() / kPi - shift);
        slices.emplace_back(h.root, h.base_offset + shift + j);
      }
    }
    truncated.push_back(std::move(slices));
  }
  for (const AffineIsometry& g : ball.elements) {
    if (g.linear.rows() != dim || g.translation.size() != dim)
      throw std::invalid_argument(
          "arrangement invariance: group dimension does not match arrangement");
    for (const auto& slices : truncated) {
      for (const auto& [root, level] : slices) {
        ExactVector image_root = g.linear * root;
        double image_level = level + inner(image_root, g.translation).to_double();
        auto [dir, scale] = primitive_direction(image_root);
        double canon_level = image_level / scale.to_double();
        bool matched = false;
        for (const CanonicalFamily& fam : families) {
          if (!vec_eq(fam.dir, dir)) continue;
          double steps = std::round((canon_level - fam.base) / fam.period);
          if (std::abs(canon_level - fam.base - steps * fam.period) <= tol) {
            matched = true;
            break;
          }
        }
        if (!matched) return false;
      }
    }
  }
  return true;
}

}  // namespace equifocal
