// Descriptors for isometric actions on symmetric spaces whose principal-orbit
// shape operators have closed-form spectra in section coordinates, plus the
// operations on them: the symbolic spectrum, the maximal number of distinct
// eigenvalues, numeric distinct counts, a properness test for the associated
// complexified data, and the reflection generators of the real Coxeter group.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "equifocal/reflgroup.hpp"
#include "equifocal/rootsys.hpp"
#include "equifocal/symcat.hpp"

namespace equifocal {

// Vertical/horizontal membership of one positive restricted root.  A root is
// vertical when the orbit direction it spans meets the isotropy distribution,
// horizontal when it meets the normal-bundle-parallel distribution; roots may
// be both.
struct RootSplitFlag {
  bool in_V = false;
  bool in_H = false;
};

// One action instance: acting-group display label, the symmetric space acted
// on, and the split of its positive restricted roots.  `per_root` entries are
// aligned with positive_roots(restricted_system(space)); actions for which
// only aggregate counts are known leave `split` empty and carry the counts.
struct HermannActionDescriptor {
  std::string h_label;
  SymmetricSpaceDescriptor space;
  int table = 0;
  bool per_root = false;
  std::vector<RootSplitFlag> split;  // size n_pos when per_root
  long long count_V = 0;
  long long count_H = 0;
  long long count_both = 0;
  long long expected_max_spec = 0;
};

// One symbolic principal-curvature value of a principal orbit.  Vertical
// values are -b(eta)/tanh(b(xi)) and horizontal values -b(eta)*tanh(b(xi))
// for the root b at root_index; the zero kind (no root) is reserved for
// actions with a nontrivial flat factor and does not occur for catalog rows.
struct SpectrumValue {
  enum class Kind { zero, vertical, horizontal };
  Kind kind = Kind::zero;
  int root_index = -1;
};

// Symbolic spectrum of the shape operator at section coordinates (xi, eta):
// one vertical value per root with in_V, one horizontal per root with in_H.
// Throws std::invalid_argument on aggregate-only descriptors ("insufficient
// split data") and when b(xi) = 0 for some vertical root ("non-principal
// basepoint").
std::vector<SpectrumValue> orbit_spectrum(const HermannActionDescriptor& action,
                                          const ExactVector& xi,
                                          const ExactVector& eta);

// Numeric value of one symbolic entry at floating-point (xi, eta).
double evaluate_spectrum_value(const SpectrumValue& value,
                               const std::vector<Root>& positives,
                               const Eigen::VectorXd& xi,
                               const Eigen::VectorXd& eta);

// #positive roots + #(roots in both V and H) — the count the closed-form
// spectrum attains for generic (xi, eta).
long long max_distinct_spec(const HermannActionDescriptor& action);

// Evaluates the full spectrum at (xi, eta) and counts values separated by
// more than tol (clusters under the tolerance count once).  Requires per-root
// data; throws on a numerically non-principal xi.
int numeric_distinct_count(const HermannActionDescriptor& action,
                           const Eigen::VectorXd& xi,
                           const Eigen::VectorXd& eta, double tol);

// Checks that no shape eigenvalue lambda on the root space of b coincides
// with +-|b(eta)| (eta normalized to unit length), the degeneracy that makes
// the complexified normal exponential data improper.  Closed-form spectra
// satisfy this for every principal (xi, eta).  Requires per-root data.
bool properness_check(const HermannActionDescriptor& action,
                      const ExactVector& xi, const ExactVector& eta);

// Same test on raw (lambda, mu) pairs with mu <= 0: false iff some pair has
// lambda = +-sqrt(-mu) != 0.
bool properness_check(const std::vector<std::pair<double, double>>& pairs);

// Reflections in the kernels of the vertical roots; generate the real Coxeter
// group of a principal orbit via generate_finite.  Requires per-root data.
std::vector<AffineIsometry> real_coxeter_generators(
    const HermannActionDescriptor& action);

// Catalog loading.  Each JSON entry references a space in `spaces` by label
// and exact params; per-root splits are validated against the canonical
// positive-root order (index and coordinates), aggregate counts against
// union/intersection consistency.  Throws std::invalid_argument on schema or
// consistency violations, std::runtime_error when the file cannot be read.
std::vector<HermannActionDescriptor> hermann_catalog_from_json(
    const nlohmann::json& j,
    const std::vector<SymmetricSpaceDescriptor>& spaces);
std::vector<HermannActionDescriptor> hermann_catalog_load(
    const std::string& path,
    const std::vector<SymmetricSpaceDescriptor>& spaces);

// First catalog entry with the given acting-group label on the given space
// (label + exact params), or nullptr.
const HermannActionDescriptor* find_action(
    const std::vector<HermannActionDescriptor>& catalog,
    const std::string& h_label, const std::string& space_label,
    const std::map<std::string, long long>& params);

}  // namespace equifocal
