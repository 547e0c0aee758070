/* This is rootsys.hpp: exact root systems with multiplicities.
   Vectors have rational coordinates; systems built here are closed under
   negation with matching multiplicities. A system restricted to a subspace
   carries a diagonal metric (square lengths of the orthogonalized basis), so
   all geometric checks stay exact. */
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "equifocal/linalg.hpp"

namespace equifocal {

struct Root {
  ExactVector vector;
  int multiplicity = 1;
};

struct RootSystem {
  Eigen::Index ambient_dim = 0;
  std::vector<Root> roots;
  std::string label;
  ExactVector metric;  // diagonal weights; empty means the unit metric

  Rational inner_product(const ExactVector& x, const ExactVector& y) const {
    return inner(x, y, metric);
  }
};

struct RootConditionReport {
  bool reflection_closed = false;   // s_alpha(beta) stays in the system
  bool pairings_integral = false;   // 2<a,b>/<a,a> is always an integer
  bool no_scaled_pairs = false;     // proportional roots only come as +/- pairs
};

// x reflected in the hyperplane orthogonal to alpha (under the metric).
ExactVector reflect_vector(const ExactVector& x, const ExactVector& alpha,
                           const ExactVector& metric = ExactVector());

// Supported types: A, B, C, D, BC (any admissible rank), E6, E7, E8, F4, G2
// (fixed rank). G2 uses the 3-coordinate integer model; E-types live in
// 8 coordinates. Every root has multiplicity 1.
RootSystem build_root_system(const std::string& type, int rank);

// Reflection closure only; multiplicities ignored; empty systems pass.
bool check_weakly_root_system(const RootSystem& rs);

RootConditionReport check_root_system_conditions(const RootSystem& rs);

// Lexicographically positive roots, sorted ascending. This is the canonical
// positive order used by every catalog index in the project.
std::vector<Root> positive_roots(const RootSystem& rs);

int sum_of_multiplicities(const RootSystem& rs);

// Orthogonal projection onto span(basis columns), re-expressed in the
// Gram-Schmidt orthogonalization of that basis. Roots projecting to zero are
// dropped; coinciding projections merge with summed multiplicities. Throws on
// a dependent basis.
RootSystem restrict(const RootSystem& rs, const ExactMatrix& subspace_basis);

// Connected components of the non-orthogonality graph, ordered by their
// smallest positive root. Components keep the ambient coordinates.
std::vector<RootSystem> decompose(const RootSystem& rs);

bool is_decomposable(const RootSystem& rs);

nlohmann::json to_json(const RootSystem& rs);
RootSystem root_system_from_json(const nlohmann::json& j);

}  // namespace equifocal
