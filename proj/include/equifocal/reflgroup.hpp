/* This is reflgroup.hpp: affine isometries with exact rational entries and
   the groups they generate. Finite groups come from breadth-first closure
   with exact deduplication; infinite (affine) groups are represented by
   word-length balls, never enumerated in full. No floating point here. */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "equifocal/rootsys.hpp"

namespace equifocal {

// x |-> linear * x + translation, with an orthogonal linear part.
struct AffineIsometry {
  ExactMatrix linear;
  ExactVector translation;
};

AffineIsometry identity_isometry(Eigen::Index dim);

// f after g: (f . g)(x) = f(g(x)).
AffineIsometry compose(const AffineIsometry& f, const AffineIsometry& g);

// Uses orthogonality of the linear part: inverse(A, t) = (A^T, -A^T t).
AffineIsometry inverse(const AffineIsometry& f);

ExactVector apply(const AffineIsometry& f, const ExactVector& x);

bool isometry_eq(const AffineIsometry& a, const AffineIsometry& b);
bool is_orthogonal(const ExactMatrix& m);
bool is_pure_translation(const AffineIsometry& f);

struct AffineIsometryHash {
  size_t operator()(const AffineIsometry& f) const noexcept {
    size_t h = std::hash<long long>()(f.linear.rows());
    std::hash<Rational> hr;
    for (Eigen::Index j = 0; j < f.linear.cols(); ++j)
      for (Eigen::Index i = 0; i < f.linear.rows(); ++i)
        h ^= hr(f.linear(i, j)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    for (Eigen::Index i = 0; i < f.translation.size(); ++i)
      h ^= hr(f.translation(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct AffineIsometryEq {
  bool operator()(const AffineIsometry& a, const AffineIsometry& b) const noexcept {
    return isometry_eq(a, b);
  }
};

struct GeneratedGroup {
  std::vector<AffineIsometry> generators;
  std::vector<AffineIsometry> elements;  // deduplicated; identity first
  bool is_complete = false;
};

bool group_contains(const GeneratedGroup& g, const AffineIsometry& f);

// Reflection in the hyperplane through the origin orthogonal to `root`
// (standard inner product). Throws std::invalid_argument on a zero root.
AffineIsometry reflection(const ExactVector& root);

// Reflection in the affine hyperplane {x : <x, root> = level}, i.e.
// x |-> x - (<x, root> - level) * 2 root / <root, root>.
// Level 0 recovers reflection(). Throws std::invalid_argument on a zero root.
AffineIsometry affine_reflection(const ExactVector& root, const Rational& level);

// Breadth-first closure under composition. Generators must be linear (zero
// translation) and orthogonal; otherwise std::invalid_argument. Stops with
// is_complete = false as soon as the closure grows past max_order.
GeneratedGroup generate_finite(const std::vector<AffineIsometry>& generators,
                               std::size_t max_order);

// All products of at most word_length factors drawn from the generators and
// their inverses, deduplicated exactly. is_complete stays false: the groups
// represented this way are infinite.
GeneratedGroup generate_affine_ball(const std::vector<AffineIsometry>& generators,
                                    int word_length);

// True iff every pure-translation element of the ball translates by an
// integer combination of {2a/<a,a> : a root of rs} (standard inner product,
// matching affine_reflection).
bool translation_lattice_check(const GeneratedGroup& group_ball, const RootSystem& rs);

// True iff the closure of sub_gens is contained in ambient.elements.
// ambient must be complete (throws std::invalid_argument otherwise). When the
// result is false and diagnostic is non-null, *diagnostic says why.
bool is_subgroup_of(const std::vector<AffineIsometry>& sub_gens,
                    const GeneratedGroup& ambient,
                    std::string* diagnostic = nullptr);

// Order of the reflection group of the named system by the classical product
// formulas, as data (n+1)! for A, 2^n n! for B/C/BC, 2^(n-1) n! for D, and
// the fixed exceptional orders. Same type/rank conventions as
// build_root_system, except that every rank >= 1 is admitted for A/B/C/BC/D
// in the formula sense. Throws std::invalid_argument on unknown input.
long long weyl_group_order(const std::string& type, int rank);

nlohmann::json to_json(const GeneratedGroup& g);

}  // namespace equifocal
