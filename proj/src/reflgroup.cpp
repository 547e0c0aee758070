/* This is reflgroup.cpp: exact affine isometries, breadth-first group
   closure, word-length balls of affine groups, the translation-lattice test
   (integer column echelon over scaled entries), and subgroup containment. */
#include "equifocal/reflgroup.hpp"

#include <cstdlib>
#include <numeric>
#include <unordered_set>
#include <utility>

namespace equifocal {

namespace {

using IsometrySet =
    std::unordered_set<AffineIsometry, AffineIsometryHash, AffineIsometryEq>;

void require_square_match(const AffineIsometry& f) {
  if (f.linear.rows() != f.linear.cols() ||
      f.linear.rows() != f.translation.size())
    throw std::invalid_argument("affine isometry: shape mismatch");
}

// Monoid closure under right-composition with the generators, with exact
// deduplication and a hard size ceiling. For any set of isometries whose
// closure stays finite this is the generated group (powers cycle, so
// inverses appear); growth past the ceiling reports is_complete = false.
GeneratedGroup closure_with_ceiling(const std::vector<AffineIsometry>& generators,
                                    std::size_t max_order) {
  if (generators.empty())
    throw std::invalid_argument("group closure: no generators");
  Eigen::Index dim = generators.front().linear.rows();
  for (const AffineIsometry& g : generators) {
    require_square_match(g);
    if (g.linear.rows() != dim)
      throw std::invalid_argument("group closure: mixed dimensions");
  }

  GeneratedGroup out;
  out.generators = generators;
  out.is_complete = true;
  IsometrySet seen;
  AffineIsometry id = identity_isometry(dim);
  seen.insert(id);
  out.elements.push_back(id);
  std::vector<AffineIsometry> frontier{id};
  while (!frontier.empty() && out.is_complete) {
    std::vector<AffineIsometry> next;
    for (const AffineIsometry& e : frontier) {
      for (const AffineIsometry& g : generators) {
        AffineIsometry p = compose(e, g);
        if (!seen.insert(p).second) continue;
        out.elements.push_back(p);
        next.push_back(p);
        if (out.elements.size() > max_order) {
          out.is_complete = false;
          break;
        }
      }
      if (!out.is_complete) break;
    }
    frontier = std::move(next);
  }
  return out;
}

// Column-echelon basis (pivot rows strictly increasing, pivots positive) of
// the integer lattice spanned by the given columns; column operations only,
// so the lattice is unchanged.
std::vector<std::vector<long long>> lattice_echelon(
    std::vector<std::vector<long long>> cols, int dim) {
  std::size_t k = 0;
  for (int r = 0; r < dim && k < cols.size(); ++r) {
    while (true) {
      std::size_t jmin = cols.size();
      for (std::size_t j = k; j < cols.size(); ++j)
        if (cols[j][r] != 0 &&
            (jmin == cols.size() ||
             std::llabs(cols[j][r]) < std::llabs(cols[jmin][r])))
          jmin = j;
      if (jmin == cols.size()) break;  // no pivot in this row
      bool leftover = false;
      for (std::size_t j = k; j < cols.size(); ++j) {
        if (j == jmin || cols[j][r] == 0) continue;
        long long q = cols[j][r] / cols[jmin][r];
        for (int i = 0; i < dim; ++i) cols[j][i] -= q * cols[jmin][i];
        if (cols[j][r] != 0) leftover = true;
      }
      if (!leftover) {
        std::swap(cols[k], cols[jmin]);
        if (cols[k][r] < 0)
          for (int i = 0; i < dim; ++i) cols[k][i] = -cols[k][i];
        ++k;
        break;
      }
    }
  }
  cols.resize(k);
  return cols;
}

bool in_integer_span(const std::vector<ExactVector>& generators,
                     const ExactVector& t) {
  int dim = (int)t.size();
  long long scale = 1;
  for (const ExactVector& g : generators)
    for (Eigen::Index i = 0; i < g.size(); ++i)
      scale = std::lcm(scale, g(i).den());
  for (Eigen::Index i = 0; i < t.size(); ++i) scale = std::lcm(scale, t(i).den());

  std::vector<std::vector<long long>> cols;
  for (const ExactVector& g : generators) {
    std::vector<long long> c(dim);
    for (int i = 0; i < dim; ++i) c[i] = g(i).num() * (scale / g(i).den());
    cols.push_back(std::move(c));
  }
  std::vector<std::vector<long long>> basis = lattice_echelon(std::move(cols), dim);

  std::vector<long long> rem(dim);
  for (int i = 0; i < dim; ++i) rem[i] = t(i).num() * (scale / t(i).den());
  for (const std::vector<long long>& b : basis) {
    int r = 0;
    while (r < dim && b[r] == 0) ++r;
    if (rem[r] % b[r] != 0) return false;
    long long q = rem[r] / b[r];
    for (int i = 0; i < dim; ++i) rem[i] -= q * b[i];
  }
  for (int i = 0; i < dim; ++i)
    if (rem[i] != 0) return false;
  return true;
}

nlohmann::json rational_pair(const Rational& r) {
  return nlohmann::json{r.num(), r.den()};
}

}  // namespace

AffineIsometry identity_isometry(Eigen::Index dim) {
  AffineIsometry f;
  f.linear = ExactMatrix::Identity(dim, dim);
  f.translation = ExactVector::Constant(dim, Rational(0));
  return f;
}

AffineIsometry compose(const AffineIsometry& f, const AffineIsometry& g) {
  if (f.linear.cols() != g.linear.rows())
    throw std::invalid_argument("compose: dimension mismatch");
  AffineIsometry out;
  out.linear = f.linear * g.linear;
  out.translation = f.linear * g.translation + f.translation;
  return out;
}

AffineIsometry inverse(const AffineIsometry& f) {
  AffineIsometry out;
  out.linear = f.linear.transpose();
  out.translation = -(out.linear * f.translation);
  return out;
}

ExactVector apply(const AffineIsometry& f, const ExactVector& x) {
  if (f.linear.cols() != x.size())
    throw std::invalid_argument("apply: dimension mismatch");
  return f.linear * x + f.translation;
}

bool isometry_eq(const AffineIsometry& a, const AffineIsometry& b) {
  return exact_eq(a.linear, b.linear) && exact_eq(a.translation, b.translation);
}

bool is_orthogonal(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  ExactMatrix prod = m.transpose() * m;
  ExactMatrix id = ExactMatrix::Identity(m.rows(), m.cols());
  return exact_eq(prod, id);
}

bool is_pure_translation(const AffineIsometry& f) {
  ExactMatrix id = ExactMatrix::Identity(f.linear.rows(), f.linear.cols());
  return exact_eq(f.linear, id);
}

bool group_contains(const GeneratedGroup& g, const AffineIsometry& f) {
  for (const AffineIsometry& e : g.elements)
    if (isometry_eq(e, f)) return true;
  return false;
}

AffineIsometry reflection(const ExactVector& root) {
  return affine_reflection(root, Rational(0));
}

AffineIsometry affine_reflection(const ExactVector& root, const Rational& level) {
  if (is_zero(root))
    throw std::invalid_argument("affine_reflection: zero root");
  Eigen::Index dim = root.size();
  Rational nsq = norm_sq(root);
  AffineIsometry f;
  f.linear = ExactMatrix::Identity(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      f.linear(i, j) -= Rational(2) * root(i) * root(j) / nsq;
  f.translation = root * (Rational(2) * level / nsq);
  return f;
}

GeneratedGroup generate_finite(const std::vector<AffineIsometry>& generators,
                               std::size_t max_order) {
  for (const AffineIsometry& g : generators) {
    require_square_match(g);
    if (!is_zero(g.translation))
      throw std::invalid_argument("generate_finite: generator has a translation part");
    if (!is_orthogonal(g.linear))
      throw std::invalid_argument("generate_finite: generator is not orthogonal");
  }
  return closure_with_ceiling(generators, max_order);
}

GeneratedGroup generate_affine_ball(const std::vector<AffineIsometry>& generators,
                                    int word_length) {
  if (generators.empty())
    throw std::invalid_argument("generate_affine_ball: no generators");
  if (word_length < 0)
    throw std::invalid_argument("generate_affine_ball: negative word length");
  Eigen::Index dim = generators.front().linear.rows();
  IsometrySet factor_set;
  std::vector<AffineIsometry> factors;
  for (const AffineIsometry& g : generators) {
    require_square_match(g);
    if (g.linear.rows() != dim)
      throw std::invalid_argument("generate_affine_ball: mixed dimensions");
    if (!is_orthogonal(g.linear))
      throw std::invalid_argument("generate_affine_ball: generator is not orthogonal");
    for (const AffineIsometry& h : {g, inverse(g)})
      if (factor_set.insert(h).second) factors.push_back(h);
  }

  GeneratedGroup out;
  out.generators = generators;
  out.is_complete = false;  // the group itself is infinite
  IsometrySet seen;
  AffineIsometry id = identity_isometry(dim);
  seen.insert(id);
  out.elements.push_back(id);
  std::vector<AffineIsometry> frontier{id};
  for (int step = 0; step < word_length && !frontier.empty(); ++step) {
    std::vector<AffineIsometry> next;
    for (const AffineIsometry& e : frontier)
      for (const AffineIsometry& g : factors) {
        AffineIsometry p = compose(e, g);
        if (seen.insert(p).second) {
          out.elements.push_back(p);
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

bool translation_lattice_check(const GeneratedGroup& group_ball,
                               const RootSystem& rs) {
  std::vector<ExactVector> scaled;
  for (const Root& r : rs.roots)
    scaled.push_back(r.vector * (Rational(2) / norm_sq(r.vector)));
  for (const AffineIsometry& e : group_ball.elements) {
    if (!is_pure_translation(e) || is_zero(e.translation)) continue;
    if (e.translation.size() != rs.ambient_dim) return false;
    if (!in_integer_span(scaled, e.translation)) return false;
  }
  return true;
}

bool is_subgroup_of(const std::vector<AffineIsometry>& sub_gens,
                    const GeneratedGroup& ambient, std::string* diagnostic) {
  if (!ambient.is_complete)
    throw std::invalid_argument("is_subgroup_of: ambient group is not a complete closure");
  GeneratedGroup closure = closure_with_ceiling(sub_gens, ambient.elements.size());
  if (!closure.is_complete) {
    if (diagnostic)
      *diagnostic = "closure of the candidate generators exceeds the ambient order " +
                    std::to_string(ambient.elements.size());
    return false;
  }
  IsometrySet members(ambient.elements.begin(), ambient.elements.end());
  for (const AffineIsometry& e : closure.elements) {
    if (members.count(e)) continue;
    if (diagnostic)
      *diagnostic = "closure contains an element outside the ambient group";
    return false;
  }
  return true;
}

long long weyl_group_order(const std::string& type, int rank) {
  auto bounded = [](__int128 v) {
    if (v > INT64_MAX)
      throw std::overflow_error("weyl_group_order: exceeds 64-bit range");
    return (long long)v;
  };
  auto factorial_times_power = [&](int n, int twos) {
    __int128 v = 1;
    for (int i = 2; i <= n; ++i) {
      v *= i;
      bounded(v);
    }
    for (int i = 0; i < twos; ++i) {
      v *= 2;
      bounded(v);
    }
    return bounded(v);
  };
  auto fixed = [&](int expected_rank, long long order) {
    if (rank != expected_rank)
      throw std::invalid_argument("weyl_group_order: type " + type +
                                  " requires rank " + std::to_string(expected_rank));
    return order;
  };
  if (type == "A") {
    if (rank < 1) throw std::invalid_argument("weyl_group_order: rank must be >= 1");
    return factorial_times_power(rank + 1, 0);
  }
  if (type == "B" || type == "C" || type == "BC") {
    if (rank < 1) throw std::invalid_argument("weyl_group_order: rank must be >= 1");
    return factorial_times_power(rank, rank);
  }
  if (type == "D") {
    if (rank < 2) throw std::invalid_argument("weyl_group_order: rank must be >= 2");
    return factorial_times_power(rank, rank - 1);
  }
  if (type == "G2") return fixed(2, 12);
  if (type == "F4") return fixed(4, 1152);
  if (type == "E6") return fixed(6, 51840);
  if (type == "E7") return fixed(7, 2903040);
  if (type == "E8") return fixed(8, 696729600);
  throw std::invalid_argument("weyl_group_order: unknown type " + type);
}

nlohmann::json to_json(const GeneratedGroup& g) {
  nlohmann::json out;
  out["is_complete"] = g.is_complete;
  out["size"] = g.elements.size();
  out["elements"] = nlohmann::json::array();
  for (const AffineIsometry& e : g.elements) {
    nlohmann::json linear = nlohmann::json::array();
    for (Eigen::Index i = 0; i < e.linear.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < e.linear.cols(); ++j)
        row.push_back(rational_pair(e.linear(i, j)));
      linear.push_back(row);
    }
    nlohmann::json translation = nlohmann::json::array();
    for (Eigen::Index i = 0; i < e.translation.size(); ++i)
      translation.push_back(rational_pair(e.translation(i)));
    out["elements"].push_back(
        {{"linear", linear}, {"translation", translation}});
  }
  return out;
}

}  // namespace equifocal
