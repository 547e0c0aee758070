/* This is linalg.hpp: dense type aliases over an arbitrary scalar plus the
   exact (rational) linear algebra the root-system layer needs: metric inner
   products, Gram-Schmidt, row reduction, nullspaces, exact solves. */
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "equifocal/rational.hpp"

namespace equifocal {

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ExactVector = Vec<Rational>;
using ExactMatrix = Mat<Rational>;

inline ExactVector exact_vector(std::initializer_list<Rational> coords) {
  ExactVector v(coords.size());
  Eigen::Index i = 0;
  for (const auto& c : coords) v(i++) = c;
  return v;
}

template <typename Scalar>
bool exact_eq(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename Scalar>
bool exact_eq(const Vec<Scalar>& a, const Vec<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

inline bool is_zero(const ExactVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

// Strict coordinatewise lexicographic order.
inline bool lex_less(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

// First nonzero coordinate positive.
inline bool lex_positive(const ExactVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) return v(i).sign() > 0;
  }
  return false;
}

// <x, y> under a diagonal metric; unit metric when `metric` is empty.
inline Rational inner(const ExactVector& x, const ExactVector& y,
                      const ExactVector& metric = ExactVector()) {
  if (x.size() != y.size())
    throw std::invalid_argument("inner: dimension mismatch");
  Rational s(0);
  if (metric.size() == 0) {
    for (Eigen::Index i = 0; i < x.size(); ++i) s += x(i) * y(i);
  } else {
    if (metric.size() != x.size())
      throw std::invalid_argument("inner: metric dimension mismatch");
    for (Eigen::Index i = 0; i < x.size(); ++i) s += x(i) * y(i) * metric(i);
  }
  return s;
}

inline Rational norm_sq(const ExactVector& x, const ExactVector& metric = ExactVector()) {
  return inner(x, x, metric);
}

// Orthogonalizes the columns of `basis` under the given diagonal metric
// without normalizing (square lengths stay rational). Throws if the columns
// are linearly dependent.
inline ExactMatrix gram_schmidt(const ExactMatrix& basis, const ExactVector& metric = ExactVector()) {
  ExactMatrix q = basis;
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    ExactVector col = q.col(k);
    for (Eigen::Index j = 0; j < k; ++j) {
      ExactVector prev = q.col(j);
      Rational coef = inner(col, prev, metric) / norm_sq(prev, metric);
      for (Eigen::Index i = 0; i < col.size(); ++i) col(i) -= coef * prev(i);
    }
    if (is_zero(col))
      throw std::invalid_argument("gram_schmidt: dependent basis");
    q.col(k) = col;
  }
  return q;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<Eigen::Index> rref(ExactMatrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline Eigen::Index exact_rank(ExactMatrix m) { return (Eigen::Index)rref(m).size(); }

// Basis (as columns) of {x : A x = 0}.
inline ExactMatrix nullspace(ExactMatrix a) {
  Eigen::Index n = a.cols();
  std::vector<Eigen::Index> pivots = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (Eigen::Index p : pivots) is_pivot[p] = true;
  ExactMatrix basis(n, n - (Eigen::Index)pivots.size());
  Eigen::Index k = 0;
  for (Eigen::Index free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    ExactVector x = ExactVector::Constant(n, Rational(0));
    x(free_col) = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      x(pivots[r]) = -a((Eigen::Index)r, free_col);
    basis.col(k++) = x;
  }
  return basis;
}

// One exact solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<ExactVector> solve(const ExactMatrix& a, const ExactVector& b) {
  ExactMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Eigen::Index> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  ExactVector x = ExactVector::Constant(a.cols(), Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r)
    x(pivots[r]) = aug((Eigen::Index)r, a.cols());
  return x;
}

template <typename Scalar>
Eigen::VectorXd to_double(const Vec<Scalar>& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).to_double();
  return out;
}

struct ExactVectorHash {
  size_t operator()(const ExactVector& v) const noexcept {
    size_t h = std::hash<long long>()(v.size());
    std::hash<Rational> hr;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      h ^= hr(v(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct ExactVectorEq {
  bool operator()(const ExactVector& a, const ExactVector& b) const noexcept {
    return exact_eq(a, b);
  }
};

}  // namespace equifocal
