// cota/linalg.hpp -- dense exact-rational linear algebra on top of Eigen
//
// Dense matrix and vector types over the exact rational scalar, plus the few
// free functions the rest of the library needs: one-hot basis vectors, an exact
// inverse with explicit singularity reporting, and entry-wise size measures.
// Everything is expression-friendly: functions take Eigen expressions and force
// evaluation only where an algorithm genuinely needs materialized storage.

#pragma once

#include <Eigen/Core>

#include "cota/rational.hpp"

#include <optional>

namespace cota {

using RMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RRowVec = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

inline RVec one_hot(Eigen::Index dim, Eigen::Index i) {
  RVec v = RVec::Zero(dim);
  v(i) = Rational(1);
  return v;
}

// Exact inverse by Gauss-Jordan elimination over the rational field.
// Returns std::nullopt when the matrix is singular.  Pivoting is by first
// nonzero entry; over an exact field this is always numerically safe.
std::optional<RMat> exact_inverse(const RMat& m);

// Largest entry-wise precision (see precision_of on scalars) of a matrix.
template <typename Derived>
int precision_of_matrix(const Eigen::MatrixBase<Derived>& m) {
  int best = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      best = std::max(best, precision_of(m.derived()(i, j)));
  return best;
}

}  // namespace cota
