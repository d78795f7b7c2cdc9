// cota/activations.hpp -- exact activation and projection functions
//
// The network constructions use four nonlinearities: the Heaviside step and the
// rectifier (entry-wise), and the sparsemax and hardmax projections (vector to
// probability-vector).  All four are exact over the rational scalar; sparsemax
// and hardmax have closed forms that never leave the rational field.

#pragma once

#include <Eigen/Core>

#include "cota/linalg.hpp"
#include "cota/rational.hpp"

#include <algorithm>
#include <vector>

namespace cota {

// Entry-wise Heaviside step: 1 where x > 0, else 0.
template <typename Derived>
auto heaviside(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  return m.unaryExpr([](const S& x) { return x > S(0) ? S(1) : S(0); });
}

// Entry-wise rectifier: max(x, 0).
template <typename Derived>
auto relu(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  return m.unaryExpr([](const S& x) { return x > S(0) ? x : S(0); });
}

// Euclidean projection of a vector onto the probability simplex.
//
// With z sorted in non-increasing order, take the largest k such that
// 1 + k z_(k) > sum_{i<=k} z_(i), set tau = (sum_{i<=k} z_(i) - 1)/k, and output
// max(z_i - tau, 0).  The projection is the identity on vectors that already lie
// on the simplex, which is exactly how the compiled networks use it: their
// output layers produce probability columns and sparsemax certifies them.
RVec sparsemax(const RVec& z);

// Uniform distribution over the argmax set of z.  On an empty-argmax edge case
// (all entries equal) this is the uniform distribution over all coordinates;
// callers that require a unique argmax must check the support themselves.
RVec hardmax(const RVec& z);

// Indices attaining the maximum of z (in increasing coordinate order).
std::vector<Eigen::Index> argmax_set(const RVec& z);

}  // namespace cota
