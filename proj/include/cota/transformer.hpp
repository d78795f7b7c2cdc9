// cota/transformer.hpp -- hard-attention transformer machinery over exact rationals
//
// Single-head attention with unique-or-shared hardmax selection, residual
// connections, no layer normalization.  A layer computes, per position t,
//   a_t = Att(Q x_t, K X_{0..t}, V X_{0..t}) + x_t,   z_t = O a_t + a_t,
// where attention scores are f(<q, k_j>) for f either the identity (dot) or
// negated absolute value, and the attention weights are uniform over the
// argmax set of the scores.  Everything is exact; no floating point exists
// anywhere in evaluation.

#pragma once

#include "cota/linalg.hpp"
#include "cota/rational.hpp"

#include <vector>

namespace cota {

enum class ScoreFn { Dot, NegAbsDot };

struct TransformerLayer {
  RMat Wq;  // query map, applied to the current position
  RMat Wk;  // key map, applied to every position <= t
  RMat Wv;  // value map
  RMat Wo;  // output map (zero in the constructions here)
  ScoreFn score = ScoreFn::Dot;
};

// Attention output for the last position of X (columns = positions 0..t):
// uniform average of V-mapped columns over the argmax set of scores.
// argmax_size_out, when non-null, receives the tie count so callers can
// enforce uniqueness where the construction guarantees it.
RVec attend_last(const TransformerLayer& layer, const RMat& X, int* argmax_size_out = nullptr);

// Full layer application with rows-as-positions orientation: row t of the
// result is z_t computed from rows 0..t of X.  This is the reference
// (non-incremental) evaluator; incremental simulators keep per-position
// caches instead.
RMat attention_layer_apply(const TransformerLayer& layer, const RMat& X_rows);

// A rational MLP: stages of x -> relu(W x + b).  An empty stage list is the
// identity map.
struct Mlp {
  struct Stage {
    RMat W;
    RVec b;
  };
  std::vector<Stage> stages;

  RVec apply(const RVec& x) const;
  int parameter_precision() const;
};

}  // namespace cota
