// cota/tf_ptm.hpp -- compiling a probabilistic tape machine into a two-layer
// hard-attention LM over the augmented alphabet
//
// The simulator keeps, per generated position, a vector whose slots hold the
// entered state, written tape symbol, head action (one-hot and as a scalar),
// the previous action, running head-position averages c(t)/(t+1) and
// c(t-1)/(t+1), an attended-cell slot pair (position index and tape-symbol
// one-hot), and the positional tail (1, t+1, 1/(t+1), 1/(t+1)^2).  Layer 1
// computes the head-position averages by uniform attention over action slots;
// layer 2 retrieves the last write to the current head position by minimizing
// |<q,k>| over positions; a five-stage ReLU MLP decodes the current
// configuration one-hot (q_t, s_t, a_{t-1}), and the output matrix holds the
// machine's conditional transition distributions with halting redirected to
// EOS-tagged rows.  Requires sampling normal form (full non-final rows,
// silent halting); the compiler rewrites emitting halting transitions through
// an auxiliary state first when needed.

#pragma once

#include "cota/cot.hpp"
#include "cota/fst.hpp"
#include "cota/linalg.hpp"
#include "cota/lm.hpp"
#include "cota/ptm.hpp"
#include "cota/symbols.hpp"
#include "cota/transformer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cota {

class TfPtmLm;

// Incremental per-branch evaluation state: column vectors per position for the
// static representation, layer-1 output, and layer-2 output, plus cached
// layer-2 keys.  extend/pop make depth-first branch walks O(t * D) per step
// instead of re-running the whole prefix.
struct PtmSimState {
  const TfPtmLm* model = nullptr;
  std::vector<RVec> x0;      // static representations (columns)
  std::vector<RVec> x1;      // after layer 1 (with residual)
  std::vector<RVec> x2;      // after layer 2 (with residual)
  std::vector<RVec> keys2;   // layer-2 keys per position
  std::vector<int> attended; // layer-2 argmax position per position (for traces)

  int length() const { return static_cast<int>(x0.size()); }  // positions incl. BOS'
  void extend(const Sym& dsym);  // append the next augmented symbol (or BOS')
  void pop();
  RVec enc() const;              // F(x2 of the last position)
  // Next-symbol distribution: probabilities over the model's Delta alphabet
  // plus total EOS mass.
  void next(std::vector<Rational>& probs, Rational& eos) const;
};

class TfPtmLm final : public Lm {
 public:
  PtmDelta codec;
  RMat W_static;                // disjunction-built static block, cols = Delta + BOS'
  int bos_col = 0;
  TransformerLayer layer1;
  TransformerLayer layer2;
  Mlp F;                        // five-stage configuration decoder
  RMat E;                       // rows = Delta tags (EOS-tagged included)
  std::vector<int> row_symbol;  // per E row: index into drawable syms, or -1 for EOS rows
  std::vector<Sym> drawable;    // Delta symbols with non-EOS ybar component

  // Slot offsets into the D-dimensional position vectors.
  int nq = 0, ng = 0;           // |Q|, |Gamma|
  int off_q = 0, off_v = 0, off_a1 = 0, off_a1s = 0, off_as = 0;
  int off_c = 0, off_cp = 0, off_l = 0, off_vl = 0;
  int off_one = 0, off_tp1 = 0, off_inv = 0, off_inv2 = 0;
  int dim = 0;

  const std::vector<Sym>& alphabet() const override { return drawable; }
  void next(const Word& ctx, std::vector<Rational>& probs, Rational& eos) const override;

  // Static representation of an augmented symbol (or BOS' via bos_col) at
  // position t: the disjunction block output with the positional tail.
  RVec static_representation(int col, std::int64_t t) const;

  PtmSimState fresh_state() const;  // state holding only the BOS' position

  int parameter_precision() const;          // static blocks, layers, F, E
  int positional_precision(std::int64_t t) const;  // precision of the positional tail at t
};

struct CompiledTfPtm {
  TfPtmLm lm;
  Fst eraser;
  Ptm normalized;  // the machine actually compiled (halting rewritten to silent form)
};
CompiledTfPtm compile_transformer_from_ptm(const Ptm& m);

// One row of the step-by-step simulation trace.
struct PtmTraceRow {
  std::int64_t t = 0;
  std::string state;
  std::string tape_symbol;     // s_t as displayed
  std::int64_t head = 0;       // c(t)
  std::int64_t ell = 0;        // last visit time of the current cell (t if fresh)
  std::string top_symbol;      // argmax of E*enc (lexicographically first on ties)
  Rational top_prob;
};

// Follows one branch (list of transition indices into the normalized
// machine's transition vector) through both the direct simulator and the
// compiled model, returning per-step rows from the model's viewpoint.
// Throws Error("precondition") if the branch is not applicable.
std::vector<PtmTraceRow> tf_ptm_trace(const CompiledTfPtm& c, const std::vector<int>& branch);

}  // namespace cota
