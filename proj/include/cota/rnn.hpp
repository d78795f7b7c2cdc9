// cota/rnn.hpp -- exact-rational Elman recurrent LMs; compilation and extraction
//
// The recurrence is h_t = act(U h_{t-1} + V r(y_t) + b) from h_0 = eta, with a
// sparsemax head over E h_t.  Compilation turns a finite-state acceptor into a
// recurrent LM over the state-tagged alphabet whose hidden state is a one-hot
// of the last tagged symbol (constant precision); extraction walks the
// reachable hidden states of any Heaviside model breadth-first, reads the
// head's exact distributions off as transition weights, and removes the tags
// through the transducer algebra.

#pragma once

#include "cota/fst.hpp"
#include "cota/linalg.hpp"
#include "cota/lm.hpp"
#include "cota/pfsa.hpp"
#include "cota/rational.hpp"
#include "cota/symbols.hpp"

#include <string>
#include <vector>

namespace cota {

enum class Activation { Heaviside, Relu };

class ElmanRnnLm final : public Lm {
 public:
  RMat U;        // D x D
  RMat V;        // D x R
  RVec b;        // D
  RVec eta;      // D, initial hidden state
  RMat embed;    // R x (|Delta| + 1): one column per drawable symbol plus BOS
  RMat E;        // output matrix, one row per drawable symbol or EOS tag
  Activation act = Activation::Heaviside;

  std::vector<Sym> syms;         // drawable symbols, aligned with embed columns 0..|Delta|-1
  int bos_col = 0;               // embed column holding the BOS embedding
  std::vector<int> row_symbol;   // per E row: index into syms, or -1 for an EOS-tagged row

  const std::vector<Sym>& alphabet() const override { return syms; }
  void next(const Word& ctx, std::vector<Rational>& probs, Rational& eos) const override;

  // Hidden state after BOS and the whole context.
  RVec hidden(const Word& ctx) const;

  // Largest entry precision over U, V, b, eta, embed, E.
  int parameter_precision() const;
};

// One application of the recurrence to an embedding column.
RVec rnn_step(const ElmanRnnLm& m, const RVec& h, int embed_col);

// sparsemax(E h(context)), split into drawable-symbol mass and EOS mass.
void rnn_next_distribution(const ElmanRnnLm& m, const Word& ctx, std::vector<Rational>& probs, Rational& eos);

// State-tagging compilation of a finite-state acceptor.  The model's drawable
// alphabet is (Sigma + {eps}) x Q; hidden dimension D = (|Sigma| + 2) |Q|
// covers (Sigma + {BOS, eps}) x Q one-hots; U = 0, V = I, b = 0, eta = 0,
// Heaviside activation.  E's context columns are the acceptor's local
// conditional distributions; the BOS column carries the initial weights on
// eps-tagged rows and EOS-tagged rows carry final weights.  The companion
// eraser drops the tags.
struct CompiledRnn {
  ElmanRnnLm lm;
  Fst eraser;
};
CompiledRnn compile_rnn_from_pfsa(const Pfsa& a);

// Breadth-first closure over reachable hidden states (exact vectors as keys),
// then tag removal through lift / compose-with-inverted-phi / input projection
// / epsilon removal.  The intermediate machine is deterministic by
// construction: one state per reachable hidden vector.  Throws Error("guard")
// when more than `guard` states appear (default 10000, overridable via the
// COT_AUTOMATA_GUARD environment variable).
Pfsa extract_pfsa_from_rnn(const ElmanRnnLm& m, const Fst& phi, int guard = -1);

// The intermediate tagged machine of the extraction, exposed for inspection.
Pfsa extract_tagged_pfsa(const ElmanRnnLm& m, int guard = -1);

}  // namespace cota
