// cota/tf_pfsa.hpp -- compiling a finite-state acceptor into a hard-attention LM
//
// The construction mirrors the recurrent one but needs no recurrence at all:
// position-independent one-hot representations, a single identity layer
// (V = 0, O = 0, so attention contributes nothing), F = identity, and the
// same column-stochastic output matrix.  Every representation is bitwise
// position-invariant, which is asserted and tested, and parameter precision is
// a constant of the machine.

#pragma once

#include "cota/fst.hpp"
#include "cota/linalg.hpp"
#include "cota/lm.hpp"
#include "cota/pfsa.hpp"
#include "cota/symbols.hpp"
#include "cota/transformer.hpp"

#include <vector>

namespace cota {

class TfPfsaLm final : public Lm {
 public:
  std::vector<Sym> syms;        // drawable tags (Sigma + {eps}) x Q
  int bos_col = 0;              // representation column for the BOS tag
  RMat reps;                    // static one-hot representations, one column per tag + BOS
  TransformerLayer layer;       // the identity layer
  RMat E;                       // output matrix, rows = drawable tags + EOS tags
  std::vector<int> row_symbol;  // per E row: index into syms, or -1 for EOS-tagged

  const std::vector<Sym>& alphabet() const override { return syms; }
  void next(const Word& ctx, std::vector<Rational>& probs, Rational& eos) const override;

  // Final-layer output at the last position of BOS + ctx; the construction
  // makes this the one-hot of the last symbol, independent of position.
  RVec encode(const Word& ctx) const;

  int parameter_precision() const;
};

struct CompiledTfPfsa {
  TfPfsaLm lm;
  Fst eraser;
};
CompiledTfPfsa compile_transformer_from_pfsa(const Pfsa& a);

}  // namespace cota
