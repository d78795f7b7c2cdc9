// cota/lm.hpp -- the autoregressive language-model interface
//
// An LM exposes exact next-symbol distributions over its alphabet plus an
// end-of-sequence event, conditioned on the string drawn so far (a BOS prefix
// is implicit and handled inside each implementation).  String probabilities
// and cap-bounded enumeration are derived here, uniformly for every model:
// compiled networks, extracted machines, and acceptors viewed as LMs.

#pragma once

#include "cota/rational.hpp"
#include "cota/symbols.hpp"

#include <vector>

namespace cota {

class Lm {
 public:
  virtual ~Lm() = default;

  // Drawable symbols; indices align with the `probs` vector filled by next().
  virtual const std::vector<Sym>& alphabet() const = 0;

  // Exact next-symbol distribution conditioned on ctx: probs[i] is the
  // probability of alphabet()[i], eos the probability of ending the string.
  virtual void next(const Word& ctx, std::vector<Rational>& probs, Rational& eos) const = 0;
};

// p(EOS | y) * prod_t p(y_t | y_{<t}).
Rational lm_string_probability(const Lm& lm, const Word& y);

// All strings whose total draw count (symbols plus the terminating EOS draw)
// is at most draw_cap, with the exact probability mass still unresolved at the
// cap as residual.  Zero-probability prefixes are pruned exactly.
CappedDistribution lm_truncated_distribution(const Lm& lm, int draw_cap);

}  // namespace cota
