// cota/cot.hpp -- chain-of-thought wrappers and the alphabet-augmentation constructions
//
// A CoT-augmented LM is a base model over an augmented alphabet Delta together
// with a functional transducer phi erasing the augmentation; the wrapper's
// probability of y sums the base mass of phi's preimage of y.  The four
// augmentations construct base machines whose tagged outputs record enough of
// the run to make generation deterministic (or output-deterministic), while
// the eraser recovers the original distribution.

#pragma once

#include "cota/fst.hpp"
#include "cota/lm.hpp"
#include "cota/pfsa.hpp"
#include "cota/ppda.hpp"
#include "cota/ptm.hpp"
#include "cota/rational.hpp"
#include "cota/symbols.hpp"
#include "cota/twopda.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace cota {

struct CotLm {
  std::vector<Sym> sigma;  // target alphabet
  Fst phi;                 // functional eraser, Delta* -> Sigma*
  // Cap-bounded enumeration of the base model: complete strings of length
  // <= cap with their exact mass; residual = base mass not yet resolved.
  std::function<CappedDistribution(int cap)> base_enumerate;
  // Set when the base is a finite-state acceptor; enables the exact
  // composition route for probabilities (no cap needed).
  std::optional<Pfsa> base_pfsa;
};

CotLm make_cot_lm(const Pfsa& base, const Fst& phi, std::vector<Sym> sigma);
CotLm make_cot_lm(const Ppda& base, const Fst& phi, std::vector<Sym> sigma);
CotLm make_cot_lm(const TwoPda& base, const Fst& phi, std::vector<Sym> sigma);
CotLm make_cot_lm(const Ptm& base, const Fst& phi, std::vector<Sym> sigma);
// Base given through the LM interface (compiled networks).  The caller keeps
// `base` alive for the wrapper's lifetime.
CotLm make_cot_lm(const Lm& base, const Fst& phi, std::vector<Sym> sigma);

// Sum of base mass over phi-preimages of y with length <= cap.  Exact
// (saturated == false) when the base is finite-state (composition route) or
// when phi is length-preserving and cap >= |y|; otherwise a lower bound with
// the saturation flag set when base mass remains beyond the cap.  Base strings
// rejected by phi contribute no mass.
CappedSum cot_probability(const CotLm& c, const Word& y, int cap);

// The wrapper's distribution over Sigma-strings from base strings of length
// <= cap; residual = base mass not resolved at the cap.
CappedDistribution cot_enumerate(const CotLm& c, int cap);

// State-tagging construction for finite-state acceptors: alphabet and state
// space Sigma x Q, transitions (y,q) -(y',q')/w-> (y',q') for each original
// q -y'/w-> q'; final weights copied per state component.  Initial weight is
// concentrated on one canonical tag (first alphabet symbol in file order) of
// each originally-initial state, so machines with a single initial state stay
// single-initial after tagging.  Unreachable tagged states are kept so the
// state count is exactly |Sigma|*|Q|; prune_unreachable trims them on demand.
struct DeterminizedPfsa {
  Pfsa tagged;
  Fst eraser;
};
DeterminizedPfsa determinize_pfsa(const Pfsa& a);

Pfsa prune_unreachable(const Pfsa& a);

// Tagging construction for single-stack machines: alphabet and state space
// Sigma_eps x Q x Gamma, where a tag records (emitted symbol, entered state,
// popped stack symbol).  From any tagged state, reading tag (y',q',g') pops g'
// and pushes what the original transition (q,g') -y'/w-> (q',push) pushes.
// The tagged machine accepts with an empty stack in any state whose middle
// component is accepting.  Precondition: no two transitions share source,
// pop, symbol, and target while pushing different strings (the tag cannot
// disambiguate the push); violations raise Error("precondition").
struct DeterminizedPpda {
  Ppda tagged;
  Fst eraser;
};
DeterminizedPpda determinize_ppda(const Ppda& p);

// Output-determinizing construction for two-stack machines: the alphabet
// Q x Gamma_eps^4 x Sigma_eps tags every transition with its target state,
// stack operations, and scanned symbol, making the scanned tag determine the
// full transition effect from any (state, first-stack top).  States are
// unchanged.  The eraser keeps the last component.
struct SigmaDeterminizedTwoPda {
  TwoPda tagged;
  Fst eraser;
};
SigmaDeterminizedTwoPda sigma_determinize_twopda(const TwoPda& p);

// Augmented output alphabet for tape machines:
// Delta = Q x Gamma x (Sigma + {EOS, eps}) x A x A with A = {-1, 0, +1}.
// A symbol (q', v, ybar, a, a_prev) records the transition taken: entered
// state, written tape symbol, emitted output (or EOS for halting, eps for
// silent), head action, and the previous head action.  BOS' is the designated
// start padding (q0, bottom, BOS, 0, 0), kept outside Delta.
struct PtmDelta {
  std::vector<Sym> delta;   // deterministic enumeration order
  Sym bos_prime;
  Sym eos_marker;           // the reserved ybar component marking halting
  // Tag for a transition taken after previous head action a_prev; as_eos
  // replaces the output component with the halting marker.
  Sym encode(const Ptm& m, const PtmTransition& t, int a_prev, bool as_eos) const;
  struct Decoded {
    std::string to_state;
    Sym write;
    std::optional<Sym> output;  // nullopt = eps; ignored when is_eos
    bool is_eos = false;
    int action = 0;
    int prev_action = 0;
  };
  Decoded decode(const Sym& s) const;
};
PtmDelta augment_ptm_alphabet(const Ptm& m);

}  // namespace cota
