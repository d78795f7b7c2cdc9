// cota/pfsa.hpp -- probabilistic finite-state automata with exact weights
//
// A PFSA carries an initial-weight function over states, a final-weight
// function, and rationally weighted transitions.  Validity requires the initial
// weights to sum to 1 and, for every state, outgoing weight plus final weight
// to sum to 1.  There are no epsilon transitions; zero-weight transitions are
// equivalent to absent ones and are dropped at parse time.

#pragma once

#include "cota/rational.hpp"
#include "cota/symbols.hpp"

#include <random>
#include <string>
#include <vector>

namespace cota {

struct PfsaTransition {
  int from = 0;
  Sym symbol;
  Rational weight;
  int to = 0;
};

struct Pfsa {
  std::vector<Sym> alphabet;              // file order; index is the canonical symbol id
  std::vector<std::string> states;        // file order; index is the canonical state id
  std::vector<Rational> initial;          // lambda, by state index
  std::vector<Rational> final_weights;    // rho, by state index
  std::vector<PfsaTransition> transitions;

  int state_index(const std::string& name) const;   // -1 when absent
  int symbol_index(const Sym& s) const;             // -1 when absent
};

// Structural and normalization checks; throws Error("validate") on violation.
// Checks: nonempty state set, weights in [0,1], initial weights sum to 1, and
// for every state q: sum of outgoing weights + final weight == 1 exactly.
void validate_pfsa(const Pfsa& a);

// True iff exactly one state has positive initial weight and every
// (state, symbol) pair has at most one positive-weight transition.
bool pfsa_is_deterministic(const Pfsa& a);

// Exact stringsum by the forward algorithm: propagate a state-indexed weight
// row vector through per-symbol transition matrices, then dot with the final
// weights.  Returns 0 when no path yields y.
Rational pfsa_stringsum(const Pfsa& a, const Word& y);

// Stringsums of all strings of length <= max_len (zero entries omitted).
Distribution pfsa_enumerate(const Pfsa& a, int max_len);

// Total weight of live prefixes of the given length (initial weight times
// transition weights, no final weight).  Together with the stringsums of all
// shorter-or-equal strings this accounts for exactly all probability mass.
Rational pfsa_prefix_mass(const Pfsa& a, int len);

struct PfsaSample {
  std::vector<int> path;  // visited state indices, starting at the sampled initial state
  Word yield;
};

// Ancestral sampling: draw the initial state from lambda, then repeatedly draw
// among outgoing transitions and halting (rho).  Draws compare a uniform 64-bit
// integer against the exact rational CDF; no floating point is involved.
// Throws Error("truncation") carrying the partial path when step_cap is hit.
PfsaSample pfsa_sample(const Pfsa& a, std::mt19937_64& rng, int step_cap);

}  // namespace cota
