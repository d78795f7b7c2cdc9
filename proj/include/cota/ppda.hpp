// cota/ppda.hpp -- probabilistic pushdown automata (single stack)
//
// Transitions pop exactly one stack symbol and push a (possibly empty) string
// of stack symbols while scanning one alphabet symbol or epsilon.  A run is
// accepting when it ends with an empty stack in an accepting state.  Weights
// are normalized per (state, popped symbol): each such pair has outgoing mass
// exactly 0 or exactly 1.

#pragma once

#include "cota/rational.hpp"
#include "cota/symbols.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cota {

struct PpdaTransition {
  int from = 0;
  Sym pop;                     // stack symbol consumed (never epsilon)
  std::optional<Sym> symbol;   // scanned symbol; nullopt = epsilon move
  Rational weight;
  int to = 0;
  std::vector<Sym> push;       // pushed string, top of stack first
};

struct Ppda {
  std::vector<Sym> alphabet;
  std::vector<Sym> stack_alphabet;
  Sym start_symbol;                 // initial stack contents: exactly this symbol
  std::vector<std::string> states;
  int initial_state = 0;
  std::vector<int> accepting_states;  // source machines use a singleton; tagged
                                      // machines produced by augmentation may accept
                                      // in every state carrying the final component
  std::vector<PpdaTransition> transitions;

  int state_index(const std::string& name) const;
};

// Structural and normalization checks; throws Error("validate").  For every
// (state, popped symbol) pair the outgoing weights sum to exactly 0 or 1.
void validate_ppda(const Ppda& p);

// True iff every (state, popped symbol, scanned symbol) triple has at most one
// positive transition and no (state, popped symbol) pair mixes epsilon moves
// with scanning moves.
bool ppda_is_deterministic(const Ppda& p);

// Sum of run weights over accepting runs with at most run_cap transitions that
// yield y, by exhaustive configuration search.  `saturated` reports whether any
// run was still alive at the cap (the value then under-approximates).
CappedSum ppda_stringsum(const Ppda& p, const Word& y, int run_cap);

// Yields and weights of all accepting runs with at most run_cap transitions;
// residual is the total weight of runs still alive at the cap.
CappedDistribution ppda_enumerate(const Ppda& p, int run_cap);

struct PpdaSample {
  std::vector<int> path;  // visited state indices
  Word yield;
  bool accepted = false;
};

// Ancestral sampling over the run tree (uniform 64-bit integer versus exact
// CDF).  Dead configurations (no outgoing mass, not accepting) end the run
// with accepted == false; hitting step_cap throws Error("truncation").
PpdaSample ppda_sample(const Ppda& p, std::mt19937_64& rng, int step_cap);

}  // namespace cota
