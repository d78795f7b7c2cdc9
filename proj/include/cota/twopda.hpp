// cota/twopda.hpp -- probabilistic two-stack pushdown automata
//
// A transition is conditioned on the current state and the top of the first
// stack; it may pop one symbol from each stack and push one symbol onto each
// (any of the four positions may be epsilon), while scanning an alphabet
// symbol or epsilon.  The first stack starts holding the bottom marker, the
// second starts empty.  A run accepts when it reaches the final state; stack
// contents are unconstrained at acceptance.  Weights are normalized per
// (state, first-stack top): outgoing mass exactly 0 or exactly 1.

#pragma once

#include "cota/rational.hpp"
#include "cota/symbols.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cota {

struct TwoPdaTransition {
  int from = 0;
  Sym read;                    // required top of stack 1 for applicability
  std::optional<Sym> symbol;   // scanned symbol; nullopt = epsilon move
  std::optional<Sym> pop1;     // popped from stack 1; must equal `read` when set
  std::optional<Sym> pop2;     // popped from stack 2; must match its top when set
  std::optional<Sym> push1;    // pushed onto stack 1 after popping
  std::optional<Sym> push2;    // pushed onto stack 2 after popping
  Rational weight;
  int to = 0;
};

struct TwoPda {
  std::vector<Sym> alphabet;
  std::vector<Sym> stack_alphabet;
  Sym bottom;                       // initial contents of stack 1
  std::vector<std::string> states;
  int initial_state = 0;
  int final_state = 0;
  std::vector<TwoPdaTransition> transitions;

  int state_index(const std::string& name) const;
};

// Structural and normalization checks; throws Error("validate").  For every
// (state, first-stack top) pair the outgoing weights sum to exactly 0 or 1;
// the final state has no outgoing transitions.
void validate_twopda(const TwoPda& p);

// Output determinism: at most one positive transition per
// (state, first-stack top, scanned symbol), where epsilon counts as a scanned
// symbol of its own.
bool twopda_is_sigma_deterministic(const TwoPda& p);

// Sum of run weights over runs with at most run_cap transitions that reach the
// final state with yield y.  `saturated` as in ppda_stringsum.
CappedSum twopda_stringsum(const TwoPda& p, const Word& y, int run_cap);

// Yields and weights of all accepting runs with at most run_cap transitions;
// residual is the weight of runs still alive at the cap.
CappedDistribution twopda_enumerate(const TwoPda& p, int run_cap);

struct TwoPdaSample {
  std::vector<int> path;
  Word yield;
  bool accepted = false;
};

TwoPdaSample twopda_sample(const TwoPda& p, std::mt19937_64& rng, int step_cap);

}  // namespace cota
