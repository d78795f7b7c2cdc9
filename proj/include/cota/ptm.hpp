// cota/ptm.hpp -- probabilistic Turing machines (working tape + output tape)
//
// A transition is conditioned on the current state and the symbol under the
// working-tape head; it writes a working-tape symbol, optionally appends an
// output symbol, moves the head one cell left or right, and changes state.
// The working tape is two-way infinite: position 0 initially holds the bottom
// marker, every other cell the blank.  A branch of the computation tree is
// accepting when it reaches the final state; its yield is the concatenated
// output.  Weights are normalized per (state, read symbol): outgoing mass
// exactly 0 or exactly 1, and the final state has no outgoing transitions.

#pragma once

#include "cota/rational.hpp"
#include "cota/symbols.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cota {

struct PtmTransition {
  int from = 0;
  Sym read;                    // working-tape symbol under the head
  std::optional<Sym> output;   // appended to the output tape; nullopt = epsilon
  Sym write;                   // written to the working tape
  int move = +1;               // +1 = right, -1 = left
  Rational weight;
  int to = 0;
};

struct Ptm {
  std::vector<Sym> alphabet;        // output alphabet
  std::vector<Sym> tape_alphabet;   // includes blank and bottom
  Sym blank;
  Sym bottom;
  std::vector<std::string> states;
  int initial_state = 0;
  int final_state = 0;
  std::vector<PtmTransition> transitions;

  int state_index(const std::string& name) const;
};

struct PtmConfiguration {
  int state = 0;
  std::map<std::int64_t, Sym> tape;  // written cells only
  std::int64_t head = 0;
  Word output;
};

void validate_ptm(const Ptm& m);

PtmConfiguration ptm_initial_configuration(const Ptm& m);

// Symbol under the head: written value if any, else bottom at position 0,
// else blank.
Sym ptm_read(const Ptm& m, const PtmConfiguration& cfg);

// Applies one transition; throws Error("precondition") if it is not an
// outgoing transition of (cfg.state, symbol under head).
PtmConfiguration ptm_step(const Ptm& m, const PtmConfiguration& cfg, const PtmTransition& t);

// Exhaustively expands the computation tree to depth step_cap.  Entries hold
// the total weight of accepting branches per yield; residual is the weight of
// branches still alive at the cap.  Entries + residual always sum to exactly 1
// minus the weight lost in dead configurations (none for machines whose
// non-final rows all have outgoing mass 1).
CappedDistribution ptm_truncated_distribution(const Ptm& m, int step_cap);

struct PtmSample {
  std::vector<int> path;
  Word yield;
  bool accepted = false;
};

PtmSample ptm_sample(const Ptm& m, std::mt19937_64& rng, int step_cap);

// True when every non-final (state, read) row has outgoing mass exactly 1 and
// every transition into the final state outputs epsilon.  This is the input
// form the tape-machine-to-transformer compiler requires: halting is then
// exactly the event of drawing an end-of-sequence-tagged symbol, and the
// network's next-symbol columns are full probability vectors.
bool ptm_is_sampling_normal_form(const Ptm& m);

}  // namespace cota
