// cota/fst.hpp -- finite-state transducers, weighted transducers, and their algebra
//
// Three related machine shapes live here:
//   Fst     -- boolean transducer: initial/final state sets, unweighted arcs.
//   Wfst    -- weighted transducer: initial/final weight functions, rational arcs.
//   EpsWfsa -- weighted acceptor that may contain epsilon transitions (the image
//              of input projection); epsilon mass is resolved by exact linear solve.
//
// The algebra is composition (with a three-state epsilon filter), input
// projection, lifting an acceptor to the identity-relation transducer,
// inversion, and the two canonical erasing transducers used by the
// chain-of-thought constructions: the per-symbol tag eraser and the
// first-marker splitter.

#pragma once

#include "cota/pfsa.hpp"
#include "cota/rational.hpp"
#include "cota/symbols.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cota {

struct FstTransition {
  int from = 0;
  std::optional<Sym> in;    // nullopt = epsilon
  std::optional<Sym> out;   // nullopt = epsilon
  int to = 0;
};

struct Fst {
  std::vector<Sym> in_alphabet;
  std::vector<Sym> out_alphabet;
  std::vector<std::string> states;
  std::vector<int> initial;   // I
  std::vector<int> final_;    // F
  std::vector<FstTransition> transitions;
  bool functional = false;    // marks transducers known to implement a (partial) function

  int state_index(const std::string& name) const;
};

struct WfstTransition {
  int from = 0;
  std::optional<Sym> in;
  std::optional<Sym> out;
  Rational weight;
  int to = 0;
};

struct Wfst {
  std::vector<Sym> in_alphabet;
  std::vector<Sym> out_alphabet;
  std::vector<std::string> states;
  std::vector<Rational> initial;        // lambda
  std::vector<Rational> final_weights;  // rho
  std::vector<WfstTransition> transitions;

  int state_index(const std::string& name) const;
};

// Weighted acceptor permitted epsilon transitions.
struct EpsWfsa {
  std::vector<Sym> alphabet;
  std::vector<std::string> states;
  std::vector<Rational> initial;
  std::vector<Rational> final_weights;
  struct Transition {
    int from = 0;
    std::optional<Sym> symbol;
    Rational weight;
    int to = 0;
  };
  std::vector<Transition> transitions;
};

void validate_fst(const Fst& t);
void validate_wfst(const Wfst& t);

struct FstApplyResult {
  std::set<Word> outputs;
  bool saturated = false;  // true when the length cap cut off longer outputs
};

// All output strings related to input x, with output length bounded by cap
// (epsilon-input arcs can grow outputs without consuming x, so a cap is
// required for general transducers).
FstApplyResult fst_apply(const Fst& t, const Word& x, int cap);

// Indicator-weighted version of a boolean transducer (arc weight 1, initial
// and final weights 1 on I and F).  The result is generally not stochastic;
// it is the weighted-algebra embedding of a relation.
Wfst fst_as_wfst(const Fst& t);

// Composition: the result computes (y, x) -> sum_z t2(z -> x) * t1(y -> z).
// Precondition: output alphabet of t1 equals input alphabet of t2.  Built by
// the product construction with the standard three-state epsilon filter, so
// state count is at most |Q1| * |Q2| * 3.
Wfst wfst_compose(const Wfst& t2, const Wfst& t1);

// Drops output labels, merging transitions that become identical additively.
EpsWfsa wfst_project_input(const Wfst& t);

// The identity-relation transducer of an acceptor: T_A(y, y') = 1{y = y'} A(y).
Wfst pfsa_lift(const Pfsa& a);

// Swaps input and output labels on every transition.
Wfst wfst_invert(const Wfst& t);

// Exact stringsum including epsilon moves.  The epsilon-arc weight matrix E
// must have convergent closure: (I - E) nonsingular with nonnegative inverse;
// otherwise the epsilon mass diverges and Error("divergent") is thrown.
Rational eps_stringsum(const EpsWfsa& a, const Word& y);

// Epsilon removal: returns the machine with transition matrices C*A_y, final
// weights C*rho, and unchanged initial weights, where C = (I - E)^{-1} is the
// epsilon-closure.  When the input is stochastic-with-epsilon, the result is a
// valid Pfsa.  Throws Error("divergent") as eps_stringsum does.
Pfsa eps_remove(const EpsWfsa& a);

// Exact weight of the pair (y, x) under a weighted transducer, epsilon moves
// included (same convergence requirement as eps_stringsum).  This is the
// semantic evaluator used by the algebra's property tests.
Rational wfst_pair_weight(const Wfst& t, const Word& y, const Word& x);

// Single-state eraser for a tagged alphabet: each tag maps to its first
// component; a tag whose first component is null erases to epsilon.  A tag
// that is null-first and otherwise empty is rejected (invalid alphabet), since
// it would denote an epsilon-to-epsilon arc with no content.
Fst make_eraser_fst(const std::vector<Sym>& delta);

// The two-state first-marker splitter: state 0 deletes symbols up to and
// including the first marker, state 1 (the only accepting state) copies the
// rest verbatim (further markers included).  Marker-free strings are rejected.
Fst make_marker_split_fst(const std::vector<Sym>& sigma, const Sym& marker);

// Direct homomorphism forms of the two erasers; each must agree with running
// its FST.  marker_split_apply returns nullopt on marker-free input.
Word eraser_apply(const Word& tagged);
std::optional<Word> marker_split_apply(const Word& x, const Sym& marker);

}  // namespace cota
