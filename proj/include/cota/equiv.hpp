// cota/equiv.hpp -- weak-equivalence checking, enumeration fronts, random machines
//
// Two models are weakly equivalent when they assign every string the same
// probability.  At desk scale this is certified by exhaustive enumeration:
// exact tables for finite-state models, cap-bounded tables with residual
// tracking for stack and tape machines, and draw-capped tables for
// autoregressive models.  Verdicts are exact on the compared domain and
// truncation-aware beyond it; counterexamples are minimal in length-then-
// lexicographic order, so failure reports are reproducible.

#pragma once

#include "cota/cot.hpp"
#include "cota/lm.hpp"
#include "cota/pfsa.hpp"
#include "cota/ppda.hpp"
#include "cota/ptm.hpp"
#include "cota/rational.hpp"
#include "cota/symbols.hpp"
#include "cota/tf_ptm.hpp"
#include "cota/twopda.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cota {

// Exact table of stringsums for strings of length <= max_len; residual is the
// live prefix mass beyond the table.
CappedDistribution enumerate_distribution(const Pfsa& a, int max_len);
// Run-capped tables; entries filtered to yields of length <= max_len (mass of
// longer accepted yields counts into residual, as does mass alive at the cap).
CappedDistribution enumerate_distribution(const Ppda& p, int max_len, int step_cap);
CappedDistribution enumerate_distribution(const TwoPda& p, int max_len, int step_cap);
CappedDistribution enumerate_distribution(const Ptm& m, int max_len, int step_cap);
// Draw-capped table for autoregressive models (step_cap bounds total draws).
CappedDistribution enumerate_distribution(const Lm& lm, int max_len, int step_cap);
CappedDistribution enumerate_distribution(const CotLm& c, int max_len, int step_cap);

enum class Verdict { ExactEqual, EqualUpToTruncation, Counterexample };

struct EquivalenceReport {
  int max_len = 0;
  Verdict verdict = Verdict::ExactEqual;
  // Per-string comparison rows (string, lhs, rhs), deterministically ordered.
  struct Row {
    Word y;
    Rational lhs, rhs;
  };
  std::vector<Row> compared;
  Word counterexample;  // meaningful when verdict == Counterexample
  Rational lhs_value, rhs_value;
  bool lhs_truncated = false;
  bool rhs_truncated = false;

  nlohmann::json to_json() const;
};

// Entry-wise exact comparison of two enumeration tables.  A mismatch whose
// discrepancy cannot be explained by truncation on the deficient side yields
// the length-lexicographically smallest counterexample; otherwise the verdict
// is ExactEqual when both tables are complete and EqualUpToTruncation when
// either carries residual mass.
EquivalenceReport check_weak_equivalence(const CappedDistribution& lhs, const CappedDistribution& rhs, int max_len);

// One row of the step-invariant replay: exact comparison of the decoded
// configuration one-hot and of the next-transition distribution.
struct TraceCheckRow {
  std::int64_t t = 0;
  bool config_ok = false;
  bool distribution_ok = false;
  nlohmann::json diff;  // empty object when both hold; full vector diff otherwise
};

// Replays a branch (transition indices into c.normalized) through the direct
// simulator and the compiled model in lockstep, checking at every step that
// the decoded configuration equals onehot(q_t, s_t, a_{t-1}) and that E * enc
// equals the machine's conditional transition distribution from (q_t, s_t).
std::vector<TraceCheckRow> check_transformer_ptm_trace(const Ptm& m, const CompiledTfPtm& c,
                                                       const std::vector<int>& branch);

struct MachineBounds {
  int max_states = 3;
  int max_symbols = 2;
  int max_stack_symbols = 2;  // tape symbols for tape machines
};

// Seeded generators; every draw is validator-clean by construction, weights
// have denominators <= 16, and all randomness flows through the given 64-bit
// engine (integer draws only).
Pfsa random_pfsa(std::uint64_t seed, const MachineBounds& bounds);
Ppda random_ppda(std::uint64_t seed, const MachineBounds& bounds);
TwoPda random_twopda(std::uint64_t seed, const MachineBounds& bounds);
Ptm random_ptm(std::uint64_t seed, const MachineBounds& bounds);

}  // namespace cota
