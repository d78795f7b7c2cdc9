// cota/json_io.hpp -- canonical JSON serialization for machines, transducers, models
//
// One envelope shape for all machines:
//   {"type": "pfsa"|"ppda"|"2pda"|"ptm", "alphabet": [...], "states": [...],
//    "initial": {state: weight}, "final": {state: weight}, "transitions": [...]}
// with machine-specific extras (stack alphabets, markers) and transition
// records.  Weights are strings ("p/q", or "p" when the denominator is 1);
// plain symbols are JSON strings and augmented symbols JSON arrays; null
// encodes epsilon in label positions.  Stacks and pushed strings serialize
// top-first.  Parsing is strict: unknown states or symbols, malformed
// weights, and shape errors raise Error("parse"); semantic violations raise
// Error("validate").  Duplicate parallel transitions merge additively;
// zero-weight transitions are dropped.

#pragma once

#include "cota/fst.hpp"
#include "cota/pfsa.hpp"
#include "cota/ppda.hpp"
#include "cota/ptm.hpp"
#include "cota/rnn.hpp"
#include "cota/tf_pfsa.hpp"
#include "cota/tf_ptm.hpp"
#include "cota/twopda.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace cota {

using Machine = std::variant<Pfsa, Ppda, TwoPda, Ptm>;

// Parses and validates a machine envelope (dispatch on "type").
Machine machine_from_json(const nlohmann::json& j);
nlohmann::json machine_to_json(const Machine& m);

nlohmann::json pfsa_to_json(const Pfsa& a);
Pfsa pfsa_from_json(const nlohmann::json& j);
nlohmann::json ppda_to_json(const Ppda& p);
Ppda ppda_from_json(const nlohmann::json& j);
nlohmann::json twopda_to_json(const TwoPda& p);
TwoPda twopda_from_json(const nlohmann::json& j);
nlohmann::json ptm_to_json(const Ptm& m);
Ptm ptm_from_json(const nlohmann::json& j);

nlohmann::json fst_to_json(const Fst& t);
Fst fst_from_json(const nlohmann::json& j);

// Model envelopes: {"type": "rnn-lm" | "tf-pfsa-lm" | "tf-ptm-lm", ...} with
// dense row-major rational matrices, the activation / scoring tags, and the
// companion eraser embedded.
nlohmann::json rnn_to_json(const ElmanRnnLm& m, const Fst& eraser);
std::pair<ElmanRnnLm, Fst> rnn_from_json(const nlohmann::json& j);
nlohmann::json tf_pfsa_to_json(const CompiledTfPfsa& c);
CompiledTfPfsa tf_pfsa_from_json(const nlohmann::json& j);
nlohmann::json tf_ptm_to_json(const CompiledTfPtm& c);
CompiledTfPtm tf_ptm_from_json(const nlohmann::json& j);

// Canonical text form used everywhere output must be byte-stable: two-space
// indentation, keys in lexicographic order, trailing newline.
std::string canonical_text(const nlohmann::json& j);

// Rational matrix <-> row-major nested arrays of weight strings.
nlohmann::json matrix_to_json(const RMat& m);
RMat matrix_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const RVec& v);
RVec vector_from_json(const nlohmann::json& j);

}  // namespace cota
