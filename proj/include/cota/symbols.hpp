// cota/symbols.hpp -- alphabet symbols, words, and exact distributions over words
//
// Alphabets mix plain symbols ("a") with structured tags produced by the
// augmentation constructions (pairs like ("a", "q0"), quintuples for the tape
// machine simulator).  A symbol is stored as the compact JSON encoding of its
// value: plain symbols as JSON strings, tags as JSON arrays whose entries are
// strings, integers, or null (null encodes an empty/erased component inside a
// tag).  Encoding equality is value equality, and the encoding doubles as the
// canonical ordering key, so all containers iterate deterministically.

#pragma once

#include <json.hpp>

#include "cota/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace cota {

// Canonical compact-JSON encoding of a symbol value.
using Sym = std::string;

// A word over some alphabet.  The empty word is the empty vector.
using Word = std::vector<Sym>;

inline Sym sym_from_json(const nlohmann::json& j) { return j.dump(); }
inline nlohmann::json sym_to_json(const Sym& s) { return nlohmann::json::parse(s); }

// Plain (string-valued) symbol from its raw text.
inline Sym sym_atom(const std::string& raw) { return nlohmann::json(raw).dump(); }

inline bool sym_is_atom(const Sym& s) { return !s.empty() && s.front() == '"'; }

// Raw text of a plain symbol; precondition: sym_is_atom(s).
inline std::string sym_raw(const Sym& s) { return nlohmann::json::parse(s).get<std::string>(); }

// Human-readable form: raw text for plain symbols, JSON text for tags.
inline std::string sym_display(const Sym& s) { return sym_is_atom(s) ? sym_raw(s) : s; }

nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

// Length-first order with per-position comparison by encoding; this is the
// "shortest first, then lexicographic" order used for enumeration output and
// smallest-counterexample reporting.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Exact distribution (or sub-distribution) over words, deterministically ordered.
using Distribution = std::map<Word, Rational, WordLess>;

// Sum of all mass in a distribution.
Rational total_mass(const Distribution& d);

// Result of a cap-bounded exhaustive enumeration: exact entries for everything
// the cap could reach, plus the mass of computations still alive at the cap.
// residual == 0 means the enumeration is exhaustive.
struct CappedDistribution {
  Distribution entries;
  Rational residual;
};

// Cap-bounded sum: `value` is exact iff `saturated` is false; when saturated,
// computations longer than the cap were cut off and `value` under-approximates.
struct CappedSum {
  Rational value;
  bool saturated = false;
};

}  // namespace cota
