// cota/error.hpp -- structured errors with machine-readable detail records

#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace cota {

// Every failure surfaced by the library carries a stable error code plus a JSON
// detail record, so callers (the CLI in particular) can emit machine-readable
// diagnostics.  Codes in use:
//   "parse"         -- malformed input (JSON shape, weight syntax, ...)
//   "validate"      -- a machine violates its structural or normalization rules
//   "precondition"  -- an operation's documented precondition does not hold
//   "divergent"     -- epsilon-cycle mass does not converge (removal impossible)
//   "truncation"    -- a cap was exhausted before the operation could finish
//   "guard"         -- a growth guard (e.g. state-space closure bound) tripped
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, nlohmann::json detail = nlohmann::json::object())
      : std::runtime_error(message), code_(std::move(code)), detail_(std::move(detail)) {}

  const std::string& code() const { return code_; }
  const nlohmann::json& detail() const { return detail_; }

  // The record printed by the CLI on failure.
  nlohmann::json record() const {
    return nlohmann::json{{"error", code_}, {"message", what()}, {"detail", detail_}};
  }

 private:
  std::string code_;
  nlohmann::json detail_;
};

}  // namespace cota
