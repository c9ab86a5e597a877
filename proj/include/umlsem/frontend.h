#pragma once

// Textual DSL for models (.smdl), snapshots (.snap) and proof scripts
// (.prf). See docs/grammar.md.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umlsem/semantics.h"
#include "umlsem/syntax.h"
#include "umlsem/transform.h"

namespace umlsem {

struct SourceError {
  enum class Kind { kLex, kParse, kResolve };

  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  std::string message;
  Kind kind = Kind::kParse;

  std::string to_string() const;  // "3:14: parse error: ..."
};

std::string_view source_error_kind_name(SourceError::Kind kind);

template <class T>
struct Parsed {
  std::optional<T> value;
  std::vector<SourceError> errors;

  bool ok() const { return value.has_value(); }
};

// Does not run well_formed(); callers do.
Parsed<StaticModel> parse_model(std::string_view text);

// Classifier names resolve against `model`. Object names map to object
// values by declaration order, string literals to data values by first
// occurrence.
Parsed<Snapshot> parse_snapshot(std::string_view text, const StaticModel & model);

Parsed<ProofScript> parse_proof(std::string_view text);

std::string print_model(const StaticModel & m);
std::string print_snapshot(const Snapshot & s);
std::string print_rule(const Rule & r);
std::string print_proof(const ProofScript & p);

}  // namespace umlsem
