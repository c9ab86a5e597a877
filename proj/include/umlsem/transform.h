#pragma once

// Diagram transformation rules and the bounded deduction checker.
//
// A diagram C is deduced from P at a scope when every snapshot of the scope
// satisfying P also satisfies C, i.e. M(P) ⊆ M(C). Refinement is the same
// inclusion read from the concrete side. Verdicts hold at the given scope
// only; a counterexample is conclusive.

#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <variant>
#include <vector>

#include "umlsem/enumerate.h"
#include "umlsem/semantics.h"
#include "umlsem/syntax.h"

namespace umlsem {

namespace rule {

struct AddClassifier {
  Name name;
  bool is_abstract = false;
  std::set<Name> attrs;
  std::set<ClassifierId> supers;
  bool operator==(const AddClassifier &) const = default;
};

struct EraseAssociation {
  Name assoc;
  bool operator==(const EraseAssociation &) const = default;
};

struct RenameAssociation {
  Name from;
  Name to;
  bool operator==(const RenameAssociation &) const = default;
};

struct WidenMultiplicity {
  Name assoc;
  Name end;
  Multiplicity multi;
  bool operator==(const WidenMultiplicity &) const = default;
};

struct NarrowMultiplicity {
  Name assoc;
  Name end;
  Multiplicity multi;
  bool operator==(const NarrowMultiplicity &) const = default;
};

struct RestrictEndToSubtype {
  Name assoc;
  Name end;
  ClassifierId sub;
  bool operator==(const RestrictEndToSubtype &) const = default;
};

struct EraseAttribute {
  ClassifierId classifier;
  Name attr;
  bool operator==(const EraseAttribute &) const = default;
};

struct MakeConcrete {
  ClassifierId classifier;
  bool operator==(const MakeConcrete &) const = default;
};

// Copies `source` under a fresh association name, keeping its end names.
// Ends may move to a strict subtype and multiplicities may widen.
struct IntroduceWeakenedAssociation {
  Name source;
  Name fresh;
  std::map<Name, ClassifierId> retargets;
  std::map<Name, Multiplicity> widenings;
  bool operator==(const IntroduceWeakenedAssociation &) const = default;
};

}  // namespace rule

using Rule = std::variant<rule::AddClassifier, rule::EraseAssociation,
                          rule::RenameAssociation, rule::WidenMultiplicity,
                          rule::NarrowMultiplicity, rule::RestrictEndToSubtype,
                          rule::EraseAttribute, rule::MakeConcrete,
                          rule::IntroduceWeakenedAssociation>;

enum class RuleKind {
  kAddClassifier,
  kEraseAssociation,
  kRenameAssociation,
  kWidenMultiplicity,
  kNarrowMultiplicity,
  kRestrictEndToSubtype,
  kEraseAttribute,
  kMakeConcrete,
  kIntroduceWeakenedAssociation,
};

RuleKind kind_of(const Rule & r);
std::string_view rule_kind_name(RuleKind kind);  // "ADD_CLASSIFIER", ...

struct ProofScript {
  std::vector<Rule> steps;
  bool operator==(const ProofScript &) const = default;
};

// Throws Error(kIllFormedModel) if `m` is ill-formed, kUnknownName,
// kSideConditionViolated, or kResultIllFormed.
StaticModel apply_rule(const Rule & r, const StaticModel & m);

// True when the rule's kind is deduction-sound for every model and scope in
// `mode`, so replay may skip the semantic check.
bool is_meta_sound(const Rule & r, Mode mode);

enum class Outcome { kHoldsAtScope, kFails };

std::string_view outcome_name(Outcome o);  // "HOLDS_AT_SCOPE" / "FAILS"

struct DeductionVerdict {
  Outcome outcome = Outcome::kHoldsAtScope;
  std::optional<Snapshot> counterexample;  // present iff kFails
  Scope scope;
  Mode mode = Mode::kStrictPaper;

  bool holds() const { return outcome == Outcome::kHoldsAtScope; }
};

// Compares both meaning sets over the union of the two models' frames.
// Throws Error(kIllFormedModel) or Error(kScopeTooLarge).
DeductionVerdict check_deduction(const StaticModel & premise,
                                 const StaticModel & conclusion, Scope scope,
                                 Mode mode,
                                 const EnumerationOptions & options = {});

DeductionVerdict check_refinement(const StaticModel & concrete,
                                  const StaticModel & abstract, Scope scope,
                                  Mode mode,
                                  const EnumerationOptions & options = {});

DeductionVerdict verify_rule_soundness(const Rule & r, const StaticModel & m,
                                       Scope scope, Mode mode,
                                       const EnumerationOptions & options = {});

enum class Strategy { kMeta, kBounded };
enum class Justification { kMetaSound, kCheckedAtScope };

std::string_view justification_name(Justification j);

struct ProofStep {
  Rule rule;
  StaticModel result;
  Justification justification;
  DeductionVerdict verdict;
};

struct ProofResult {
  std::vector<ProofStep> steps;
  bool goal_matched = false;
  Outcome overall = Outcome::kFails;
  StaticModel final_model;

  bool holds() const { return overall == Outcome::kHoldsAtScope; }
};

// Replays `script` from `start`. Under kMeta, whitelisted steps are
// META_SOUND and the rest are checked at scope; under kBounded every step
// is checked. Steps after a failing one are still applied. Application
// errors propagate with Error::step() set.
ProofResult run_proof(const ProofScript & script, const StaticModel & start,
                      const StaticModel & goal, Scope scope, Mode mode,
                      Strategy strategy, const EnumerationOptions & options = {});

}  // namespace umlsem
