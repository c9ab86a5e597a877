#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umlsem/syntax.h"

namespace umlsem {

enum class WfRule { WF1 = 1, WF2, WF3, WF4, WF5, WF6, WF7, WF8 };

std::string_view wf_rule_name(WfRule rule);

struct WfViolation {
  WfRule rule;
  std::vector<std::string> subject;
  std::string message;

  auto operator<=>(const WfViolation &) const = default;
  bool operator==(const WfViolation &) const = default;
};

struct WellFormednessReport {
  std::vector<WfViolation> violations;  // sorted

  bool ok() const { return violations.empty(); }
  std::set<WfRule> rules() const;
};

using ClassifierPair = std::pair<ClassifierId, ClassifierId>;

// Transitive, irreflexive-by-construction closure of supertype_of as
// (super, sub) pairs. Cycles show up as (c, c) pairs.
std::set<ClassifierPair> supertype_closure(const StaticModel & model);

WellFormednessReport well_formed(const StaticModel & model);

// Declared attributes of `c` and of all its ancestors.
// Throws Error(kUnknownClassifier).
std::set<Name> all_attributes(const StaticModel & model, const ClassifierId & c);

// `c` together with all its descendants: the classifiers whose objects are
// instances of `c`. Throws Error(kUnknownClassifier).
std::set<ClassifierId> instance_classifiers(const StaticModel & model,
                                            const ClassifierId & c);

// Throws Error(kIllFormedModel) listing the violated rules.
void require_well_formed(const StaticModel & model, std::string_view what);

}  // namespace umlsem
