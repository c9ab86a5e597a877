#pragma once

// Test-only: every rule instance worth trying on a small model. Callers
// keep the applicable ones (apply_rule does not throw).

#include <vector>

#include "support/random_models.h"
#include "umlsem/error.h"
#include "umlsem/transform.h"
#include "umlsem/wellformed.h"

namespace umlsem::testing {

inline const std::vector<Multiplicity> & multiplicity_pool()
{
  static const std::vector<Multiplicity> pool = {
      Multiplicity::any(),
      Multiplicity::between(0, 1),
      Multiplicity::exactly(1),
      Multiplicity::between(1, std::nullopt),
      Multiplicity::exactly(0),
      Multiplicity::between(1, 2),
      Multiplicity({{0, 0}, {2, std::nullopt}}),
  };
  return pool;
}

inline std::vector<Rule> candidate_rules(const StaticModel & m)
{
  std::vector<Rule> out;
  out.push_back(rule::AddClassifier{"N", false, {}, {}});
  out.push_back(rule::AddClassifier{"N", true, {"b"}, {}});
  for (const ClassifierId & c : m.classifiers) {
    out.push_back(rule::AddClassifier{"N", false, {}, {c}});
    out.push_back(rule::AddClassifier{"N", false, {"b"}, {c}});
    for (const Name & a : m.declared_attributes(c)) out.push_back(rule::EraseAttribute{c, a});
    if (m.abstract.count(c)) out.push_back(rule::MakeConcrete{c});
  }
  for (const Association & a : m.associations) {
    out.push_back(rule::EraseAssociation{a.name});
    out.push_back(rule::RenameAssociation{a.name, "z"});
    out.push_back(rule::IntroduceWeakenedAssociation{a.name, "w", {}, {}});
    for (const AssociationEnd & e : a.ends) {
      for (const Multiplicity & mu : multiplicity_pool()) {
        out.push_back(rule::WidenMultiplicity{a.name, e.name, mu});
        out.push_back(rule::NarrowMultiplicity{a.name, e.name, mu});
        out.push_back(rule::IntroduceWeakenedAssociation{a.name, "w", {}, {{e.name, mu}}});
      }
      for (const ClassifierId & sub : m.classifiers) {
        out.push_back(rule::RestrictEndToSubtype{a.name, e.name, sub});
        out.push_back(rule::IntroduceWeakenedAssociation{a.name, "w", {{e.name, sub}}, {}});
      }
    }
  }
  return out;
}

// Candidates whose application succeeds, paired with the result.
inline std::vector<std::pair<Rule, StaticModel>> applicable_rules(const StaticModel & m)
{
  std::vector<std::pair<Rule, StaticModel>> out;
  for (Rule & r : candidate_rules(m)) {
    try {
      StaticModel next = apply_rule(r, m);
      out.emplace_back(std::move(r), std::move(next));
    } catch (const Error &) {
    }
  }
  return out;
}

}  // namespace umlsem::testing
