#include "umlsem/wellformed.h"

#include <algorithm>
#include <map>

#include "umlsem/error.h"

namespace umlsem {

std::string_view wf_rule_name(WfRule rule)
{
  switch (rule) {
    case WfRule::WF1: return "WF1";
    case WfRule::WF2: return "WF2";
    case WfRule::WF3: return "WF3";
    case WfRule::WF4: return "WF4";
    case WfRule::WF5: return "WF5";
    case WfRule::WF6: return "WF6";
    case WfRule::WF7: return "WF7";
    case WfRule::WF8: return "WF8";
  }
  return "WF?";
}

std::set<WfRule> WellFormednessReport::rules() const
{
  std::set<WfRule> out;
  for (const WfViolation & v : violations) out.insert(v.rule);
  return out;
}

std::set<ClassifierPair> supertype_closure(const StaticModel & model)
{
  std::set<ClassifierPair> closure;
  for (const Generalization & g : model.supertype_of) {
    closure.emplace(g.super, g.sub);
  }
  // Naive fixpoint; hierarchies are small.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ClassifierPair> added;
    for (const auto & [a, b] : closure) {
      auto it = closure.lower_bound({b, Name()});
      for (; it != closure.end() && it->first == b; ++it) {
        if (!closure.count({a, it->second})) added.emplace_back(a, it->second);
      }
    }
    for (auto & p : added) {
      changed |= closure.insert(std::move(p)).second;
    }
  }
  return closure;
}

namespace {

std::set<ClassifierId> ancestors(const std::set<ClassifierPair> & closure,
                                 const ClassifierId & c)
{
  std::set<ClassifierId> out;
  for (const auto & [super, sub] : closure) {
    if (sub == c) out.insert(super);
  }
  return out;
}

std::set<ClassifierId> descendants(const std::set<ClassifierPair> & closure,
                                   const ClassifierId & c)
{
  std::set<ClassifierId> out;
  auto it = closure.lower_bound({c, Name()});
  for (; it != closure.end() && it->first == c; ++it) out.insert(it->second);
  return out;
}

std::set<Name> attributes_with(const StaticModel & model,
                               const std::set<ClassifierPair> & closure,
                               const ClassifierId & c)
{
  std::set<Name> out = model.declared_attributes(c);
  for (const ClassifierId & a : ancestors(closure, c)) {
    const auto & declared = model.declared_attributes(a);
    out.insert(declared.begin(), declared.end());
  }
  return out;
}

void require_classifier(const StaticModel & model, const ClassifierId & c)
{
  if (!model.has_classifier(c)) {
    throw Error(ErrorCode::kUnknownClassifier,
                "unknown classifier '" + c.str() + "'", c.str());
  }
}

}  // namespace

std::set<Name> all_attributes(const StaticModel & model, const ClassifierId & c)
{
  require_classifier(model, c);
  return attributes_with(model, supertype_closure(model), c);
}

std::set<ClassifierId> instance_classifiers(const StaticModel & model,
                                            const ClassifierId & c)
{
  require_classifier(model, c);
  std::set<ClassifierId> out = descendants(supertype_closure(model), c);
  out.insert(c);
  return out;
}

WellFormednessReport well_formed(const StaticModel & model)
{
  WellFormednessReport report;
  auto add = [&](WfRule rule, std::vector<std::string> subject, std::string msg) {
    report.violations.push_back({rule, std::move(subject), std::move(msg)});
  };

  for (const ClassifierId & c : model.abstract) {
    if (!model.has_classifier(c)) {
      add(WfRule::WF1, {c.str()}, "abstract classifier '" + c.str() +
                                      "' is not a declared classifier");
    }
  }

  for (const Generalization & g : model.supertype_of) {
    for (const ClassifierId * c : {&g.super, &g.sub}) {
      if (!model.has_classifier(*c)) {
        add(WfRule::WF2, {g.super.str(), g.sub.str()},
            "generalization " + g.super.str() + " > " + g.sub.str() +
                " relates unknown classifier '" + c->str() + "'");
      }
    }
  }
  const std::set<ClassifierPair> closure = supertype_closure(model);
  for (const auto & [super, sub] : closure) {
    if (super == sub) {
      add(WfRule::WF2, {super.str()},
          "generalization cycle through '" + super.str() + "'");
    }
  }

  for (const Generalization & g : model.supertype_of) {
    const auto super_attrs = attributes_with(model, closure, g.super);
    const auto sub_attrs = attributes_with(model, closure, g.sub);
    for (const Name & a : super_attrs) {
      if (!sub_attrs.count(a)) {
        add(WfRule::WF3, {g.super.str(), g.sub.str(), a.str()},
            "attribute '" + a.str() + "' of '" + g.super.str() +
                "' missing from subtype '" + g.sub.str() + "'");
      }
    }
  }

  std::map<Name, int> assoc_names;
  for (const Association & a : model.associations) ++assoc_names[a.name];
  for (const auto & [name, count] : assoc_names) {
    if (count > 1) {
      add(WfRule::WF4, {name.str()},
          "association name '" + name.str() + "' used " +
              std::to_string(count) + " times");
    }
  }

  for (const auto & [c, names] : model.attributes) {
    if (!model.has_classifier(c) && !names.empty()) {
      add(WfRule::WF5, {c.str()},
          "attributes declared for unknown classifier '" + c.str() + "'");
    }
  }

  for (const Association & a : model.associations) {
    if (a.ends.size() != 2) {
      add(WfRule::WF6, {a.name.str()},
          "association '" + a.name.str() + "' has " +
              std::to_string(a.ends.size()) + " ends, expected 2");
    }
    for (std::size_t i = 0; i < a.ends.size(); ++i) {
      const AssociationEnd & e = a.ends[i];
      for (std::size_t j = i + 1; j < a.ends.size(); ++j) {
        if (a.ends[j].name == e.name) {
          add(WfRule::WF8, {a.name.str(), e.name.str()},
              "association '" + a.name.str() + "' repeats end name '" +
                  e.name.str() + "'");
        }
      }
      if (!model.has_classifier(e.classifier)) {
        add(WfRule::WF5, {a.name.str(), e.name.str(), e.classifier.str()},
            "end '" + e.name.str() + "' of '" + a.name.str() +
                "' references unknown classifier '" + e.classifier.str() + "'");
        continue;
      }
      std::set<ClassifierId> reach = descendants(closure, e.classifier);
      reach.insert(e.classifier);
      for (const ClassifierId & d : reach) {
        if (attributes_with(model, closure, d).count(e.name)) {
          add(WfRule::WF7, {a.name.str(), e.name.str(), d.str()},
              "end name '" + e.name.str() + "' collides with an attribute of '" +
                  d.str() + "'");
        }
      }
    }
  }

  std::sort(report.violations.begin(), report.violations.end());
  report.violations.erase(
      std::unique(report.violations.begin(), report.violations.end()),
      report.violations.end());
  return report;
}

void require_well_formed(const StaticModel & model, std::string_view what)
{
  const WellFormednessReport report = well_formed(model);
  if (report.ok()) return;
  std::string rules;
  for (WfRule r : report.rules()) {
    if (!rules.empty()) rules += ",";
    rules += wf_rule_name(r);
  }
  throw Error(ErrorCode::kIllFormedModel,
              std::string(what) + " model '" + model.name.str() +
                  "' is ill-formed (" + rules + ")",
              model.name.str());
}

}  // namespace umlsem
