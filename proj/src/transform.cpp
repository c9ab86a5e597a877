#include "umlsem/transform.h"

#include <algorithm>

#include "umlsem/error.h"
#include "umlsem/wellformed.h"

namespace umlsem {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(ErrorCode code, RuleKind kind, const std::string & subject,
                       const std::string & what)
{
  throw Error(code,
              std::string(rule_kind_name(kind)) + ": " + what, subject);
}

Association take_association(StaticModel & m, const Name & assoc, RuleKind kind)
{
  for (auto it = m.associations.begin(); it != m.associations.end(); ++it) {
    if (it->name == assoc) {
      return std::move(m.associations.extract(it).value());
    }
  }
  fail(ErrorCode::kUnknownName, kind, assoc.str(),
       "no association named '" + assoc.str() + "'");
}

AssociationEnd & end_of(Association & a, const Name & end, RuleKind kind)
{
  for (AssociationEnd & e : a.ends) {
    if (e.name == end) return e;
  }
  fail(ErrorCode::kUnknownName, kind, a.name.str() + "." + end.str(),
       "association '" + a.name.str() + "' has no end '" + end.str() + "'");
}

void require_classifier(const StaticModel & m, const ClassifierId & c, RuleKind kind)
{
  if (!m.has_classifier(c)) {
    fail(ErrorCode::kUnknownName, kind, c.str(),
         "no classifier named '" + c.str() + "'");
  }
}

void require_unused_association(const StaticModel & m, const Name & n, RuleKind kind)
{
  if (!m.find_associations(n).empty()) {
    fail(ErrorCode::kSideConditionViolated, kind, n.str(),
         "association name '" + n.str() + "' is already in use");
  }
}

void require_strict_subtype(const StaticModel & m, const ClassifierId & sub,
                            const ClassifierId & of, RuleKind kind)
{
  require_classifier(m, sub, kind);
  if (sub == of || !instance_classifiers(m, of).count(sub)) {
    fail(ErrorCode::kSideConditionViolated, kind, sub.str(),
         "'" + sub.str() + "' is not a strict subtype of '" + of.str() + "'");
  }
}

StaticModel apply(const rule::AddClassifier & r, StaticModel m)
{
  const RuleKind kind = RuleKind::kAddClassifier;
  if (m.has_classifier(r.name)) {
    fail(ErrorCode::kSideConditionViolated, kind, r.name.str(),
         "classifier '" + r.name.str() + "' already exists");
  }
  for (const ClassifierId & s : r.supers) require_classifier(m, s, kind);
  m.add_classifier(r.name, r.is_abstract, r.attrs);
  for (const ClassifierId & s : r.supers) m.add_generalization(s, r.name);
  return m;
}

StaticModel apply(const rule::EraseAssociation & r, StaticModel m)
{
  take_association(m, r.assoc, RuleKind::kEraseAssociation);
  return m;
}

StaticModel apply(const rule::RenameAssociation & r, StaticModel m)
{
  const RuleKind kind = RuleKind::kRenameAssociation;
  Association a = take_association(m, r.from, kind);
  require_unused_association(m, r.to, kind);
  a.name = r.to;
  m.add_association(std::move(a));
  return m;
}

StaticModel apply(const rule::WidenMultiplicity & r, StaticModel m)
{
  const RuleKind kind = RuleKind::kWidenMultiplicity;
  Association a = take_association(m, r.assoc, kind);
  AssociationEnd & e = end_of(a, r.end, kind);
  if (!r.multi.includes(e.multi)) {
    fail(ErrorCode::kSideConditionViolated, kind, r.assoc.str() + "." + r.end.str(),
         "[" + r.multi.to_string() + "] does not include [" +
             e.multi.to_string() + "]");
  }
  e.multi = r.multi;
  m.add_association(std::move(a));
  return m;
}

StaticModel apply(const rule::NarrowMultiplicity & r, StaticModel m)
{
  const RuleKind kind = RuleKind::kNarrowMultiplicity;
  Association a = take_association(m, r.assoc, kind);
  AssociationEnd & e = end_of(a, r.end, kind);
  if (!e.multi.includes(r.multi)) {
    fail(ErrorCode::kSideConditionViolated, kind, r.assoc.str() + "." + r.end.str(),
         "[" + r.multi.to_string() + "] is not included in [" +
             e.multi.to_string() + "]");
  }
  e.multi = r.multi;
  m.add_association(std::move(a));
  return m;
}

StaticModel apply(const rule::RestrictEndToSubtype & r, StaticModel m)
{
  const RuleKind kind = RuleKind::kRestrictEndToSubtype;
  Association a = take_association(m, r.assoc, kind);
  AssociationEnd & e = end_of(a, r.end, kind);
  require_strict_subtype(m, r.sub, e.classifier, kind);
  e.classifier = r.sub;
  m.add_association(std::move(a));
  return m;
}

StaticModel apply(const rule::EraseAttribute & r, StaticModel m)
{
  const RuleKind kind = RuleKind::kEraseAttribute;
  require_classifier(m, r.classifier, kind);
  auto & declared = m.attributes[r.classifier];
  if (!declared.erase(r.attr)) {
    fail(ErrorCode::kUnknownName, kind, r.classifier.str() + "." + r.attr.str(),
         "'" + r.classifier.str() + "' declares no attribute '" + r.attr.str() +
             "'");
  }
  return m;
}

StaticModel apply(const rule::MakeConcrete & r, StaticModel m)
{
  const RuleKind kind = RuleKind::kMakeConcrete;
  require_classifier(m, r.classifier, kind);
  if (!m.abstract.erase(r.classifier)) {
    fail(ErrorCode::kSideConditionViolated, kind, r.classifier.str(),
         "'" + r.classifier.str() + "' is not abstract");
  }
  return m;
}

StaticModel apply(const rule::IntroduceWeakenedAssociation & r, StaticModel m)
{
  const RuleKind kind = RuleKind::kIntroduceWeakenedAssociation;
  const auto found = m.find_associations(r.source);
  if (found.empty()) {
    fail(ErrorCode::kUnknownName, kind, r.source.str(),
         "no association named '" + r.source.str() + "'");
  }
  require_unused_association(m, r.fresh, kind);
  Association copy = *found.front();
  copy.name = r.fresh;
  for (const auto & [end, sub] : r.retargets) {
    AssociationEnd & e = end_of(copy, end, kind);
    require_strict_subtype(m, sub, e.classifier, kind);
    e.classifier = sub;
  }
  for (const auto & [end, multi] : r.widenings) {
    AssociationEnd & e = end_of(copy, end, kind);
    if (!multi.includes(e.multi)) {
      fail(ErrorCode::kSideConditionViolated, kind, r.source.str() + "." + end.str(),
           "[" + multi.to_string() + "] does not include [" +
               e.multi.to_string() + "]");
    }
    e.multi = multi;
  }
  m.add_association(std::move(copy));
  return m;
}

}  // namespace

RuleKind kind_of(const Rule & r)
{
  return static_cast<RuleKind>(r.index());
}

std::string_view rule_kind_name(RuleKind kind)
{
  switch (kind) {
    case RuleKind::kAddClassifier: return "ADD_CLASSIFIER";
    case RuleKind::kEraseAssociation: return "ERASE_ASSOCIATION";
    case RuleKind::kRenameAssociation: return "RENAME_ASSOCIATION";
    case RuleKind::kWidenMultiplicity: return "WIDEN_MULTIPLICITY";
    case RuleKind::kNarrowMultiplicity: return "NARROW_MULTIPLICITY";
    case RuleKind::kRestrictEndToSubtype: return "RESTRICT_END_TO_SUBTYPE";
    case RuleKind::kEraseAttribute: return "ERASE_ATTRIBUTE";
    case RuleKind::kMakeConcrete: return "MAKE_CONCRETE";
    case RuleKind::kIntroduceWeakenedAssociation:
      return "INTRODUCE_WEAKENED_ASSOCIATION";
  }
  return "UNKNOWN_RULE";
}

std::string_view outcome_name(Outcome o)
{
  return o == Outcome::kHoldsAtScope ? "HOLDS_AT_SCOPE" : "FAILS";
}

std::string_view justification_name(Justification j)
{
  return j == Justification::kMetaSound ? "META_SOUND" : "CHECKED_AT_SCOPE";
}

StaticModel apply_rule(const Rule & r, const StaticModel & m)
{
  const std::string kind(rule_kind_name(kind_of(r)));
  require_well_formed(m, kind + " input");
  StaticModel out = std::visit([&](const auto & x) { return apply(x, m); }, r);
  const WellFormednessReport report = well_formed(out);
  if (!report.ok()) {
    const WfViolation & v = report.violations.front();
    throw Error(ErrorCode::kResultIllFormed,
                kind + ": result violates " + std::string(wf_rule_name(v.rule)) +
                    ": " + v.message,
                v.subject.empty() ? std::string() : v.subject.front());
  }
  return out;
}

bool is_meta_sound(const Rule & r, Mode mode)
{
  return std::visit(
      overloaded{
          [](const rule::NarrowMultiplicity &) { return false; },
          // Target typing on the opposite end makes both retargeting rules
          // strengthen the model.
          [&](const rule::RestrictEndToSubtype &) {
            return mode == Mode::kStrictPaper;
          },
          [&](const rule::IntroduceWeakenedAssociation & x) {
            return mode == Mode::kStrictPaper || x.retargets.empty();
          },
          [](const auto &) { return true; },
      },
      r);
}

DeductionVerdict check_deduction(const StaticModel & premise,
                                 const StaticModel & conclusion, Scope scope,
                                 Mode mode, const EnumerationOptions & options)
{
  require_well_formed(premise, "premise");
  require_well_formed(conclusion, "conclusion");
  DeductionVerdict verdict;
  verdict.scope = scope;
  verdict.mode = mode;
  verdict.counterexample = first_counterexample(
      premise, conclusion, joint_frame(premise, conclusion), scope, mode, options);
  verdict.outcome =
      verdict.counterexample ? Outcome::kFails : Outcome::kHoldsAtScope;
  return verdict;
}

DeductionVerdict check_refinement(const StaticModel & concrete,
                                  const StaticModel & abstract, Scope scope,
                                  Mode mode, const EnumerationOptions & options)
{
  return check_deduction(concrete, abstract, scope, mode, options);
}

DeductionVerdict verify_rule_soundness(const Rule & r, const StaticModel & m,
                                       Scope scope, Mode mode,
                                       const EnumerationOptions & options)
{
  return check_deduction(m, apply_rule(r, m), scope, mode, options);
}

ProofResult run_proof(const ProofScript & script, const StaticModel & start,
                      const StaticModel & goal, Scope scope, Mode mode,
                      Strategy strategy, const EnumerationOptions & options)
{
  if (script.steps.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "proof script has no steps");
  }
  require_well_formed(start, "start");

  ProofResult result;
  bool all_hold = true;
  StaticModel current = start;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const Rule & r = script.steps[i];
    ProofStep step{r, {}, Justification::kCheckedAtScope, {}};
    try {
      step.result = apply_rule(r, current);
    } catch (Error & e) {
      e.set_step(i);
      throw;
    }
    if (strategy == Strategy::kMeta && is_meta_sound(r, mode)) {
      step.justification = Justification::kMetaSound;
      step.verdict.scope = scope;
      step.verdict.mode = mode;
    } else {
      step.verdict = check_deduction(current, step.result, scope, mode, options);
    }
    all_hold = all_hold && step.verdict.holds();
    current = step.result;
    result.steps.push_back(std::move(step));
  }
  result.goal_matched = same_diagram(current, goal);
  result.final_model = std::move(current);
  result.overall = all_hold && result.goal_matched ? Outcome::kHoldsAtScope
                                                   : Outcome::kFails;
  return result;
}

}  // namespace umlsem
