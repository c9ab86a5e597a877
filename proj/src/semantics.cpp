#include "umlsem/semantics.h"

#include "umlsem/error.h"
#include "umlsem/wellformed.h"

namespace umlsem {

std::string value_label(const Value & v)
{
  return (v.is_object() ? "o" : "d") + std::to_string(v.index);
}

std::set<Value> Snapshot::object_ids() const
{
  std::set<Value> ids;
  for (const auto & [id, state] : objects) ids.insert(id);
  return ids;
}

std::vector<std::string> snapshot_problems(const Snapshot & s)
{
  std::vector<std::string> problems;
  for (const auto & [id, state] : s.objects) {
    if (!id.is_object()) {
      problems.push_back("data value " + value_label(id) + " used as object id");
    }
    for (const auto & [name, values] : state.attributes) {
      for (const Value & v : values) {
        if (v.is_object() && !s.objects.count(v)) {
          problems.push_back("object " + value_label(id) + " refers to " +
                             value_label(v) + " via '" + name.str() +
                             "', which is not in the snapshot");
        }
      }
    }
  }
  return problems;
}

std::string_view mode_name(Mode mode)
{
  return mode == Mode::kTyped ? "typed" : "strict-paper";
}

std::string_view clause_name(Clause c)
{
  switch (c) {
    case Clause::S1: return "S1";
    case Clause::S2: return "S2";
    case Clause::S3: return "S3";
    case Clause::S4: return "S4";
    case Clause::S5: return "S5";
  }
  return "S?";
}

std::set<Clause> SatisfactionVerdict::clauses() const
{
  std::set<Clause> out;
  for (const ClauseViolation & v : violations) out.insert(v.clause);
  return out;
}

LinkMap derive_links(const Snapshot & s)
{
  LinkMap links;
  for (const auto & [id, state] : s.objects) {
    for (const auto & [name, values] : state.attributes) {
      for (const Value & v : values) {
        if (v.is_object()) links[name].emplace(id, v);
      }
    }
  }
  return links;
}

std::set<Value> extent(const StaticModel & model, const Snapshot & s,
                       const ClassifierId & c)
{
  const std::set<ClassifierId> kinds = instance_classifiers(model, c);
  std::set<Value> out;
  for (const auto & [id, state] : s.objects) {
    if (kinds.count(state.classifier)) out.insert(id);
  }
  return out;
}

ModelIndex::ModelIndex(const StaticModel & model) : model_(&model)
{
  require_well_formed(model, "semantic");
  for (const ClassifierId & c : model.classifiers) {
    instance_classifiers_[c] = instance_classifiers(model, c);
    all_attrs_[c] = umlsem::all_attributes(model, c);
    ends_at_[c];
  }
  for (const Association & a : model.associations) {
    for (std::size_t i = 0; i < 2; ++i) {
      const AssociationEnd & e = a.ends[i];
      for (const ClassifierId & x : instance_classifiers_[e.classifier]) {
        ends_at_[x].push_back({&a, &e, &a.ends[1 - i]});
      }
    }
  }
}

bool ModelIndex::is_abstract(const ClassifierId & c) const
{
  return model_->abstract.count(c) != 0;
}

bool ModelIndex::instance_of(const ClassifierId & x, const ClassifierId & c) const
{
  auto it = instance_classifiers_.find(c);
  return it != instance_classifiers_.end() && it->second.count(x);
}

const std::set<Name> & ModelIndex::all_attributes(const ClassifierId & c) const
{
  return all_attrs_.at(c);
}

const std::vector<ModelIndex::EndConstraint> & ModelIndex::ends_at(
    const ClassifierId & c) const
{
  return ends_at_.at(c);
}

bool check_object(const ModelIndex & index, Mode mode, const Value & id,
                  const ObjectState & state, const ClassifierLookup & lookup,
                  std::vector<ClauseViolation> * out)
{
  bool ok = true;
  // Returns true when the caller should stop (first-violation mode).
  auto fail = [&](Clause clause, std::string message) {
    ok = false;
    if (out) out->push_back({clause, value_label(id), std::move(message)});
    return out == nullptr;
  };

  const ClassifierId & c = state.classifier;
  if (!index.knows(c)) {
    fail(Clause::S1, "classifier '" + c.str() + "' is not in the model");
    return false;
  }
  if (index.is_abstract(c)) {
    if (fail(Clause::S1, "classifier '" + c.str() + "' is abstract")) return false;
  }

  for (const Name & a : index.all_attributes(c)) {
    if (!state.has_attribute(a)) {
      if (fail(Clause::S2, "missing attribute '" + a.str() + "' required by '" +
                               c.str() + "'")) {
        return false;
      }
    }
  }

  for (const ModelIndex::EndConstraint & ec : index.ends_at(c)) {
    const Name & end = ec.end->name;
    auto slot = state.attributes.find(end);
    if (slot == state.attributes.end()) {
      if (fail(Clause::S3, "missing end attribute '" + end.str() +
                               "' of association '" + ec.association->name.str() +
                               "'")) {
        return false;
      }
      continue;
    }
    std::uint64_t count = 0;
    for (const Value & v : slot->second) count += v.is_object();
    if (!ec.end->multi.contains(count)) {
      if (fail(Clause::S3, std::to_string(count) + " link(s) under '" +
                               end.str() + "' outside [" +
                               ec.end->multi.to_string() + "]")) {
        return false;
      }
    }
    if (mode != Mode::kTyped) continue;
    for (const Value & v : slot->second) {
      if (!v.is_object()) continue;
      const ClassifierId * target = lookup(v);
      if (!target || !index.instance_of(*target, ec.opposite->classifier)) {
        if (fail(Clause::S5,
                 "link target " + value_label(v) + " under '" + end.str() +
                     "' is not an instance of '" +
                     ec.opposite->classifier.str() + "'")) {
          return false;
        }
      }
    }
  }

  for (const Generalization & g : index.model().supertype_of) {
    if (index.instance_of(c, g.sub) && !index.instance_of(c, g.super)) {
      if (fail(Clause::S4, "instance of '" + g.sub.str() +
                               "' outside the extent of '" + g.super.str() +
                               "'")) {
        return false;
      }
    }
  }
  return ok;
}

SatisfactionVerdict satisfies(const ModelIndex & index, const Snapshot & s,
                              Mode mode)
{
  const ClassifierLookup lookup = [&s](const Value & v) -> const ClassifierId * {
    auto it = s.objects.find(v);
    return it == s.objects.end() ? nullptr : &it->second.classifier;
  };
  SatisfactionVerdict verdict;
  for (const auto & [id, state] : s.objects) {
    check_object(index, mode, id, state, lookup, &verdict.violations);
  }
  return verdict;
}

SatisfactionVerdict satisfies(const StaticModel & model, const Snapshot & s,
                              Mode mode)
{
  return satisfies(ModelIndex(model), s, mode);
}

}  // namespace umlsem
