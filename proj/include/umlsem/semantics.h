#pragma once

// Semantic domain: values, objects and snapshots, plus the satisfaction
// check relating a snapshot to a static model.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umlsem/syntax.h"

namespace umlsem {

enum class ValueKind : std::uint8_t { kObject, kData };

// Object identities and data values are drawn from disjoint pools.
struct Value {
  ValueKind kind = ValueKind::kObject;
  std::uint32_t index = 0;

  static Value object(std::uint32_t i) { return {ValueKind::kObject, i}; }
  static Value data(std::uint32_t i) { return {ValueKind::kData, i}; }
  bool is_object() const { return kind == ValueKind::kObject; }

  auto operator<=>(const Value &) const = default;
  bool operator==(const Value &) const = default;
};

// Attribute slots: a name is present iff it is a key, even when its value
// set is empty (an association end with zero links). The pairs
// {(n, v) | v in attributes[n]} form the attribute relation.
struct ObjectState {
  ClassifierId classifier;
  std::map<Name, std::set<Value>> attributes;

  bool has_attribute(const Name & n) const { return attributes.count(n) != 0; }

  auto operator<=>(const ObjectState &) const = default;
  bool operator==(const ObjectState &) const = default;
};

// One system state. The map key is the object's identity; the set of object
// ids in use is exactly the key set. operator<=> is the canonical order.
struct Snapshot {
  std::map<Value, ObjectState> objects;

  std::set<Value> object_ids() const;

  auto operator<=>(const Snapshot &) const = default;
  bool operator==(const Snapshot &) const = default;
};

// "o3" for object 3, "d0" for data value 0.
std::string value_label(const Value & v);

// Structural problems: non-OBJECT keys, dangling object references.
std::vector<std::string> snapshot_problems(const Snapshot & s);

struct Scope {
  std::uint32_t objects = 2;  // size of the object identity pool
  std::uint32_t data = 1;     // number of distinct data values

  auto operator<=>(const Scope &) const = default;
  bool operator==(const Scope &) const = default;
};

enum class Mode {
  kStrictPaper,  // untyped link targets
  kTyped,        // link targets must lie in the opposite end's extent
};

std::string_view mode_name(Mode mode);  // "strict-paper" / "typed"

enum class Clause { S1 = 1, S2, S3, S4, S5 };

std::string_view clause_name(Clause c);

struct ClauseViolation {
  Clause clause;
  std::string subject;
  std::string message;

  auto operator<=>(const ClauseViolation &) const = default;
  bool operator==(const ClauseViolation &) const = default;
};

struct SatisfactionVerdict {
  std::vector<ClauseViolation> violations;

  bool satisfied() const { return violations.empty(); }
  std::set<Clause> clauses() const;
};

using LinkMap = std::map<Name, std::set<std::pair<Value, Value>>>;

// links(n) = {(o1, o2) | o2 an OBJECT value under n in objects(o1)}.
LinkMap derive_links(const Snapshot & s);

// Objects whose classifier is `c` or one of its descendants.
// Throws Error(kUnknownClassifier).
std::set<Value> extent(const StaticModel & model, const Snapshot & s,
                       const ClassifierId & c);

// Precomputed hierarchy facts for a well-formed model. Shared by the
// satisfaction check and the enumerator. Holds pointers into `model`, which
// must outlive the index.
class ModelIndex {
 public:
  struct EndConstraint {
    const Association * association;
    const AssociationEnd * end;
    const AssociationEnd * opposite;
  };

  // Throws Error(kIllFormedModel).
  explicit ModelIndex(const StaticModel & model);

  const StaticModel & model() const { return *model_; }
  bool knows(const ClassifierId & c) const { return all_attrs_.count(c) != 0; }
  bool is_abstract(const ClassifierId & c) const;
  // instance_of(x, c): objects of classifier x are instances of c.
  bool instance_of(const ClassifierId & x, const ClassifierId & c) const;
  const std::set<Name> & all_attributes(const ClassifierId & c) const;
  // Ends whose classifier has objects of `c` in its extent.
  const std::vector<EndConstraint> & ends_at(const ClassifierId & c) const;

 private:
  const StaticModel * model_;
  std::map<ClassifierId, std::set<ClassifierId>> instance_classifiers_;
  std::map<ClassifierId, std::set<Name>> all_attrs_;
  std::map<ClassifierId, std::vector<EndConstraint>> ends_at_;
};

// Looks up the classifier of a live object; nullptr when not live.
using ClassifierLookup = std::function<const ClassifierId *(const Value &)>;

// Evaluates every clause about the single object `id`. Appends to `out`
// when non-null; with `out == nullptr` returns at the first violation.
// Returns true iff no clause is violated.
bool check_object(const ModelIndex & index, Mode mode, const Value & id,
                  const ObjectState & state, const ClassifierLookup & lookup,
                  std::vector<ClauseViolation> * out);

// Full clause-by-clause check. Throws Error(kIllFormedModel).
SatisfactionVerdict satisfies(const StaticModel & model, const Snapshot & s,
                              Mode mode);
SatisfactionVerdict satisfies(const ModelIndex & index, const Snapshot & s,
                              Mode mode);

}  // namespace umlsem
