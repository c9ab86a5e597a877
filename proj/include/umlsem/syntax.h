#pragma once

// Abstract syntax of static class diagrams: classifiers, attributes,
// binary associations with multiplicities, and generalization.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace umlsem {

// Identifier: a letter followed by letters, digits or underscores.
class Name {
 public:
  Name() = default;
  // Throws Error(kInvalidArgument) if `text` is not a valid identifier.
  Name(std::string text);
  Name(const char * text) : Name(std::string(text)) {}

  static bool is_valid(std::string_view text);

  const std::string & str() const { return text_; }

  auto operator<=>(const Name &) const = default;
  bool operator==(const Name &) const = default;

 private:
  std::string text_;
};

// A classifier is identified by its name.
using ClassifierId = Name;

// Permitted link counts: a finite union of ranges over the naturals, kept
// sorted, disjoint and non-adjacent. `hi == nullopt` means unbounded.
class Multiplicity {
 public:
  struct Range {
    std::uint32_t lo = 0;
    std::optional<std::uint32_t> hi;

    auto operator<=>(const Range &) const = default;
    bool operator==(const Range &) const = default;
  };

  Multiplicity() = delete;
  // Normalizes into canonical form. Throws Error(kInvalidArgument) for an
  // empty range list or a range with lo > hi.
  explicit Multiplicity(std::vector<Range> ranges);

  static Multiplicity exactly(std::uint32_t n) { return Multiplicity({{n, n}}); }
  static Multiplicity between(std::uint32_t lo, std::optional<std::uint32_t> hi)
  {
    return Multiplicity({{lo, hi}});
  }
  static Multiplicity any() { return Multiplicity({{0, std::nullopt}}); }

  const std::vector<Range> & ranges() const { return ranges_; }

  bool contains(std::uint64_t count) const;
  // Superset test: every count admitted by `other` is admitted by *this.
  bool includes(const Multiplicity & other) const;

  std::string to_string() const;  // e.g. "0..1, 3..*"

  auto operator<=>(const Multiplicity &) const = default;
  bool operator==(const Multiplicity &) const = default;

 private:
  std::vector<Range> ranges_;
};

struct AssociationEnd {
  Name name;
  ClassifierId classifier;
  Multiplicity multi = Multiplicity::any();

  auto operator<=>(const AssociationEnd &) const = default;
  bool operator==(const AssociationEnd &) const = default;
};

// The syntax admits any number of ends; well-formedness demands two.
struct Association {
  Name name;
  std::vector<AssociationEnd> ends;

  auto operator<=>(const Association &) const = default;
  bool operator==(const Association &) const = default;
};

struct Generalization {
  ClassifierId super;
  ClassifierId sub;

  auto operator<=>(const Generalization &) const = default;
  bool operator==(const Generalization &) const = default;
};

// A static model. All containers are ordered, so the representation is
// canonical. `attributes` holds declared (not inherited) attribute names;
// a classifier without an entry has none.
struct StaticModel {
  Name name = "M";
  std::set<ClassifierId> classifiers;
  std::set<ClassifierId> abstract;
  std::set<Association> associations;
  std::map<ClassifierId, std::set<Name>> attributes;
  std::set<Generalization> supertype_of;

  StaticModel & add_classifier(const ClassifierId & c, bool is_abstract = false,
                               std::set<Name> attrs = {});
  StaticModel & add_generalization(const ClassifierId & super,
                                   const ClassifierId & sub);
  StaticModel & add_association(Association a);

  const std::set<Name> & declared_attributes(const ClassifierId & c) const;
  bool has_classifier(const ClassifierId & c) const
  {
    return classifiers.count(c) != 0;
  }
  // Associations carrying `assoc` as name (more than one only when ill-formed).
  std::vector<const Association *> find_associations(const Name & assoc) const;

  // Empty attribute entries are insignificant.
  bool operator==(const StaticModel & other) const;
};

// Equality ignoring the model's own name.
bool same_diagram(const StaticModel & a, const StaticModel & b);

}  // namespace umlsem
