#include "umlsem/syntax.h"

#include <algorithm>
#include <cctype>

#include "umlsem/error.h"

namespace umlsem {

bool Name::is_valid(std::string_view text)
{
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text.front()))) {
    return false;
  }
  return std::all_of(text.begin(), text.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

Name::Name(std::string text) : text_(std::move(text))
{
  if (!is_valid(text_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid name '" + text_ + "'", text_);
  }
}

Multiplicity::Multiplicity(std::vector<Range> ranges)
{
  if (ranges.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty multiplicity");
  }
  for (const Range & r : ranges) {
    if (r.hi && *r.hi < r.lo) {
      throw Error(ErrorCode::kInvalidArgument,
                  "multiplicity range " + std::to_string(r.lo) + ".." +
                      std::to_string(*r.hi) + " has lo > hi");
    }
  }
  std::sort(ranges.begin(), ranges.end(), [](const Range & a, const Range & b) {
    return a.lo < b.lo;
  });
  for (const Range & r : ranges) {
    if (!ranges_.empty()) {
      Range & last = ranges_.back();
      // merge overlapping or adjacent ranges
      if (!last.hi || std::uint64_t(r.lo) <= std::uint64_t(*last.hi) + 1) {
        if (last.hi && (!r.hi || *r.hi > *last.hi)) {
          last.hi = r.hi;
        }
        continue;
      }
    }
    ranges_.push_back(r);
  }
}

bool Multiplicity::contains(std::uint64_t count) const
{
  return std::any_of(ranges_.begin(), ranges_.end(), [&](const Range & r) {
    return count >= r.lo && (!r.hi || count <= *r.hi);
  });
}

bool Multiplicity::includes(const Multiplicity & other) const
{
  // Canonical ranges are maximal, so each range of `other` must sit inside
  // a single range of *this.
  return std::all_of(other.ranges_.begin(), other.ranges_.end(),
                     [&](const Range & r) {
                       return std::any_of(
                           ranges_.begin(), ranges_.end(), [&](const Range & q) {
                             if (r.lo < q.lo) return false;
                             if (!q.hi) return true;
                             return r.hi && *r.hi <= *q.hi;
                           });
                     });
}

std::string Multiplicity::to_string() const
{
  std::string out;
  for (const Range & r : ranges_) {
    if (!out.empty()) out += ", ";
    out += std::to_string(r.lo) + "..";
    out += r.hi ? std::to_string(*r.hi) : "*";
  }
  return out;
}

StaticModel & StaticModel::add_classifier(const ClassifierId & c, bool is_abstract,
                                          std::set<Name> attrs)
{
  classifiers.insert(c);
  if (is_abstract) abstract.insert(c);
  attributes[c].insert(attrs.begin(), attrs.end());
  return *this;
}

StaticModel & StaticModel::add_generalization(const ClassifierId & super,
                                              const ClassifierId & sub)
{
  supertype_of.insert({super, sub});
  return *this;
}

StaticModel & StaticModel::add_association(Association a)
{
  associations.insert(std::move(a));
  return *this;
}

const std::set<Name> & StaticModel::declared_attributes(const ClassifierId & c) const
{
  static const std::set<Name> kNone;
  auto it = attributes.find(c);
  return it == attributes.end() ? kNone : it->second;
}

std::vector<const Association *> StaticModel::find_associations(const Name & assoc) const
{
  std::vector<const Association *> found;
  for (const Association & a : associations) {
    if (a.name == assoc) found.push_back(&a);
  }
  return found;
}

namespace {

// Empty attribute entries carry no information; drop them before comparing.
std::map<ClassifierId, std::set<Name>> nonempty(
    const std::map<ClassifierId, std::set<Name>> & attrs)
{
  std::map<ClassifierId, std::set<Name>> out;
  for (const auto & [c, names] : attrs) {
    if (!names.empty()) out.emplace(c, names);
  }
  return out;
}

}  // namespace

bool same_diagram(const StaticModel & a, const StaticModel & b)
{
  return a.classifiers == b.classifiers && a.abstract == b.abstract &&
         a.associations == b.associations &&
         nonempty(a.attributes) == nonempty(b.attributes) &&
         a.supertype_of == b.supertype_of;
}

bool StaticModel::operator==(const StaticModel & other) const
{
  return name == other.name && same_diagram(*this, other);
}

}  // namespace umlsem
