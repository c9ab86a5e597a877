#pragma once

// Test-only oracle: materializes every raw candidate snapshot of a scope
// and filters with satisfies(). Independent of the enumerator's block
// decomposition; slot vocabularies are recomputed from the model.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "umlsem/semantics.h"
#include "umlsem/syntax.h"
#include "umlsem/wellformed.h"

namespace umlsem::testing {

struct NaiveSlots {
  std::set<Name> data;
  std::set<Name> ends;
};

// Per classifier: declared-or-inherited attributes and every end name
// whose classifier has the class among its instance classifiers. Union
// over all given models.
inline std::map<ClassifierId, NaiveSlots> naive_vocabulary(
    const std::vector<const StaticModel *> & models)
{
  std::map<ClassifierId, NaiveSlots> out;
  for (const StaticModel * m : models) {
    for (const ClassifierId & c : m->classifiers) {
      auto & slots = out[c];
      for (const Name & a : all_attributes(*m, c)) slots.data.insert(a);
      for (const Association & a : m->associations) {
        for (const AssociationEnd & e : a.ends) {
          if (instance_classifiers(*m, e.classifier).count(c)) slots.ends.insert(e.name);
        }
      }
    }
  }
  return out;
}

// Calls visit(s) for every raw candidate snapshot.
inline void naive_raw_snapshots(const std::map<ClassifierId, NaiveSlots> & vocab,
                                Scope scope,
                                const std::function<void(const Snapshot &)> & visit)
{
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << scope.objects); ++mask) {
    std::vector<Value> live;
    for (std::uint32_t i = 0; i < scope.objects; ++i) {
      if (mask >> i & 1) live.push_back(Value::object(i));
    }
    // all subsets of the live ids
    std::vector<std::set<Value>> target_sets;
    for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << live.size()); ++sub) {
      std::set<Value> t;
      for (std::size_t i = 0; i < live.size(); ++i) {
        if (sub >> i & 1) t.insert(live[i]);
      }
      target_sets.push_back(std::move(t));
    }

    Snapshot s;
    // Recursion over (object, slot) positions.
    std::function<void(std::size_t)> place_object;
    std::function<void(std::size_t, ObjectState &, std::vector<std::pair<Name, bool>> &,
                       std::size_t)>
        fill;
    fill = [&](std::size_t obj, ObjectState & st,
               std::vector<std::pair<Name, bool>> & slots, std::size_t k) {
      if (k == slots.size()) {
        s.objects[live[obj]] = st;
        place_object(obj + 1);
        s.objects.erase(live[obj]);
        return;
      }
      const auto & [name, is_data] = slots[k];
      fill(obj, st, slots, k + 1);  // absent
      if (is_data) {
        for (std::uint32_t d = 0; d < scope.data; ++d) {
          st.attributes[name] = {Value::data(d)};
          fill(obj, st, slots, k + 1);
        }
      } else {
        for (const auto & t : target_sets) {
          st.attributes[name] = t;
          fill(obj, st, slots, k + 1);
        }
      }
      st.attributes.erase(name);
    };
    place_object = [&](std::size_t obj) {
      if (obj == live.size()) {
        visit(s);
        return;
      }
      for (const auto & [c, slots] : vocab) {
        ObjectState st{c, {}};
        std::vector<std::pair<Name, bool>> all;
        for (const Name & n : slots.data) all.emplace_back(n, true);
        for (const Name & n : slots.ends) all.emplace_back(n, false);
        fill(obj, st, all, 0);
      }
    };
    place_object(0);
  }
}

inline std::vector<Snapshot> naive_models(const StaticModel & m, Scope scope, Mode mode,
                                          const std::vector<const StaticModel *> & frame_of = {})
{
  const auto vocab = naive_vocabulary(frame_of.empty()
                                          ? std::vector<const StaticModel *>{&m}
                                          : frame_of);
  const ModelIndex index(m);
  std::vector<Snapshot> out;
  naive_raw_snapshots(vocab, scope, [&](const Snapshot & s) {
    if (satisfies(index, s, mode).satisfied()) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Both modes from a single pass over the raw universe.
inline std::pair<std::vector<Snapshot>, std::vector<Snapshot>> naive_models_both_modes(
    const StaticModel & m, Scope scope)
{
  const ModelIndex index(m);
  std::pair<std::vector<Snapshot>, std::vector<Snapshot>> out;
  naive_raw_snapshots(naive_vocabulary({&m}), scope, [&](const Snapshot & s) {
    if (!satisfies(index, s, Mode::kStrictPaper).satisfied()) return;
    out.first.push_back(s);
    if (satisfies(index, s, Mode::kTyped).satisfied()) out.second.push_back(s);
  });
  std::sort(out.first.begin(), out.first.end());
  std::sort(out.second.begin(), out.second.end());
  return out;
}

inline std::uint64_t naive_raw_count(const StaticModel & m, Scope scope)
{
  std::uint64_t n = 0;
  naive_raw_snapshots(naive_vocabulary({&m}), scope, [&](const Snapshot &) { ++n; });
  return n;
}

}  // namespace umlsem::testing
