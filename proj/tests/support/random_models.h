#pragma once

// Test-only generator of small well-formed static models.

#include <random>
#include <string>
#include <vector>

#include "umlsem/syntax.h"
#include "umlsem/wellformed.h"

namespace umlsem::testing {

struct RandomModelLimits {
  int max_classifiers = 3;
  int max_associations = 2;
  double p_abstract = 0.25;
  double p_generalization = 0.35;
  double p_attribute = 0.3;
};

inline Multiplicity random_multiplicity(std::mt19937 & rng)
{
  static const std::vector<Multiplicity> kPool = {
      Multiplicity::any(),
      Multiplicity::between(0, 1),
      Multiplicity::exactly(1),
      Multiplicity::between(1, std::nullopt),
      Multiplicity::exactly(0),
      Multiplicity::between(2, std::nullopt),
      Multiplicity({{0, 0}, {2, 2}}),
      Multiplicity({{0, 1}, {3, std::nullopt}}),
  };
  return kPool[std::uniform_int_distribution<std::size_t>(0, kPool.size() - 1)(rng)];
}

// Classifiers are C0..C2 with generalizations only from lower to higher
// index, so the hierarchy is acyclic. Attribute names (aN) and end names
// (eN, x) never collide.
inline StaticModel random_model(std::mt19937 & rng, const RandomModelLimits & lim = {})
{
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  while (true) {
    StaticModel m;
    m.name = "R";
    const int n = pick(1, lim.max_classifiers);
    std::vector<Name> cls;
    for (int i = 0; i < n; ++i) {
      cls.emplace_back("C" + std::to_string(i));
      std::set<Name> attrs;
      if (coin(lim.p_attribute)) attrs.insert(Name("a" + std::to_string(i)));
      m.add_classifier(cls.back(), coin(lim.p_abstract), attrs);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(lim.p_generalization)) m.add_generalization(cls[i], cls[j]);
      }
    }
    const int na = pick(0, lim.max_associations);
    for (int k = 0; k < na; ++k) {
      Association a{Name("r" + std::to_string(k)), {}};
      for (int side = 0; side < 2; ++side) {
        // occasionally share an end name across associations
        Name end = coin(0.15) ? Name("x" + std::to_string(side))
                              : Name("e" + std::to_string(k) + std::to_string(side));
        a.ends.push_back({end, cls[pick(0, n - 1)], random_multiplicity(rng)});
      }
      m.add_association(std::move(a));
    }
    if (well_formed(m).ok()) return m;
  }
}

}  // namespace umlsem::testing
