#pragma once

// Bounded meaning function: every snapshot over a finite scope that
// satisfies a model.
//
// Candidate snapshots are drawn from a frame. An object of classifier c may
// carry the data slots and end slots listed for c; each data slot is absent
// or holds exactly one data value, and each end slot is absent or holds any
// subset of the live object ids. Object ids come from a pool of
// `scope.objects` identities; any subset of the pool may be live.

#include <cstdint>
#include <optional>
#include <vector>

#include "umlsem/semantics.h"
#include "umlsem/syntax.h"

namespace umlsem {

struct FrameClass {
  ClassifierId classifier;
  std::vector<Name> data_slots;  // sorted
  std::vector<Name> end_slots;   // sorted

  bool operator==(const FrameClass &) const = default;
};

struct Frame {
  std::vector<FrameClass> classes;  // sorted by classifier

  bool operator==(const Frame &) const = default;
};

// Slots of c: all_attributes(c) and the end names constraining c's objects.
Frame model_frame(const StaticModel & model);
// Union of both models' frames; used to compare meaning sets.
Frame joint_frame(const StaticModel & a, const StaticModel & b);

inline constexpr std::uint64_t kDefaultMaxCandidates = 10'000'000;

struct EnumerationOptions {
  std::uint64_t max_candidates = kDefaultMaxCandidates;
  unsigned workers = 1;
};

// Number of raw candidate snapshots in the frame at `scope` (saturates at
// UINT64_MAX).
std::uint64_t raw_candidate_count(const Frame & frame, Scope scope);

// All satisfying snapshots in canonical (ascending) order. Throws
// Error(kScopeTooLarge) when the raw candidate count exceeds
// `options.max_candidates`, Error(kIllFormedModel) for ill-formed models.
std::vector<Snapshot> enumerate_models(const StaticModel & model, Scope scope,
                                       Mode mode,
                                       const EnumerationOptions & options = {});
std::vector<Snapshot> enumerate_models(const StaticModel & model,
                                       const Frame & frame, Scope scope,
                                       Mode mode,
                                       const EnumerationOptions & options = {});

// The canonically first snapshot in `frame` that satisfies `premise` and
// violates `conclusion`; nullopt when the premise's models are included in
// the conclusion's. Same errors as enumerate_models.
std::optional<Snapshot> first_counterexample(
    const StaticModel & premise, const StaticModel & conclusion,
    const Frame & frame, Scope scope, Mode mode,
    const EnumerationOptions & options = {});

}  // namespace umlsem
