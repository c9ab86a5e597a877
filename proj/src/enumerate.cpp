#include "umlsem/enumerate.h"

#include <algorithm>
#include <exception>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include "umlsem/error.h"
#include "umlsem/wellformed.h"

namespace umlsem {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b)
{
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp)
{
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

std::uint64_t subsets(std::size_t n)
{
  return n >= 64 ? kSaturated : std::uint64_t(1) << n;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // exact at every step: out * (n - k + i) is divisible by i
    if (out > kSaturated / (n - k + i)) return kSaturated;
    out = out * (n - k + i) / i;
  }
  return out;
}

std::uint64_t states_per_object(const FrameClass & fc, std::size_t live,
                                std::uint32_t data)
{
  return sat_mul(sat_pow(std::uint64_t(data) + 1, fc.data_slots.size()),
                 sat_pow(sat_add(subsets(live), 1), fc.end_slots.size()));
}

void merge_into(std::map<ClassifierId, std::pair<std::set<Name>, std::set<Name>>> & acc,
                const StaticModel & model)
{
  const ModelIndex index(model);
  for (const ClassifierId & c : model.classifiers) {
    auto & [data, ends] = acc[c];
    const auto & attrs = index.all_attributes(c);
    data.insert(attrs.begin(), attrs.end());
    for (const auto & ec : index.ends_at(c)) ends.insert(ec.end->name);
  }
}

Frame to_frame(
    const std::map<ClassifierId, std::pair<std::set<Name>, std::set<Name>>> & acc)
{
  Frame frame;
  for (const auto & [c, slots] : acc) {
    frame.classes.push_back(
        {c, {slots.first.begin(), slots.first.end()},
         {slots.second.begin(), slots.second.end()}});
  }
  return frame;
}

void check_guard(const Frame & frame, Scope scope, const EnumerationOptions & options)
{
  const std::uint64_t raw = raw_candidate_count(frame, scope);
  if (raw > options.max_candidates) {
    throw Error(ErrorCode::kScopeTooLarge,
                "scope objects=" + std::to_string(scope.objects) +
                    " data=" + std::to_string(scope.data) + " has " +
                    (raw == kSaturated ? std::string("more than 2^64")
                                       : std::to_string(raw)) +
                    " raw candidates, above the limit of " +
                    std::to_string(options.max_candidates));
  }
}

// A block fixes the live object ids and the classifier of each.
struct Block {
  std::vector<Value> live;
  std::vector<std::size_t> classes;  // indices into Frame::classes
};

// Calls fn(block) for every block with sequence number ≡ part (mod parts).
template <class Fn>
void for_each_block(const Frame & frame, Scope scope, unsigned part,
                    unsigned parts, Fn && fn)
{
  const std::size_t nclasses = frame.classes.size();
  const std::uint32_t pool = scope.objects;
  std::uint64_t seq = 0;
  Block block;
  for (std::uint64_t mask = 0; mask < subsets(pool); ++mask) {
    block.live.clear();
    for (std::uint32_t i = 0; i < pool; ++i) {
      if (mask >> i & 1) block.live.push_back(Value::object(i));
    }
    const std::size_t n = block.live.size();
    if (n > 0 && nclasses == 0) continue;
    block.classes.assign(n, 0);
    while (true) {
      if (seq++ % parts == part) fn(block);
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (++block.classes[i] < nclasses) break;
        block.classes[i] = 0;
      }
      if (i == n) break;
    }
  }
}

// Every raw state of one object of class `fc` given the live ids.
std::vector<ObjectState> raw_states(const FrameClass & fc,
                                    const std::vector<Value> & live,
                                    std::uint32_t data)
{
  const std::size_t nd = fc.data_slots.size();
  const std::size_t slots = nd + fc.end_slots.size();
  std::vector<std::uint64_t> radix(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    radix[s] = s < nd ? std::uint64_t(data) + 1 : subsets(live.size()) + 1;
  }
  std::vector<ObjectState> out;
  std::vector<std::uint64_t> digit(slots, 0);
  while (true) {
    ObjectState st{fc.classifier, {}};
    for (std::size_t s = 0; s < slots; ++s) {
      if (digit[s] == 0) continue;  // absent
      if (s < nd) {
        st.attributes[fc.data_slots[s]] = {
            Value::data(static_cast<std::uint32_t>(digit[s] - 1))};
      } else {
        std::set<Value> targets;
        const std::uint64_t subset = digit[s] - 1;
        for (std::size_t i = 0; i < live.size(); ++i) {
          if (subset >> i & 1) targets.insert(live[i]);
        }
        st.attributes[fc.end_slots[s - nd]] = std::move(targets);
      }
    }
    out.push_back(std::move(st));
    std::size_t s = 0;
    for (; s < slots; ++s) {
      if (++digit[s] < radix[s]) break;
      digit[s] = 0;
    }
    if (s == slots) break;
  }
  return out;
}

ClassifierLookup block_lookup(const Frame & frame, const Block & block)
{
  return [&frame, &block](const Value & v) -> const ClassifierId * {
    auto it = std::lower_bound(block.live.begin(), block.live.end(), v);
    if (it == block.live.end() || *it != v) return nullptr;
    return &frame.classes[block.classes[it - block.live.begin()]].classifier;
  };
}

// Per-object states of the block that pass `index`; sorted.
std::vector<std::vector<ObjectState>> admissible(const ModelIndex & index,
                                                 const Frame & frame,
                                                 const Block & block, Scope scope,
                                                 Mode mode)
{
  const ClassifierLookup lookup = block_lookup(frame, block);
  std::vector<std::vector<ObjectState>> out;
  for (std::size_t i = 0; i < block.live.size(); ++i) {
    std::vector<ObjectState> ok;
    for (ObjectState & st :
         raw_states(frame.classes[block.classes[i]], block.live, scope.data)) {
      if (check_object(index, mode, block.live[i], st, lookup, nullptr)) {
        ok.push_back(std::move(st));
      }
    }
    if (ok.empty()) return {};
    std::sort(ok.begin(), ok.end());
    out.push_back(std::move(ok));
  }
  return out;
}

template <class Result, class Fn>
std::vector<Result> run_parts(unsigned workers, Fn fn)
{
  workers = std::max(1u, workers);
  std::vector<Result> results(workers);
  if (workers == 1) {
    fn(0u, 1u, results[0]);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        fn(w, workers, results[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto & t : threads) t.join();
  for (auto & e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace

Frame model_frame(const StaticModel & model)
{
  std::map<ClassifierId, std::pair<std::set<Name>, std::set<Name>>> acc;
  merge_into(acc, model);
  return to_frame(acc);
}

Frame joint_frame(const StaticModel & a, const StaticModel & b)
{
  std::map<ClassifierId, std::pair<std::set<Name>, std::set<Name>>> acc;
  merge_into(acc, a);
  merge_into(acc, b);
  return to_frame(acc);
}

std::uint64_t raw_candidate_count(const Frame & frame, Scope scope)
{
  std::uint64_t total = 0;
  for (std::uint32_t n = 0; n <= scope.objects; ++n) {
    std::uint64_t per_object = 0;
    for (const FrameClass & fc : frame.classes) {
      per_object = sat_add(per_object, states_per_object(fc, n, scope.data));
    }
    total = sat_add(total, sat_mul(binomial(scope.objects, n), sat_pow(per_object, n)));
  }
  return total;
}

std::vector<Snapshot> enumerate_models(const StaticModel & model, Scope scope,
                                       Mode mode,
                                       const EnumerationOptions & options)
{
  return enumerate_models(model, model_frame(model), scope, mode, options);
}

std::vector<Snapshot> enumerate_models(const StaticModel & model,
                                       const Frame & frame, Scope scope,
                                       Mode mode,
                                       const EnumerationOptions & options)
{
  const ModelIndex index(model);
  check_guard(frame, scope, options);

  auto parts = run_parts<std::vector<Snapshot>>(
      options.workers,
      [&](unsigned part, unsigned nparts, std::vector<Snapshot> & out) {
        for_each_block(frame, scope, part, nparts, [&](const Block & block) {
          const auto per_object = admissible(index, frame, block, scope, mode);
          if (per_object.size() != block.live.size()) return;
          const std::size_t n = block.live.size();
          std::vector<std::size_t> pick(n, 0);
          while (true) {
            Snapshot s;
            for (std::size_t i = 0; i < n; ++i) {
              s.objects.emplace(block.live[i], per_object[i][pick[i]]);
            }
            out.push_back(std::move(s));
            std::size_t i = 0;
            for (; i < n; ++i) {
              if (++pick[i] < per_object[i].size()) break;
              pick[i] = 0;
            }
            if (i == n) break;
          }
        });
      });

  std::vector<Snapshot> all;
  for (auto & p : parts) {
    std::move(p.begin(), p.end(), std::back_inserter(all));
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::optional<Snapshot> first_counterexample(const StaticModel & premise,
                                             const StaticModel & conclusion,
                                             const Frame & frame, Scope scope,
                                             Mode mode,
                                             const EnumerationOptions & options)
{
  const ModelIndex pindex(premise);
  const ModelIndex cindex(conclusion);
  check_guard(frame, scope, options);

  // Within a block the premise's models are the product of the per-object
  // sets P_i, and the conclusion holds iff every chosen state passes it.
  // The lexicographically least failing product element deviates from the
  // per-object minima at exactly one position j, where it takes the least
  // state of P_j that fails the conclusion.
  auto parts = run_parts<std::optional<Snapshot>>(
      options.workers,
      [&](unsigned part, unsigned nparts, std::optional<Snapshot> & best) {
        for_each_block(frame, scope, part, nparts, [&](const Block & block) {
          const auto per_object = admissible(pindex, frame, block, scope, mode);
          if (per_object.size() != block.live.size()) return;
          const ClassifierLookup lookup = block_lookup(frame, block);
          const std::size_t n = block.live.size();
          for (std::size_t j = 0; j < n; ++j) {
            const ObjectState * bad = nullptr;
            for (const ObjectState & st : per_object[j]) {
              if (!check_object(cindex, mode, block.live[j], st, lookup, nullptr)) {
                bad = &st;
                break;
              }
            }
            if (!bad) continue;
            Snapshot s;
            for (std::size_t i = 0; i < n; ++i) {
              s.objects.emplace(block.live[i], i == j ? *bad : per_object[i].front());
            }
            if (!best || s < *best) best = std::move(s);
          }
        });
      });

  std::optional<Snapshot> best;
  for (auto & p : parts) {
    if (p && (!best || *p < *best)) best = std::move(p);
  }
  return best;
}

}  // namespace umlsem
