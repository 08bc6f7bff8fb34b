#include "fairdiv/algorithms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "fairdiv/errors.hpp"

namespace fairdiv {

std::string_view to_string(PickReason r) {
  switch (r) {
    case PickReason::Sm: return "sm";
    case PickReason::Iwrr: return "iwrr";
    case PickReason::WeightedGreedy: return "weighted-greedy";
    case PickReason::Representative: return "representative";
  }
  return "iwrr";
}

namespace {

void require_all_common(const Instance& inst, const char* algo) {
  if (inst.valuation_class() != ValuationClass::AllCommon) {
    throw PreconditionError(std::string(algo) + " requires an all-common instance; declared class is " +
                            std::string(to_string(inst.valuation_class())));
  }
}

// Descending value, ascending index among equals.
template <typename ValueFn>
std::vector<int> descending_order(int count, ValueFn&& value_of, RunStats& stats) {
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    ++stats.steps;
    return value_of(a) > value_of(b);
  });
  return order;
}

struct IwrrPick {
  int group;
  int agent;
  int good;
};

// The IWRR selection loop, shared between the real-goods run and the
// representative-goods phase of SM-IWRR. value_of(agent, good) must be
// valid for goods 0..num_goods-1.
template <typename ValueFn>
std::vector<IwrrPick> iwrr_schedule(const Instance& inst, int num_goods, ValueFn&& value_of,
                                    RunStats& stats) {
  const int n = inst.num_agents();
  const int l = inst.num_groups();

  std::vector<std::vector<int>> sorted_members(l);
  for (int k = 0; k < l; ++k) {
    sorted_members[k] = inst.group_members(k);
    std::sort(sorted_members[k].begin(), sorted_members[k].end());
  }

  // Per-agent preference lists with lazily advancing cursors; an agent's
  // favourite unassigned good is found by skipping assigned entries.
  std::vector<std::vector<int>> pref(n);
  std::vector<size_t> cursor(n, 0);
  for (int i = 0; i < n; ++i) {
    pref[i] = descending_order(num_goods, [&](int g) { return value_of(i, g); }, stats);
  }
  std::vector<char> assigned(num_goods, 0);
  auto favourite = [&](int i) {
    while (assigned[pref[i][cursor[i]]]) {
      ++cursor[i];
      ++stats.steps;
    }
    return pref[i][cursor[i]];
  };

  std::vector<int> agent_count(n, 0);
  std::vector<long> group_count(l, 0);
  std::vector<IwrrPick> picks;
  picks.reserve(num_goods);

  for (int done = 0; done < num_goods; ++done) {
    // Group with the lowest weighted bundle size |B_k|/w_k; ties to the
    // lowest group index. Exact via cross-multiplication.
    int k = 0;
    for (int j = 1; j < l; ++j) {
      ++stats.steps;
      if (group_count[j] * inst.weight(k) < group_count[k] * inst.weight(j)) k = j;
    }

    // Agent with the smallest bundle; ties to the one whose favourite
    // unassigned good is most valuable, then to the lowest agent index.
    int min_count = std::numeric_limits<int>::max();
    for (int i : sorted_members[k]) {
      ++stats.steps;
      min_count = std::min(min_count, agent_count[i]);
    }
    int chosen = -1;
    Value best_fav;
    for (int i : sorted_members[k]) {
      if (agent_count[i] != min_count) continue;
      ++stats.steps;
      Value fav = value_of(i, favourite(i));
      if (chosen == -1 || fav > best_fav) {
        chosen = i;
        best_fav = fav;
      }
    }

    int good = favourite(chosen);
    assigned[good] = 1;
    picks.push_back({k, chosen, good});
    ++agent_count[chosen];
    ++group_count[k];
  }
  return picks;
}

}  // namespace

SmResult run_sm(const Instance& inst) {
  require_all_common(inst, "sm");
  SmResult res;
  const int n = inst.num_agents();
  std::vector<int> order =
      descending_order(inst.num_goods(), [&](int g) { return inst.value(0, g); }, res.stats);

  std::vector<std::vector<int>> bundles(n);
  std::vector<Value> values(n);
  std::vector<int> rounds(n, 0);
  int step = 0;
  for (int g : order) {
    int receiver = 0;
    for (int i = 1; i < n; ++i) {
      ++res.stats.steps;
      if (values[i] < values[receiver]) receiver = i;
    }
    res.trace.events.push_back(
        {step++, rounds[receiver]++, inst.group_of(receiver), receiver, g, PickReason::Sm});
    bundles[receiver].push_back(g);
    values[receiver] += inst.value(0, g);
  }
  res.allocation = Allocation::make_complete(std::move(bundles), inst);
  return res;
}

IwrrResult run_iwrr(const Instance& inst) {
  IwrrResult res;
  auto picks = iwrr_schedule(
      inst, inst.num_goods(), [&](int i, int g) -> const Value& { return inst.value(i, g); },
      res.stats);

  const int n = inst.num_agents();
  std::vector<std::vector<int>> bundles(n);
  std::vector<int> rounds(n, 0);
  int step = 0;
  for (const auto& p : picks) {
    res.trace.events.push_back({step++, rounds[p.agent]++, p.group, p.agent, p.good, PickReason::Iwrr});
    bundles[p.agent].push_back(p.good);
  }
  res.allocation = Allocation::make_complete(std::move(bundles), inst);
  return res;
}

SmIwrrResult run_sm_iwrr(const Instance& inst) {
  require_all_common(inst, "sm-iwrr");
  SmIwrrResult res;

  SmResult sm = run_sm(inst);
  res.stats.steps += sm.stats.steps;
  res.trace = std::move(sm.trace);
  res.sm_allocation = std::move(sm.allocation);

  const int n = inst.num_agents();
  Value min_value;
  std::vector<Value> sm_values(n);
  for (int i = 0; i < n; ++i) {
    sm_values[i] = bundle_value(inst, 0, res.sm_allocation.bundles[i]);
    if (i == 0 || sm_values[i] < min_value) min_value = sm_values[i];
  }
  res.representatives.source_bundles = res.sm_allocation.bundles;
  res.representatives.values.reserve(n);
  for (int i = 0; i < n; ++i) {
    res.representatives.values.push_back(sm_values[i] - min_value);
  }
  // Each representative good is worth no more than any single good in its
  // source bundle; the SM phase guarantees this, so a violation here is a bug.
  for (int i = 0; i < n; ++i) {
    for (int g : res.representatives.source_bundles[i]) {
      if (res.representatives.values[i] > inst.value(0, g)) {
        throw std::logic_error("representative good exceeds a source-bundle good in value");
      }
    }
  }

  auto picks = iwrr_schedule(
      inst, n, [&](int, int r) -> const Value& { return res.representatives.values[r]; },
      res.stats);

  std::vector<std::vector<int>> bundles(n);
  std::vector<int> rounds(n, 0);
  int step = static_cast<int>(res.trace.events.size());
  for (const auto& p : picks) {
    res.trace.events.push_back(
        {step++, rounds[p.agent]++, p.group, p.agent, p.good, PickReason::Representative});
    bundles[p.agent] = res.representatives.source_bundles[p.good];
  }
  // With as many representative goods as agents, the round robin degenerates
  // to one pick per agent; anything else is a bug in the selection rule.
  for (int i = 0; i < n; ++i) {
    if (rounds[i] != 1) {
      throw std::logic_error("representative phase did not give every agent exactly one good");
    }
  }
  res.allocation = Allocation::make_complete(std::move(bundles), inst);
  return res;
}

WeightedGreedyResult run_weighted_greedy(const Instance& inst) {
  require_all_common(inst, "weighted-greedy");
  WeightedGreedyResult res;
  const int l = inst.num_groups();
  std::vector<int> order =
      descending_order(inst.num_goods(), [&](int g) { return inst.value(0, g); }, res.stats);

  std::vector<std::vector<int>> bundles(l);
  std::vector<Value> values(l);
  std::vector<int> rounds(l, 0);
  int step = 0;
  for (int g : order) {
    // Group with minimal weighted bundle value v(B_k)/w_k, ties to the
    // lowest group index.
    int k = 0;
    for (int j = 1; j < l; ++j) {
      ++res.stats.steps;
      if (values[j] * Value(inst.weight(k)) < values[k] * Value(inst.weight(j))) k = j;
    }
    res.trace.events.push_back({step++, rounds[k]++, k, -1, g, PickReason::WeightedGreedy});
    bundles[k].push_back(g);
    values[k] += inst.value(0, g);
  }
  res.allocation = GroupAllocation::make_complete(std::move(bundles), inst);
  return res;
}

StructureVerdict check_trace_structure(const PickTrace& trace, const Instance& inst, int k,
                                       int k2) {
  if (k < 0 || k >= inst.num_groups() || k2 < 0 || k2 >= inst.num_groups() || k == k2) {
    throw InputError("trace structure check needs two distinct valid group indices");
  }
  for (const auto& e : trace.events) {
    if (e.reason != PickReason::Iwrr) {
      throw PreconditionError("trace structure check requires a trace produced by iwrr");
    }
  }

  int light = k, heavy = k2;
  if (inst.weight(heavy) < inst.weight(light)) std::swap(light, heavy);
  const int wl = inst.weight(light);
  const int wh = inst.weight(heavy);
  const int floor_run = wh / wl;
  const int ceil_run = (wh + wl - 1) / wl;

  // Maximal runs of the restricted event sequence.
  struct Run {
    int group;
    int length;
    int first_step;
    int last_step;
  };
  std::vector<Run> runs;
  for (const auto& e : trace.events) {
    if (e.group != light && e.group != heavy) continue;
    if (!runs.empty() && runs.back().group == e.group) {
      ++runs.back().length;
      runs.back().last_step = e.step;
    } else {
      runs.push_back({e.group, 1, e.step, e.step});
    }
  }

  for (size_t r = 0; r < runs.size(); ++r) {
    const Run& run = runs[r];
    if (run.group == light) {
      if (run.length > 1) {
        return {false, run.first_step,
                "lighter group " + std::to_string(light) + " picked " +
                    std::to_string(run.length) + " times consecutively"};
      }
      continue;
    }
    if (run.length > ceil_run) {
      return {false, run.first_step,
              "heavier group " + std::to_string(heavy) + " run of length " +
                  std::to_string(run.length) + " exceeds ceil bound " + std::to_string(ceil_run)};
    }
    // The floor bound applies only to interior runs: a preceding lighter
    // pick starts the pattern and a following lighter pick certifies that
    // goods had not run out.
    const bool bounded_left = r > 0;
    const bool bounded_right = r + 1 < runs.size();
    if (bounded_left && bounded_right && run.length < floor_run) {
      return {false, run.first_step,
              "heavier group " + std::to_string(heavy) + " run of length " +
                  std::to_string(run.length) + " is below floor bound " +
                  std::to_string(floor_run)};
    }
  }
  return {};
}

}  // namespace fairdiv
