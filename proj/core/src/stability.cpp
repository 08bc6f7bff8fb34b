#include "fairdiv/stability.hpp"

#include <algorithm>

#include "fairdiv/algorithms.hpp"
#include "fairdiv/errors.hpp"

namespace fairdiv {

std::string_view to_string(Mechanism m) {
  return m == Mechanism::Iwrr ? "iwrr" : "sm-iwrr";
}

Mechanism mechanism_from_string(std::string_view s) {
  if (s == "iwrr") return Mechanism::Iwrr;
  if (s == "sm-iwrr") return Mechanism::SmIwrr;
  throw InputError("unknown mechanism \"" + std::string(s) + "\"; expected iwrr or sm-iwrr");
}

Allocation run_mechanism(const Instance& inst, Mechanism mechanism) {
  if (mechanism == Mechanism::Iwrr) return run_iwrr(inst).allocation;
  return run_sm_iwrr(inst).allocation;
}

Instance apply_deviation(const Instance& inst, int agent, int target_group) {
  if (agent < 0 || agent >= inst.num_agents()) {
    throw InputError("invalid deviating agent index " + std::to_string(agent));
  }
  const int origin = inst.group_of(agent);
  if (target_group == origin) {
    throw InputError("deviation target must differ from the agent's own group");
  }
  if (target_group != -1 && (target_group < 0 || target_group >= inst.num_groups())) {
    throw InputError("invalid deviation target group " + std::to_string(target_group));
  }

  std::vector<std::vector<int>> groups;
  groups.reserve(inst.num_groups() + 1);
  int mapped_target = -1;
  for (int k = 0; k < inst.num_groups(); ++k) {
    std::vector<int> members = inst.group_members(k);
    if (k == origin) {
      members.erase(std::find(members.begin(), members.end(), agent));
      if (members.empty()) continue;  // the partition has no empty cells
    }
    if (k == target_group) mapped_target = static_cast<int>(groups.size());
    groups.push_back(std::move(members));
  }
  if (target_group == -1) {
    groups.push_back({agent});
  } else {
    groups[mapped_target].push_back(agent);
  }

  std::vector<std::vector<Value>> valuations;
  valuations.reserve(inst.num_agents());
  for (int i = 0; i < inst.num_agents(); ++i) valuations.push_back(inst.row(i));
  ValuationClass cls = Instance::classify(valuations, groups);
  return Instance(inst.agent_names(), inst.good_names(), std::move(groups),
                  std::move(valuations), cls);
}

StabilityResult check_group_epsilon_stability(const Instance& inst, Mechanism mechanism) {
  StabilityResult result;
  const Allocation baseline = run_mechanism(inst, mechanism);
  result.identity_rerun_exact = run_mechanism(inst, mechanism) == baseline;
  if (!result.identity_rerun_exact) result.pass = false;

  for (int agent = 0; agent < inst.num_agents(); ++agent) {
    const Value original = bundle_value(inst, agent, baseline.bundles[agent]);
    std::vector<int> targets{-1};
    for (int k = 0; k < inst.num_groups(); ++k) {
      if (k != inst.group_of(agent)) targets.push_back(k);
    }
    for (int target : targets) {
      Instance deviated = apply_deviation(inst, agent, target);
      Allocation outcome = run_mechanism(deviated, mechanism);
      const auto& bundle = outcome.bundles[agent];

      DeviationRecord record;
      record.agent = agent;
      record.target_group = target;
      record.original_value = original;
      record.deviated_value = bundle_value(inst, agent, bundle);
      if (!bundle.empty()) {
        int best = bundle.front();
        for (int g : bundle) {
          if (inst.value(agent, g) > inst.value(agent, best)) best = g;
        }
        record.removed_good = best;
        record.pass = original >= record.deviated_value - inst.value(agent, best);
      } else {
        record.pass = true;  // nothing gained, nothing to remove
      }
      if (!record.pass) result.pass = false;
      result.ledger.push_back(std::move(record));
    }
  }
  return result;
}

}  // namespace fairdiv
