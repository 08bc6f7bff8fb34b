#include "fairdiv/allocation.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

std::vector<std::vector<int>> sorted_complete_bundles(std::vector<std::vector<int>> bundles,
                                                      const Instance& inst, size_t expected_count,
                                                      const char* owner) {
  if (bundles.size() != expected_count) {
    throw InputError("allocation must have one bundle per " + std::string(owner));
  }
  std::vector<int> owner_of(inst.num_goods(), -1);
  for (size_t i = 0; i < bundles.size(); ++i) {
    std::sort(bundles[i].begin(), bundles[i].end());
    for (int g : bundles[i]) {
      if (g < 0 || g >= inst.num_goods()) {
        throw InputError("bundle references invalid good index " + std::to_string(g));
      }
      if (owner_of[g] != -1) {
        throw InputError("good \"" + inst.good_name(g) + "\" assigned more than once");
      }
      owner_of[g] = static_cast<int>(i);
    }
  }
  for (int g = 0; g < inst.num_goods(); ++g) {
    if (owner_of[g] == -1) {
      throw InputError("good \"" + inst.good_name(g) + "\" is unassigned; allocations must be complete");
    }
  }
  return bundles;
}

}  // namespace

Allocation Allocation::make_complete(std::vector<std::vector<int>> bundles, const Instance& inst) {
  return Allocation{sorted_complete_bundles(std::move(bundles), inst,
                                            static_cast<size_t>(inst.num_agents()), "agent")};
}

GroupAllocation GroupAllocation::make_complete(std::vector<std::vector<int>> bundles,
                                               const Instance& inst) {
  return GroupAllocation{sorted_complete_bundles(std::move(bundles), inst,
                                                 static_cast<size_t>(inst.num_groups()), "group")};
}

Value bundle_value(const Instance& inst, int viewer, std::span<const int> bundle) {
  Value total;
  for (int g : bundle) total += inst.value(viewer, g);
  return total;
}

std::vector<int> group_bundle(const Allocation& alloc, const Instance& inst, int group) {
  std::vector<int> result;
  for (int agent : inst.group_members(group)) {
    const auto& bundle = alloc.bundles.at(agent);
    result.insert(result.end(), bundle.begin(), bundle.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

Value group_utility(const Allocation& alloc, const Instance& inst, int group) {
  Value total;
  for (int agent : inst.group_members(group)) {
    total += bundle_value(inst, agent, alloc.bundles.at(agent));
  }
  return total;
}

Value averaged_group_view(const Allocation& alloc, const Instance& inst, int viewer_group,
                          int target_group) {
  std::vector<int> target = group_bundle(alloc, inst, target_group);
  Value total;
  for (int agent : inst.group_members(viewer_group)) {
    total += bundle_value(inst, agent, target);
  }
  return total / Value(inst.weight(viewer_group));
}

}  // namespace fairdiv
