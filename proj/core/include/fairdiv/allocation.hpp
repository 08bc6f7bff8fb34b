#pragma once

#include <span>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/value.hpp"

namespace fairdiv {

/// Per-agent bundles of good indices. Bundles are kept sorted ascending;
/// the order in which goods were picked lives in the PickTrace, not here.
struct Allocation {
  std::vector<std::vector<int>> bundles;

  bool operator==(const Allocation&) const = default;

  /// Sorts each bundle and validates completeness: every good of `inst`
  /// appears in exactly one bundle. Throws InputError otherwise.
  static Allocation make_complete(std::vector<std::vector<int>> bundles, const Instance& inst);
};

/// A group-level allocation: one bundle per group, no within-group split.
struct GroupAllocation {
  std::vector<std::vector<int>> bundles;

  bool operator==(const GroupAllocation&) const = default;

  static GroupAllocation make_complete(std::vector<std::vector<int>> bundles,
                                       const Instance& inst);
};

/// Additive value of a bundle through one agent's eyes; empty bundle is 0.
Value bundle_value(const Instance& inst, int viewer, std::span<const int> bundle);

/// Induced group bundle: union of the member bundles, sorted ascending.
std::vector<int> group_bundle(const Allocation& alloc, const Instance& inst, int group);

/// Group utility: sum over members of each member's value for its own bundle.
Value group_utility(const Allocation& alloc, const Instance& inst, int group);

/// Mean over the viewer group's members of their value for the entire
/// target group's induced bundle.
Value averaged_group_view(const Allocation& alloc, const Instance& inst, int viewer_group,
                          int target_group);

}  // namespace fairdiv
