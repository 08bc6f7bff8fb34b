#pragma once

#include <string_view>
#include <vector>

namespace fairdiv {

enum class PickReason {
  Sm,              // sequential-maximin phase
  Iwrr,            // weighted round-robin pick by an individual agent
  WeightedGreedy,  // group-level greedy pick (no individual agent)
  Representative,  // round-robin pick of a representative good (good = source bundle index)
};

std::string_view to_string(PickReason r);

/// One selection made by a sequential algorithm.
///
/// `round` counts the picker's own prior selections (the group's prior
/// selections for group-level picks). `agent` is -1 for group-level picks.
/// For Representative events `good` indexes the source bundle the
/// representative good stands for, not a real good.
struct PickEvent {
  int step = 0;
  int round = 0;
  int group = 0;
  int agent = 0;
  int good = 0;
  PickReason reason = PickReason::Iwrr;

  bool operator==(const PickEvent&) const = default;
};

/// Ordered record of every selection in one algorithm run.
struct PickTrace {
  std::vector<PickEvent> events;

  bool operator==(const PickTrace&) const = default;
};

}  // namespace fairdiv
