#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/value.hpp"

namespace fairdiv {

enum class Mechanism { Iwrr, SmIwrr };

std::string_view to_string(Mechanism m);
Mechanism mechanism_from_string(std::string_view s);

/// Runs the mechanism on the (possibly repartitioned) instance and returns
/// the per-agent allocation.
Allocation run_mechanism(const Instance& inst, Mechanism mechanism);

/// One unilateral group-membership deviation and its outcome. target_group
/// is -1 when the agent moved to a fresh singleton group (appended last),
/// otherwise an index into the original partition. The recorded inequality
/// is own original value against the deviated bundle with its (for the
/// deviating agent) most valuable good removed.
struct DeviationRecord {
  int agent = -1;
  int target_group = -1;
  Value original_value;
  Value deviated_value;
  std::optional<int> removed_good;
  bool pass = true;
};

struct StabilityResult {
  bool pass = true;
  bool identity_rerun_exact = true;
  std::vector<DeviationRecord> ledger;  // (agent, target) order, singleton first
};

/// Builds the repartitioned instance for one deviation: the agent leaves its
/// group (which is dropped if it becomes empty), weights re-derive from the
/// new sizes, and the valuation class is re-classified from the data.
Instance apply_deviation(const Instance& inst, int agent, int target_group);

/// Re-runs the mechanism under every single-agent deviation (fresh
/// singleton plus each other existing group) and checks that no agent
/// gains more than one good's worth of value. Exactly n*l re-runs.
StabilityResult check_group_epsilon_stability(const Instance& inst, Mechanism mechanism);

}  // namespace fairdiv
