#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/trace.hpp"
#include "fairdiv/value.hpp"

namespace fairdiv {

/// Deterministic elementary-step counter (comparisons and cursor advances
/// in the selection loops). Used only by the runtime soft checks.
struct RunStats {
  std::uint64_t steps = 0;
};

struct SmResult {
  Allocation allocation;
  PickTrace trace;
  RunStats stats;
};

/// Sequential maximin: repeatedly hand the highest-valued unassigned good to
/// an agent whose current bundle value is minimal.
///
/// Requires all-common valuations. Tie-breaks: lowest good index among
/// equally valued goods, lowest agent index among equally poor agents.
SmResult run_sm(const Instance& inst);

struct IwrrResult {
  Allocation allocation;
  PickTrace trace;
  RunStats stats;
};

/// Iterative weighted round robin. Each step selects the group with the
/// lowest weighted bundle size |B_k|/w_k (exact comparison, ties to the
/// lowest group index), within it the agent with the smallest bundle
/// (ties to the agent whose favourite unassigned good is most valuable,
/// then to the lowest agent index), and that agent takes the unassigned
/// good it values most (ties to the lowest good index).
///
/// Works for every valuation class.
IwrrResult run_iwrr(const Instance& inst);

/// Synthetic goods standing in for the bundles of a prior allocation.
/// values[i] is the source bundle's value minus the minimum bundle value,
/// so at least one representative good is worth 0 and none is negative.
struct RepresentativeGoods {
  std::vector<Value> values;
  std::vector<std::vector<int>> source_bundles;
};

struct SmIwrrResult {
  Allocation allocation;
  PickTrace trace;
  RunStats stats;
  Allocation sm_allocation;
  RepresentativeGoods representatives;
};

/// Two-phase procedure: run SM, collapse each SM bundle into one
/// representative good, reallocate the representative goods with IWRR
/// (one per agent), then expand them back into their source bundles.
/// The output bundles are a permutation of the SM bundles.
///
/// Requires all-common valuations.
SmIwrrResult run_sm_iwrr(const Instance& inst);

struct WeightedGreedyResult {
  GroupAllocation allocation;
  PickTrace trace;
  RunStats stats;
};

/// Group-level greedy: goods in descending common value, each handed to a
/// group with minimal weighted bundle value v(B_k)/w_k. Produces no
/// within-group split. Requires all-common valuations.
WeightedGreedyResult run_weighted_greedy(const Instance& inst);

struct StructureVerdict {
  bool ok = true;
  int violating_step = -1;  // step of the offending event when !ok
  std::string detail;
};

/// Verifies the consecutive-selection structure of an IWRR trace restricted
/// to groups `k` and `k2` (selections by other groups are ignored): the
/// lighter group never picks twice in a row, and every run of the heavier
/// group between two lighter-group picks has length floor(W/w) or
/// ceil(W/w), where W and w are the heavier and lighter weights. The
/// opening run (nothing picked by the lighter group yet) and the final run
/// (goods ran out) are only bounded above by ceil(W/w).
StructureVerdict check_trace_structure(const PickTrace& trace, const Instance& inst, int k,
                                       int k2);

}  // namespace fairdiv
