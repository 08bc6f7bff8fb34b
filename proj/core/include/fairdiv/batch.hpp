#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairdiv/audit.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

/// A family of instances for batch certification. When randomize_sizes is
/// set, each instance draws its sizes from its child seed within the given
/// bounds; otherwise every instance uses the base spec's sizes. Child seed
/// i is SplitMix64::stream(base.seed, i).
struct BatchSpec {
  GeneratorSpec base;
  int count = 0;
  bool randomize_sizes = false;
  int min_agents = 1, max_agents = 8;
  int min_goods = 1, max_goods = 20;
  int max_groups = 4;
};

/// The realized spec regenerates the instance exactly: generate(spec).
struct InstanceReport {
  std::uint64_t child_seed = 0;
  GeneratorSpec spec;
  std::vector<std::pair<std::string, bool>> properties;
  std::optional<GammaBound> min_feasible;
};

struct AlgoTiming {
  std::uint64_t calls = 0;
  double seconds = 0.0;
};

struct GammaFrontier {
  bool finite = true;
  Value max_min_feasible;  // meaningful when finite
  std::uint64_t witness_child_seed = 0;
  GeneratorSpec witness_spec;
};

struct BatchReport {
  BatchSpec spec;
  bool all_pass = true;
  std::vector<InstanceReport> instances;
  std::optional<GammaFrontier> gamma_frontier;
  std::map<std::string, AlgoTiming> timing;  // wall clock, reported but never asserted
};

/// Realizes the i-th instance of a batch (sizes from the child seed when
/// randomized) and returns the exact spec used.
GeneratorSpec realize_spec(const BatchSpec& batch, int index);

/// Runs every algorithm applicable to the family's valuation class on each
/// instance, audits the outputs against the properties the algorithms are
/// supposed to guarantee, and verifies the round-robin trace structure for
/// every group pair. Any property failure clears all_pass; the report
/// carries enough seeds to reproduce each failure.
BatchReport certify_batch(const BatchSpec& spec);

/// Largest observed min-feasible gamma of the round-robin allocation across
/// the batch. Values above 3 (or an infinite bound) mean a guarantee
/// violation and clear `ok`.
struct FrontierResult {
  bool ok = true;
  GammaFrontier frontier;
  int count = 0;
};
FrontierResult gamma_frontier(const BatchSpec& spec);

/// Doubling-ladder runtime measurement for the two-phase algorithm
/// (all-common families). Deterministic step counts plus wall time;
/// informational only.
struct LadderPoint {
  int goods = 0;
  std::uint64_t steps = 0;
  double seconds = 0.0;
};
struct LadderReport {
  std::vector<LadderPoint> points;
  double step_log_slope = 0.0;  // least-squares slope in log2-log2 space
  double time_log_slope = 0.0;
};
LadderReport runtime_ladder(const GeneratorSpec& base, const std::vector<int>& good_counts,
                            int repetitions = 3);

}  // namespace fairdiv
