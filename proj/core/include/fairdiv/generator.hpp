#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

/// SplitMix64. Fixed, documented constants so that seeds are portable
/// across implementations and languages:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output = z ^ (z >> 31)
/// Bounded draws are output % n (the bias is irrelevant at the ranges the
/// generator uses and keeps the mapping trivial to reimplement).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t bounded(std::uint64_t n);  // uniform-ish in [0, n), n >= 1

  /// The index-th output of the stream seeded with `seed`; used to derive
  /// per-instance child seeds in batch runs.
  static std::uint64_t stream(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

enum class ValueDistribution { UniformInt, Zipf };

std::string_view to_string(ValueDistribution d);
ValueDistribution value_distribution_from_string(std::string_view s);

enum class PartitionShape { Balanced, Random, Explicit };

std::string_view to_string(PartitionShape p);
PartitionShape partition_shape_from_string(std::string_view s);

/// Everything needed to regenerate one instance deterministically.
struct GeneratorSpec {
  int num_agents = 1;
  int num_goods = 1;
  int num_groups = 1;
  ValuationClass valuation_class = ValuationClass::General;
  ValueDistribution distribution = ValueDistribution::UniformInt;
  long uniform_lo = 0;
  long uniform_hi = 1000;
  double zipf_exponent = 1.0;  // P(value = v) proportional to v^-s, v in [1, cap]
  long zipf_cap = 1000;
  PartitionShape partition = PartitionShape::Balanced;
  std::vector<int> explicit_sizes;
  std::uint64_t seed = 0;
};

/// Deterministic function of the spec (draw order: partition sizes, then
/// valuation rows top to bottom, each left to right). The class constraint
/// holds by construction: all-common replicates one row, group-common one
/// row per group.
Instance generate(const GeneratorSpec& spec);

}  // namespace fairdiv
