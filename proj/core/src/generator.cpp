#include "fairdiv/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fairdiv/errors.hpp"

namespace fairdiv {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
  if (n == 0) throw InputError("bounded draw needs a positive range");
  return next() % n;
}

std::uint64_t SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng(seed + index * 0x9E3779B97F4A7C15ULL);
  return rng.next();
}

std::string_view to_string(ValueDistribution d) {
  return d == ValueDistribution::UniformInt ? "uniform" : "zipf";
}

ValueDistribution value_distribution_from_string(std::string_view s) {
  if (s == "uniform") return ValueDistribution::UniformInt;
  if (s == "zipf") return ValueDistribution::Zipf;
  throw InputError("unknown value distribution \"" + std::string(s) +
                   "\"; expected uniform or zipf");
}

std::string_view to_string(PartitionShape p) {
  switch (p) {
    case PartitionShape::Balanced: return "balanced";
    case PartitionShape::Random: return "random";
    case PartitionShape::Explicit: return "explicit";
  }
  return "balanced";
}

PartitionShape partition_shape_from_string(std::string_view s) {
  if (s == "balanced") return PartitionShape::Balanced;
  if (s == "random") return PartitionShape::Random;
  if (s == "explicit") return PartitionShape::Explicit;
  throw InputError("unknown partition shape \"" + std::string(s) +
                   "\"; expected balanced, random or explicit");
}

namespace {

std::vector<int> partition_sizes(const GeneratorSpec& spec, SplitMix64& rng) {
  const int n = spec.num_agents;
  const int l = spec.num_groups;
  switch (spec.partition) {
    case PartitionShape::Balanced: {
      std::vector<int> sizes(l, n / l);
      for (int k = 0; k < n % l; ++k) ++sizes[k];
      return sizes;
    }
    case PartitionShape::Random: {
      // l-1 distinct cut points in [1, n-1] by partial Fisher-Yates.
      std::vector<int> candidates(n - 1);
      std::iota(candidates.begin(), candidates.end(), 1);
      std::vector<int> cuts;
      for (int k = 0; k < l - 1; ++k) {
        std::uint64_t j = k + rng.bounded(candidates.size() - k);
        std::swap(candidates[k], candidates[j]);
        cuts.push_back(candidates[k]);
      }
      cuts.push_back(0);
      cuts.push_back(n);
      std::sort(cuts.begin(), cuts.end());
      std::vector<int> sizes;
      for (size_t k = 0; k + 1 < cuts.size(); ++k) sizes.push_back(cuts[k + 1] - cuts[k]);
      return sizes;
    }
    case PartitionShape::Explicit: {
      if (static_cast<int>(spec.explicit_sizes.size()) != l) {
        throw InputError("explicit partition needs exactly one size per group");
      }
      int total = 0;
      for (int s : spec.explicit_sizes) {
        if (s < 1) throw InputError("explicit group sizes must be positive");
        total += s;
      }
      if (total != n) throw InputError("explicit group sizes must sum to the agent count");
      return spec.explicit_sizes;
    }
  }
  throw InputError("unhandled partition shape");
}

std::vector<long> zipf_cumulative(double exponent, long cap) {
  // Integer weight table scaled from the continuous law; sampling stays
  // integer-only after this point.
  std::vector<long> cumulative(cap);
  long double running = 0;
  for (long v = 1; v <= cap; ++v) {
    long double w = std::pow(static_cast<long double>(v), -static_cast<long double>(exponent));
    running += w;
    cumulative[v - 1] = static_cast<long>(std::llround(running * 1e12L));
  }
  return cumulative;
}

std::vector<Value> draw_row(const GeneratorSpec& spec, SplitMix64& rng,
                            const std::vector<long>& zipf_table) {
  std::vector<Value> row;
  row.reserve(spec.num_goods);
  for (int g = 0; g < spec.num_goods; ++g) {
    if (spec.distribution == ValueDistribution::UniformInt) {
      long span = spec.uniform_hi - spec.uniform_lo + 1;
      row.emplace_back(static_cast<long>(spec.uniform_lo +
                                         static_cast<long>(rng.bounded(span))));
    } else {
      long ticket = static_cast<long>(rng.bounded(zipf_table.back()));
      auto it = std::upper_bound(zipf_table.begin(), zipf_table.end(), ticket);
      row.emplace_back(static_cast<long>(it - zipf_table.begin()) + 1);
    }
  }
  return row;
}

}  // namespace

Instance generate(const GeneratorSpec& spec) {
  if (spec.num_agents < 1) throw InputError("generator needs at least one agent");
  if (spec.num_goods < 1) throw InputError("generator needs at least one good");
  if (spec.num_groups < 1 || spec.num_groups > spec.num_agents) {
    throw InputError("group count must be between 1 and the agent count");
  }
  if (spec.distribution == ValueDistribution::UniformInt) {
    if (spec.uniform_lo < 0 || spec.uniform_hi < spec.uniform_lo) {
      throw InputError("uniform range must satisfy 0 <= lo <= hi");
    }
  } else if (spec.zipf_cap < 1 || spec.zipf_exponent < 0) {
    throw InputError("zipf needs cap >= 1 and a non-negative exponent");
  }

  SplitMix64 rng(spec.seed);
  std::vector<int> sizes = partition_sizes(spec, rng);

  std::vector<std::vector<int>> groups;
  int next_agent = 0;
  for (int size : sizes) {
    std::vector<int> members(size);
    std::iota(members.begin(), members.end(), next_agent);
    next_agent += size;
    groups.push_back(std::move(members));
  }

  std::vector<long> zipf_table;
  if (spec.distribution == ValueDistribution::Zipf) {
    zipf_table = zipf_cumulative(spec.zipf_exponent, spec.zipf_cap);
  }

  std::vector<std::vector<Value>> valuations(spec.num_agents);
  switch (spec.valuation_class) {
    case ValuationClass::AllCommon: {
      std::vector<Value> row = draw_row(spec, rng, zipf_table);
      for (auto& r : valuations) r = row;
      break;
    }
    case ValuationClass::GroupCommon: {
      for (size_t k = 0; k < groups.size(); ++k) {
        std::vector<Value> row = draw_row(spec, rng, zipf_table);
        for (int agent : groups[k]) valuations[agent] = row;
      }
      break;
    }
    case ValuationClass::General: {
      for (auto& r : valuations) r = draw_row(spec, rng, zipf_table);
      break;
    }
  }

  std::vector<std::string> agent_names, good_names;
  for (int i = 1; i <= spec.num_agents; ++i) agent_names.push_back("p" + std::to_string(i));
  for (int g = 1; g <= spec.num_goods; ++g) good_names.push_back("g" + std::to_string(g));

  return Instance(std::move(agent_names), std::move(good_names), std::move(groups),
                  std::move(valuations), spec.valuation_class);
}

}  // namespace fairdiv
