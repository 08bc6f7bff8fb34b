#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/value.hpp"

namespace fairdiv {

enum class Notion { Ef, Ef1, Efx, Wef, Wef1, Wefx, Pef1, Iprop1, ExanteWef1 };

std::string_view to_string(Notion n);
Notion notion_from_string(std::string_view s);

/// True when the allocation satisfies the notion on this instance; gamma is
/// only read for the ex-ante notion. Weighted notions inherit the audit
/// module's precondition (no declared-general instances).
bool satisfies(const Instance& inst, const Allocation& alloc, Notion notion, const Value& gamma);

struct Query {
  enum class Mode { Exists, Forall, Count };
  std::vector<Notion> required;
  Mode mode = Mode::Exists;
  Value gamma = Value(3);
};

Query::Mode query_mode_from_string(std::string_view s);
std::string_view to_string(Query::Mode m);

/// Exhaustive verdict over all n^m complete allocations.
///   Exists mode: verdict Exists with the lexicographically first witness,
///     or None after exhausting the space.
///   Forall mode: verdict None when every allocation satisfies the query
///     (no counterexample), or Exists with the first counterexample.
///   Count mode: verdict Count with the number of satisfying allocations.
struct OracleResult {
  enum class Verdict { Exists, None, Count };
  Verdict verdict = Verdict::None;
  std::optional<Allocation> witness;
  std::uint64_t count = 0;
  std::uint64_t allocations_examined = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Enumerates assignments in lexicographic good-to-agent order (good 1 is
/// the most significant digit). Refuses with an InputError naming the
/// required budget when n^m exceeds `budget`.
OracleResult enumerate_allocations(const Instance& inst, const Query& query,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

/// Same enumeration with an arbitrary predicate; the building block for
/// the fixture certifications.
OracleResult enumerate_where(const Instance& inst,
                             const std::function<bool(const Allocation&)>& predicate,
                             Query::Mode mode, std::uint64_t budget = kDefaultEnumerationBudget);

struct Counterexample {
  std::uint64_t seed = 0;  // regenerate with the family spec and this seed
  Instance instance;
  Allocation allocation;
};

struct FalsifyOutcome {
  std::optional<Counterexample> counterexample;
  int trials_completed = 0;
  bool budget_exhausted = false;
};

/// Searches random instances drawn from `family` (child seed i is
/// SplitMix64::stream(family.seed, i)) for an allocation satisfying every
/// premise notion while failing some conclusion notion. Stops early on the
/// first instance whose enumeration would exceed the budget.
FalsifyOutcome falsify_implication(const GeneratorSpec& family, const std::vector<Notion>& premise,
                                   const std::vector<Notion>& conclusion, int trials,
                                   const Value& gamma = Value(3),
                                   std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace fairdiv
