#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/value.hpp"

namespace fairdiv {
namespace fixtures {

/// The shipped counterexample instances, parameterized by the large
/// constant c. Shipped files use c = 100.
///
/// prop2:      groups {p1,p2},{p3,p4}; all-common goods worth c,1,1,1.
/// prop3a:     groups {p1,p2},{p3,p4}; all-common goods worth c,c,1,1.
/// prop3b:     groups {p1,p2},{p3};    all-common goods worth c,1,1.
/// example_s2: groups {p1},{p2,p3};    five all-common goods worth c each.
Instance prop2(const Value& c);
Instance prop3a(const Value& c);
Instance prop3b(const Value& c);
Instance example_s2(const Value& c);

/// The worked allocation for example_s2: p1 holds one good, p2 and p3 two
/// each. Audits individually envy-free up to one good but fails both
/// weighted group notions.
Allocation example_s2_allocation(const Instance& inst);

inline const std::int64_t kDefaultC = 100;

/// Default sweep for the constant c. The certified claims flip exactly at
/// the thresholds derivable from the defining inequalities, so the sweep
/// includes c = 2 to pin the boundary as well as very large values.
std::vector<Value> default_c_sweep();

/// One exhaustively checked claim about a fixture at a specific c.
/// `expected` encodes the threshold-aware truth value; `ok` records whether
/// the enumeration (or audit) agreed.
struct Certification {
  std::string fixture;
  Value c;
  std::string claim;
  bool expected = false;
  bool actual = false;
  bool ok = false;
  std::uint64_t allocations_examined = 0;
};

/// Runs every fixture certification for each c in the sweep via the
/// brute-force oracle. All claims hold iff every entry has ok == true.
std::vector<Certification> certify_all(const std::vector<Value>& c_sweep = default_c_sweep());

}  // namespace fixtures
}  // namespace fairdiv
