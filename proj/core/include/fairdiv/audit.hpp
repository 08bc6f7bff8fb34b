#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/value.hpp"

namespace fairdiv {

/// Evidence for a failed envy check. `envious`/`envied` are agent indices
/// for the individual notions and group indices for the weighted ones.
/// `own` and `other` are the two sides of the violated inequality
/// (own < other), already weighted and with the removal applied, so the
/// witness re-checks standalone.
struct EnvyWitness {
  int envious = -1;
  int envied = -1;
  std::optional<int> removed_good;
  Value own;
  Value other;
};

struct Verdict {
  bool pass = true;
  std::optional<EnvyWitness> witness;
};

/// Evidence for a failed proportionality check; `group` is -1 for the
/// whole-good-set notion. own_plus_good < target.
struct ShortfallWitness {
  int agent = -1;
  int group = -1;
  std::optional<int> added_good;
  Value own_plus_good;
  Value target;
};

struct ProportionVerdict {
  bool pass = true;
  std::optional<ShortfallWitness> witness;
};

/// Smallest gamma at which the ex-ante weighted check passes for every
/// group pair; not finite when some group has utility 0 but positive
/// residual envy (no gamma is large enough).
struct GammaBound {
  bool finite = true;
  Value value;
};

struct ExanteVerdict {
  Value gamma;
  bool pass = true;
  std::optional<EnvyWitness> witness;
  GammaBound min_feasible;
};

// Individual notions; defined for every valuation class.
Verdict check_ef(const Instance& inst, const Allocation& alloc);
Verdict check_ef1(const Instance& inst, const Allocation& alloc);
Verdict check_efx(const Instance& inst, const Allocation& alloc);

// Weighted group notions; require a well-defined per-group valuation, so a
// declared-general instance is rejected with a PreconditionError pointing
// at the ex-ante checker.
Verdict check_wef(const Instance& inst, const Allocation& alloc);
Verdict check_wef1(const Instance& inst, const Allocation& alloc);
Verdict check_wefx(const Instance& inst, const Allocation& alloc);

// Group-level variants for allocations with no within-group split.
Verdict check_wef_groups(const Instance& inst, const GroupAllocation& alloc);
Verdict check_wef1_groups(const Instance& inst, const GroupAllocation& alloc);
Verdict check_wefx_groups(const Instance& inst, const GroupAllocation& alloc);

/// Ex-ante weighted envy check relaxed by 1/gamma; gamma must be positive.
/// The removed good maximizes the viewer group's summed value.
ExanteVerdict check_exante_wef1(const Instance& inst, const Allocation& alloc, const Value& gamma);
GammaBound min_feasible_gamma(const Instance& inst, const Allocation& alloc);

ProportionVerdict check_pef1(const Instance& inst, const Allocation& alloc);
ProportionVerdict check_iprop1(const Instance& inst, const Allocation& alloc);

/// Full audit of an (instance, allocation) pair. Weighted notions are
/// skipped (with a reason) on declared-general instances; everything else
/// is always present. Implication-lattice violations between the computed
/// verdicts indicate a checker bug and throw std::logic_error.
struct FairnessReport {
  std::optional<Verdict> ef, ef1, efx;
  std::optional<Verdict> wef, wef1, wefx;
  std::optional<ExanteVerdict> exante_wef1;
  std::optional<ProportionVerdict> pef1, iprop1;
  std::string wef_skip_reason;
  std::string individual_skip_reason;
};

FairnessReport audit_all(const Instance& inst, const Allocation& alloc,
                         const Value& gamma = Value(3));

/// Audit of a group-level allocation: only the weighted notions apply.
FairnessReport audit_group_allocation(const Instance& inst, const GroupAllocation& alloc);

}  // namespace fairdiv
