#include "fairdiv/audit.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

enum class Removal { None, ViewerMax, ViewerMin };

// For additive valuations the "exists g" quantifier is decided by removing
// the viewer-max-valued good and the "for all g" quantifier by the
// viewer-min-valued one; one comparison per ordered pair.
Verdict envy_family(int count, const std::vector<Value>& own,
                    const std::vector<std::vector<int>>& envied_bundles,
                    const std::vector<int>& scale_own, const std::vector<int>& scale_envied,
                    const Instance& inst, const std::vector<int>& viewer_agent, Removal removal) {
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (a == b) continue;
      const auto& bundle = envied_bundles[b];
      if (bundle.empty()) continue;  // an empty bundle is never envied
      Value envied = bundle_value(inst, viewer_agent[a], bundle);
      std::optional<int> removed;
      if (removal != Removal::None) {
        int pick = bundle.front();
        for (int g : bundle) {
          const Value& v = inst.value(viewer_agent[a], g);
          if (removal == Removal::ViewerMax ? v > inst.value(viewer_agent[a], pick)
                                            : v < inst.value(viewer_agent[a], pick)) {
            pick = g;
          }
        }
        envied -= inst.value(viewer_agent[a], pick);
        removed = pick;
      }
      // own/scale_own ≥ envied/scale_envied, cross-multiplied.
      if (own[a] * Value(scale_envied[b]) < envied * Value(scale_own[a])) {
        return {false,
                EnvyWitness{a, b, removed, own[a] / Value(scale_own[a]),
                            envied / Value(scale_envied[b])}};
      }
    }
  }
  return {};
}

Verdict individual_family(const Instance& inst, const Allocation& alloc, Removal removal) {
  const int n = inst.num_agents();
  std::vector<Value> own(n);
  std::vector<int> viewer(n), unit(n, 1);
  for (int i = 0; i < n; ++i) {
    own[i] = bundle_value(inst, i, alloc.bundles[i]);
    viewer[i] = i;
  }
  return envy_family(n, own, alloc.bundles, unit, unit, inst, viewer, removal);
}

int group_row_agent(const Instance& inst, int group) {
  // Valid whenever rows are common within the group.
  return inst.group_members(group).front();
}

void require_group_valuations(const Instance& inst) {
  if (inst.valuation_class() == ValuationClass::General) {
    throw PreconditionError(
        "weighted envy checks need a common valuation per group; this instance is declared "
        "general, use the ex-ante checker instead");
  }
}

Verdict weighted_family(const Instance& inst, const std::vector<std::vector<int>>& group_bundles,
                        Removal removal) {
  require_group_valuations(inst);
  const int l = inst.num_groups();
  std::vector<Value> utility(l);
  std::vector<int> viewer(l), weights(l);
  for (int k = 0; k < l; ++k) {
    viewer[k] = group_row_agent(inst, k);
    weights[k] = inst.weight(k);
    utility[k] = bundle_value(inst, viewer[k], group_bundles[k]);
  }
  return envy_family(l, utility, group_bundles, weights, weights, inst, viewer, removal);
}

std::vector<std::vector<int>> induced_group_bundles(const Instance& inst,
                                                    const Allocation& alloc) {
  std::vector<std::vector<int>> bundles(inst.num_groups());
  for (int k = 0; k < inst.num_groups(); ++k) bundles[k] = group_bundle(alloc, inst, k);
  return bundles;
}

struct ExantePair {
  Value lhs;       // v_{T_k}(B_k) / w_k
  Value residual;  // v̄_{T_k}(B_{k'} \ {g*}) / w_{k'}, before the 1/gamma relaxation
  int envious, envied;
  std::optional<int> removed_good;
};

std::vector<ExantePair> exante_pairs(const Instance& inst, const Allocation& alloc) {
  const int l = inst.num_groups();
  std::vector<std::vector<int>> bundles = induced_group_bundles(inst, alloc);
  std::vector<Value> utility(l);
  for (int k = 0; k < l; ++k) utility[k] = group_utility(alloc, inst, k);

  std::vector<ExantePair> pairs;
  for (int k = 0; k < l; ++k) {
    for (int k2 = 0; k2 < l; ++k2) {
      if (k == k2 || bundles[k2].empty()) continue;
      // Column sums of the viewer group's valuations over the envied bundle;
      // the optimal removal maximizes the summed value.
      Value total;
      Value best;
      int best_good = -1;
      for (int g : bundles[k2]) {
        Value column;
        for (int i : inst.group_members(k)) column += inst.value(i, g);
        total += column;
        if (best_good == -1 || column > best) {
          best = column;
          best_good = g;
        }
      }
      Value residual = (total - best) / (Value(inst.weight(k)) * Value(inst.weight(k2)));
      pairs.push_back({utility[k] / Value(inst.weight(k)), residual, k, k2, best_good});
    }
  }
  return pairs;
}

}  // namespace

Verdict check_ef(const Instance& inst, const Allocation& alloc) {
  return individual_family(inst, alloc, Removal::None);
}
Verdict check_ef1(const Instance& inst, const Allocation& alloc) {
  return individual_family(inst, alloc, Removal::ViewerMax);
}
Verdict check_efx(const Instance& inst, const Allocation& alloc) {
  return individual_family(inst, alloc, Removal::ViewerMin);
}

Verdict check_wef(const Instance& inst, const Allocation& alloc) {
  return weighted_family(inst, induced_group_bundles(inst, alloc), Removal::None);
}
Verdict check_wef1(const Instance& inst, const Allocation& alloc) {
  return weighted_family(inst, induced_group_bundles(inst, alloc), Removal::ViewerMax);
}
Verdict check_wefx(const Instance& inst, const Allocation& alloc) {
  return weighted_family(inst, induced_group_bundles(inst, alloc), Removal::ViewerMin);
}

Verdict check_wef_groups(const Instance& inst, const GroupAllocation& alloc) {
  return weighted_family(inst, alloc.bundles, Removal::None);
}
Verdict check_wef1_groups(const Instance& inst, const GroupAllocation& alloc) {
  return weighted_family(inst, alloc.bundles, Removal::ViewerMax);
}
Verdict check_wefx_groups(const Instance& inst, const GroupAllocation& alloc) {
  return weighted_family(inst, alloc.bundles, Removal::ViewerMin);
}

ExanteVerdict check_exante_wef1(const Instance& inst, const Allocation& alloc,
                                const Value& gamma) {
  if (!gamma.is_positive()) throw InputError("gamma must be positive");
  ExanteVerdict verdict;
  verdict.gamma = gamma;
  verdict.min_feasible = min_feasible_gamma(inst, alloc);
  for (const ExantePair& p : exante_pairs(inst, alloc)) {
    if (gamma * p.lhs < p.residual) {
      verdict.pass = false;
      verdict.witness =
          EnvyWitness{p.envious, p.envied, p.removed_good, p.lhs, p.residual / gamma};
      break;
    }
  }
  return verdict;
}

GammaBound min_feasible_gamma(const Instance& inst, const Allocation& alloc) {
  // Closed form per pair: the ratio of the two sides after the optimal
  // removal, maximized over pairs. 0 means every positive gamma passes.
  GammaBound bound{true, Value(0)};
  for (const ExantePair& p : exante_pairs(inst, alloc)) {
    if (p.residual.is_zero()) continue;
    if (p.lhs.is_zero()) return {false, Value(0)};
    Value needed = p.residual / p.lhs;
    if (needed > bound.value) bound.value = needed;
  }
  return bound;
}

namespace {

ProportionVerdict proportional_family(const Instance& inst, const Allocation& alloc,
                                      bool per_group) {
  const int n = inst.num_agents();
  std::vector<std::vector<int>> targets;
  if (per_group) {
    targets = induced_group_bundles(inst, alloc);
  } else {
    std::vector<int> all(inst.num_goods());
    for (int g = 0; g < inst.num_goods(); ++g) all[g] = g;
    targets.push_back(std::move(all));
  }
  for (int i = 0; i < n; ++i) {
    Value own = bundle_value(inst, i, alloc.bundles[i]);
    const auto& mine = alloc.bundles[i];
    for (size_t t = 0; t < targets.size(); ++t) {
      int divisor = per_group ? inst.weight(static_cast<int>(t)) : n;
      Value target = bundle_value(inst, i, targets[t]) / Value(divisor);
      // Best good outside the agent's own bundle; when there is none the
      // bare bundle has to reach the target on its own.
      std::optional<int> best;
      for (int g : targets[t]) {
        if (std::binary_search(mine.begin(), mine.end(), g)) continue;
        if (!best || inst.value(i, g) > inst.value(i, *best)) best = g;
      }
      Value reached = own + (best ? inst.value(i, *best) : Value(0));
      if (reached < target) {
        return {false, ShortfallWitness{i, per_group ? static_cast<int>(t) : -1, best, reached,
                                        target}};
      }
    }
  }
  return {};
}

void enforce_lattice(const FairnessReport& r, const Instance& inst) {
  auto implies = [](const std::optional<Verdict>& a, const std::optional<Verdict>& b) {
    return !a || !b || !a->pass || b->pass;
  };
  if (!implies(r.ef, r.efx) || !implies(r.efx, r.ef1)) {
    throw std::logic_error("audit bug: individual envy implication lattice violated");
  }
  if (!implies(r.wef, r.wefx) || !implies(r.wefx, r.wef1)) {
    throw std::logic_error("audit bug: weighted envy implication lattice violated");
  }
  if (r.ef1 && r.pef1 && r.ef1->pass && !r.pef1->pass) {
    throw std::logic_error("audit bug: ef1 held but pef1 failed");
  }
  if (r.pef1 && r.iprop1 && r.pef1->pass && !r.iprop1->pass) {
    bool equal_sizes = true;
    for (int k = 1; k < inst.num_groups(); ++k) {
      if (inst.weight(k) != inst.weight(0)) equal_sizes = false;
    }
    if (equal_sizes) {
      throw std::logic_error("audit bug: pef1 held with equal group sizes but iprop1 failed");
    }
  }
}

}  // namespace

ProportionVerdict check_pef1(const Instance& inst, const Allocation& alloc) {
  return proportional_family(inst, alloc, true);
}

ProportionVerdict check_iprop1(const Instance& inst, const Allocation& alloc) {
  return proportional_family(inst, alloc, false);
}

FairnessReport audit_all(const Instance& inst, const Allocation& alloc, const Value& gamma) {
  FairnessReport report;
  report.ef = check_ef(inst, alloc);
  report.ef1 = check_ef1(inst, alloc);
  report.efx = check_efx(inst, alloc);
  if (inst.valuation_class() == ValuationClass::General) {
    report.wef_skip_reason =
        "declared-general valuations have no per-group valuation; see exante_wef1";
  } else {
    report.wef = check_wef(inst, alloc);
    report.wef1 = check_wef1(inst, alloc);
    report.wefx = check_wefx(inst, alloc);
  }
  report.exante_wef1 = check_exante_wef1(inst, alloc, gamma);
  report.pef1 = check_pef1(inst, alloc);
  report.iprop1 = check_iprop1(inst, alloc);
  enforce_lattice(report, inst);
  return report;
}

FairnessReport audit_group_allocation(const Instance& inst, const GroupAllocation& alloc) {
  FairnessReport report;
  report.individual_skip_reason = "group-level allocation has no per-agent bundles";
  report.wef = check_wef_groups(inst, alloc);
  report.wef1 = check_wef1_groups(inst, alloc);
  report.wefx = check_wefx_groups(inst, alloc);
  enforce_lattice(report, inst);
  return report;
}

}  // namespace fairdiv
