#include "fairdiv/oracle.hpp"

#include <gmpxx.h>

#include "fairdiv/audit.hpp"
#include "fairdiv/errors.hpp"

namespace fairdiv {

std::string_view to_string(Notion n) {
  switch (n) {
    case Notion::Ef: return "ef";
    case Notion::Ef1: return "ef1";
    case Notion::Efx: return "efx";
    case Notion::Wef: return "wef";
    case Notion::Wef1: return "wef1";
    case Notion::Wefx: return "wefx";
    case Notion::Pef1: return "pef1";
    case Notion::Iprop1: return "iprop1";
    case Notion::ExanteWef1: return "exante-wef1";
  }
  return "ef";
}

Notion notion_from_string(std::string_view s) {
  if (s == "ef") return Notion::Ef;
  if (s == "ef1") return Notion::Ef1;
  if (s == "efx") return Notion::Efx;
  if (s == "wef") return Notion::Wef;
  if (s == "wef1") return Notion::Wef1;
  if (s == "wefx") return Notion::Wefx;
  if (s == "pef1") return Notion::Pef1;
  if (s == "iprop1") return Notion::Iprop1;
  if (s == "exante-wef1") return Notion::ExanteWef1;
  throw InputError("unknown fairness notion \"" + std::string(s) + "\"");
}

Query::Mode query_mode_from_string(std::string_view s) {
  if (s == "exists") return Query::Mode::Exists;
  if (s == "forall") return Query::Mode::Forall;
  if (s == "count") return Query::Mode::Count;
  throw InputError("unknown oracle mode \"" + std::string(s) + "\"; expected exists, forall or count");
}

std::string_view to_string(Query::Mode m) {
  switch (m) {
    case Query::Mode::Exists: return "exists";
    case Query::Mode::Forall: return "forall";
    case Query::Mode::Count: return "count";
  }
  return "exists";
}

bool satisfies(const Instance& inst, const Allocation& alloc, Notion notion, const Value& gamma) {
  switch (notion) {
    case Notion::Ef: return check_ef(inst, alloc).pass;
    case Notion::Ef1: return check_ef1(inst, alloc).pass;
    case Notion::Efx: return check_efx(inst, alloc).pass;
    case Notion::Wef: return check_wef(inst, alloc).pass;
    case Notion::Wef1: return check_wef1(inst, alloc).pass;
    case Notion::Wefx: return check_wefx(inst, alloc).pass;
    case Notion::Pef1: return check_pef1(inst, alloc).pass;
    case Notion::Iprop1: return check_iprop1(inst, alloc).pass;
    case Notion::ExanteWef1: return check_exante_wef1(inst, alloc, gamma).pass;
  }
  return false;
}

namespace {

void check_budget(const Instance& inst, std::uint64_t budget) {
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), inst.num_agents(), inst.num_goods());
  if (total > budget) {
    throw InputError("enumeration would visit " + total.get_str() + " allocations (" +
                     std::to_string(inst.num_agents()) + "^" +
                     std::to_string(inst.num_goods()) + "), over the budget of " +
                     std::to_string(budget) + "; raise the budget to at least " + total.get_str());
  }
}

}  // namespace

OracleResult enumerate_where(const Instance& inst,
                             const std::function<bool(const Allocation&)>& predicate,
                             Query::Mode mode, std::uint64_t budget) {
  check_budget(inst, budget);
  const int n = inst.num_agents();
  const int m = inst.num_goods();

  OracleResult result;
  result.verdict =
      mode == Query::Mode::Count ? OracleResult::Verdict::Count : OracleResult::Verdict::None;

  // Odometer over good-to-agent assignments; good 0 is the most
  // significant digit so witnesses are lexicographically smallest.
  std::vector<int> assignee(m, 0);
  while (true) {
    std::vector<std::vector<int>> bundles(n);
    for (int g = 0; g < m; ++g) bundles[assignee[g]].push_back(g);
    Allocation alloc{std::move(bundles)};  // complete by construction
    ++result.allocations_examined;

    const bool hit = predicate(alloc);
    if (mode == Query::Mode::Count) {
      if (hit) ++result.count;
    } else if (mode == Query::Mode::Exists ? hit : !hit) {
      result.verdict = OracleResult::Verdict::Exists;
      result.witness = std::move(alloc);
      return result;
    }

    int pos = m - 1;
    while (pos >= 0 && assignee[pos] == n - 1) assignee[pos--] = 0;
    if (pos < 0) break;
    ++assignee[pos];
  }
  return result;
}

OracleResult enumerate_allocations(const Instance& inst, const Query& query,
                                   std::uint64_t budget) {
  for (Notion notion : query.required) {
    if ((notion == Notion::Wef || notion == Notion::Wef1 || notion == Notion::Wefx) &&
        inst.valuation_class() == ValuationClass::General) {
      throw PreconditionError("query requires " + std::string(to_string(notion)) +
                              ", which needs all-common or group-common valuations");
    }
  }
  return enumerate_where(
      inst,
      [&](const Allocation& alloc) {
        for (Notion notion : query.required) {
          if (!satisfies(inst, alloc, notion, query.gamma)) return false;
        }
        return true;
      },
      query.mode, budget);
}

FalsifyOutcome falsify_implication(const GeneratorSpec& family, const std::vector<Notion>& premise,
                                   const std::vector<Notion>& conclusion, int trials,
                                   const Value& gamma, std::uint64_t budget) {
  FalsifyOutcome outcome;
  for (int t = 0; t < trials; ++t) {
    GeneratorSpec spec = family;
    spec.seed = SplitMix64::stream(family.seed, static_cast<std::uint64_t>(t));
    Instance inst = generate(spec);
    OracleResult found;
    try {
      found = enumerate_where(
          inst,
          [&](const Allocation& alloc) {
            for (Notion p : premise) {
              if (!satisfies(inst, alloc, p, gamma)) return false;
            }
            for (Notion c : conclusion) {
              if (!satisfies(inst, alloc, c, gamma)) return true;  // premise holds, conclusion broken
            }
            return false;
          },
          Query::Mode::Exists, budget);
    } catch (const InputError&) {
      outcome.budget_exhausted = true;
      return outcome;  // partial result with trials completed so far
    }
    ++outcome.trials_completed;
    if (found.verdict == OracleResult::Verdict::Exists) {
      outcome.counterexample = Counterexample{spec.seed, inst, std::move(*found.witness)};
      return outcome;
    }
  }
  return outcome;
}

}  // namespace fairdiv
