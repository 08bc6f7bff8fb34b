#pragma once

// Test-only helpers: compact instance builders, random allocations, and a
// naive fairness oracle that evaluates the definitions by direct quantifier
// loops. The naive oracle deliberately shares no code with the audit
// module's single-comparison reductions.

#include <string>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/audit.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/instance.hpp"

namespace helpers {

using fairdiv::Allocation;
using fairdiv::Instance;
using fairdiv::Value;

inline std::vector<std::string> names(const std::string& prefix, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline Instance make(std::vector<std::vector<long>> rows, std::vector<std::vector<int>> groups,
                     fairdiv::ValuationClass cls) {
  int n = static_cast<int>(rows.size());
  int m = static_cast<int>(rows[0].size());
  std::vector<std::vector<Value>> matrix;
  for (const auto& row : rows) {
    std::vector<Value> r;
    for (long v : row) r.emplace_back(v);
    matrix.push_back(std::move(r));
  }
  return Instance(names("p", n), names("g", m), std::move(groups), std::move(matrix), cls);
}

inline Instance all_common(std::vector<long> row, std::vector<std::vector<int>> groups) {
  int n = 0;
  for (const auto& g : groups) n += static_cast<int>(g.size());
  std::vector<std::vector<long>> rows(n, row);
  return make(std::move(rows), std::move(groups), fairdiv::ValuationClass::AllCommon);
}

inline Allocation random_allocation(const Instance& inst, fairdiv::SplitMix64& rng) {
  std::vector<std::vector<int>> bundles(inst.num_agents());
  for (int g = 0; g < inst.num_goods(); ++g) {
    bundles[rng.bounded(inst.num_agents())].push_back(g);
  }
  return Allocation::make_complete(std::move(bundles), inst);
}

// ---- naive oracle -------------------------------------------------------

inline Value value_of(const Instance& inst, int viewer, const std::vector<int>& bundle,
                      int skip = -1) {
  Value total;
  for (int g : bundle) {
    if (g == skip) continue;
    total += inst.value(viewer, g);
  }
  return total;
}

inline bool naive_ef(const Instance& inst, const Allocation& a) {
  for (int i = 0; i < inst.num_agents(); ++i) {
    for (int j = 0; j < inst.num_agents(); ++j) {
      if (i == j) continue;
      if (value_of(inst, i, a.bundles[i]) < value_of(inst, i, a.bundles[j])) return false;
    }
  }
  return true;
}

inline bool naive_ef1(const Instance& inst, const Allocation& a) {
  for (int i = 0; i < inst.num_agents(); ++i) {
    for (int j = 0; j < inst.num_agents(); ++j) {
      if (i == j || a.bundles[j].empty()) continue;
      bool some = false;
      for (int g : a.bundles[j]) {
        if (value_of(inst, i, a.bundles[i]) >= value_of(inst, i, a.bundles[j], g)) {
          some = true;
          break;
        }
      }
      if (!some) return false;
    }
  }
  return true;
}

inline bool naive_efx(const Instance& inst, const Allocation& a) {
  for (int i = 0; i < inst.num_agents(); ++i) {
    for (int j = 0; j < inst.num_agents(); ++j) {
      if (i == j) continue;
      for (int g : a.bundles[j]) {
        if (value_of(inst, i, a.bundles[i]) < value_of(inst, i, a.bundles[j], g)) return false;
      }
    }
  }
  return true;
}

enum class WefKind { Exact, UpToOne, UpToAny };

inline bool naive_wef(const Instance& inst, const std::vector<std::vector<int>>& group_bundles,
                      WefKind kind) {
  const int l = inst.num_groups();
  for (int k = 0; k < l; ++k) {
    int viewer = inst.group_members(k).front();
    Value own = value_of(inst, viewer, group_bundles[k]) / Value(inst.weight(k));
    for (int k2 = 0; k2 < l; ++k2) {
      if (k == k2) continue;
      const auto& envied = group_bundles[k2];
      Value w2(inst.weight(k2));
      if (kind == WefKind::Exact) {
        if (own < value_of(inst, viewer, envied) / w2) return false;
      } else if (kind == WefKind::UpToOne) {
        if (envied.empty()) continue;
        bool some = false;
        for (int g : envied) {
          if (own >= value_of(inst, viewer, envied, g) / w2) {
            some = true;
            break;
          }
        }
        if (!some) return false;
      } else {
        for (int g : envied) {
          if (own < value_of(inst, viewer, envied, g) / w2) return false;
        }
      }
    }
  }
  return true;
}

inline std::vector<std::vector<int>> induced(const Instance& inst, const Allocation& a) {
  std::vector<std::vector<int>> bundles(inst.num_groups());
  for (int k = 0; k < inst.num_groups(); ++k) bundles[k] = fairdiv::group_bundle(a, inst, k);
  return bundles;
}

inline bool naive_wef1(const Instance& inst, const Allocation& a) {
  return naive_wef(inst, induced(inst, a), WefKind::UpToOne);
}
inline bool naive_wefx(const Instance& inst, const Allocation& a) {
  return naive_wef(inst, induced(inst, a), WefKind::UpToAny);
}

inline bool naive_exante(const Instance& inst, const Allocation& a, const Value& gamma) {
  auto bundles = induced(inst, a);
  for (int k = 0; k < inst.num_groups(); ++k) {
    Value own = fairdiv::group_utility(a, inst, k) / Value(inst.weight(k));
    for (int k2 = 0; k2 < inst.num_groups(); ++k2) {
      if (k == k2) continue;
      if (bundles[k2].empty()) continue;
      bool some = false;
      for (int g : bundles[k2]) {
        Value mean;
        for (int i : inst.group_members(k)) mean += value_of(inst, i, bundles[k2], g);
        mean /= Value(inst.weight(k));
        if (own >= mean / (gamma * Value(inst.weight(k2)))) {
          some = true;
          break;
        }
      }
      if (!some) return false;
    }
  }
  return true;
}

inline bool naive_pef1(const Instance& inst, const Allocation& a) {
  auto bundles = induced(inst, a);
  for (int i = 0; i < inst.num_agents(); ++i) {
    Value own = value_of(inst, i, a.bundles[i]);
    for (int k = 0; k < inst.num_groups(); ++k) {
      Value target = value_of(inst, i, bundles[k]) / Value(inst.weight(k));
      if (own >= target) continue;
      bool some = false;
      for (int g : bundles[k]) {
        bool mine = false;
        for (int h : a.bundles[i]) mine |= (h == g);
        if (mine) continue;
        if (own + inst.value(i, g) >= target) {
          some = true;
          break;
        }
      }
      if (!some) return false;
    }
  }
  return true;
}

inline bool naive_iprop1(const Instance& inst, const Allocation& a) {
  for (int i = 0; i < inst.num_agents(); ++i) {
    Value own = value_of(inst, i, a.bundles[i]);
    Value total;
    for (int g = 0; g < inst.num_goods(); ++g) total += inst.value(i, g);
    Value target = total / Value(inst.num_agents());
    if (own >= target) continue;
    bool some = false;
    for (int g = 0; g < inst.num_goods(); ++g) {
      bool mine = false;
      for (int h : a.bundles[i]) mine |= (h == g);
      if (mine) continue;
      if (own + inst.value(i, g) >= target) {
        some = true;
        break;
      }
    }
    if (!some) return false;
  }
  return true;
}

}  // namespace helpers
