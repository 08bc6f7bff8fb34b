#include "fairdiv/batch.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "fairdiv/algorithms.hpp"
#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

using Clock = std::chrono::steady_clock;

class Timed {
 public:
  Timed(BatchReport& report, const std::string& algo)
      : timing_(report.timing[algo]), start_(Clock::now()) {}
  ~Timed() {
    ++timing_.calls;
    timing_.seconds += std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  AlgoTiming& timing_;
  Clock::time_point start_;
};

bool trace_structure_all_pairs(const PickTrace& trace, const Instance& inst) {
  for (int k = 0; k < inst.num_groups(); ++k) {
    for (int k2 = k + 1; k2 < inst.num_groups(); ++k2) {
      if (!check_trace_structure(trace, inst, k, k2).ok) return false;
    }
  }
  return true;
}

bool representative_bound_holds(const Instance& inst, const SmIwrrResult& result) {
  for (size_t i = 0; i < result.representatives.values.size(); ++i) {
    for (int g : result.representatives.source_bundles[i]) {
      if (result.representatives.values[i] > inst.value(0, g)) return false;
    }
  }
  return true;
}

bool bundle_permutation_holds(const SmIwrrResult& result) {
  auto lhs = result.allocation.bundles;
  auto rhs = result.sm_allocation.bundles;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

double log_log_slope(const std::vector<std::pair<double, double>>& points) {
  // Least squares on (log2 x, log2 y); degenerate inputs give 0.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (auto [x, y] : points) {
    if (x <= 0 || y <= 0) continue;
    double lx = std::log2(x), ly = std::log2(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  double denom = n * sxx - sx * sx;
  if (n < 2 || denom == 0) return 0.0;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace

GeneratorSpec realize_spec(const BatchSpec& batch, int index) {
  std::uint64_t child = SplitMix64::stream(batch.base.seed, static_cast<std::uint64_t>(index));
  GeneratorSpec spec = batch.base;
  if (batch.randomize_sizes) {
    SplitMix64 sizer(child);
    spec.num_agents = batch.min_agents +
                      static_cast<int>(sizer.bounded(batch.max_agents - batch.min_agents + 1));
    spec.num_goods =
        batch.min_goods + static_cast<int>(sizer.bounded(batch.max_goods - batch.min_goods + 1));
    spec.num_groups =
        1 + static_cast<int>(sizer.bounded(std::min(batch.max_groups, spec.num_agents)));
    spec.seed = sizer.next();
  } else {
    spec.seed = child;
  }
  return spec;
}

BatchReport certify_batch(const BatchSpec& batch) {
  BatchReport report;
  report.spec = batch;

  for (int index = 0; index < batch.count; ++index) {
    InstanceReport entry;
    entry.child_seed = SplitMix64::stream(batch.base.seed, static_cast<std::uint64_t>(index));
    entry.spec = realize_spec(batch, index);
    Instance inst = generate(entry.spec);

    auto record = [&](std::string name, bool pass) {
      if (!pass) report.all_pass = false;
      entry.properties.emplace_back(std::move(name), pass);
    };

    IwrrResult iwrr;
    {
      Timed t(report, "iwrr");
      iwrr = run_iwrr(inst);
    }
    record("iwrr-ef1", check_ef1(inst, iwrr.allocation).pass);
    record("iwrr-trace-structure", trace_structure_all_pairs(iwrr.trace, inst));

    switch (inst.valuation_class()) {
      case ValuationClass::AllCommon: {
        SmResult sm;
        {
          Timed t(report, "sm");
          sm = run_sm(inst);
        }
        record("sm-efx", check_efx(inst, sm.allocation).pass);

        SmIwrrResult smiwrr;
        {
          Timed t(report, "sm-iwrr");
          smiwrr = run_sm_iwrr(inst);
        }
        record("sm-iwrr-efx", check_efx(inst, smiwrr.allocation).pass);
        record("sm-iwrr-wef1", check_wef1(inst, smiwrr.allocation).pass);
        record("sm-iwrr-representative-bound", representative_bound_holds(inst, smiwrr));
        record("sm-iwrr-bundle-permutation", bundle_permutation_holds(smiwrr));

        WeightedGreedyResult greedy;
        {
          Timed t(report, "weighted-greedy");
          greedy = run_weighted_greedy(inst);
        }
        record("weighted-greedy-wefx", check_wefx_groups(inst, greedy.allocation).pass);

        record("iwrr-wef1", check_wef1(inst, iwrr.allocation).pass);
        break;
      }
      case ValuationClass::GroupCommon: {
        bool wef1 = check_wef1(inst, iwrr.allocation).pass;
        record("iwrr-wef1", wef1);
        bool collapse = check_exante_wef1(inst, iwrr.allocation, Value(1)).pass == wef1;
        record("iwrr-exante-collapse", collapse);
        break;
      }
      case ValuationClass::General: {
        ExanteVerdict exante = check_exante_wef1(inst, iwrr.allocation, Value(3));
        record("iwrr-exante-gamma3", exante.pass);
        entry.min_feasible = exante.min_feasible;
        break;
      }
    }

    if (!entry.min_feasible) {
      // Track the frontier for every class; outside the general class the
      // bound is still informative (group-common families sit at <= 1).
      entry.min_feasible = min_feasible_gamma(inst, iwrr.allocation);
    }
    const GammaBound& bound = *entry.min_feasible;
    bool improves = false;
    if (!report.gamma_frontier) {
      improves = true;
    } else if (report.gamma_frontier->finite) {
      improves = !bound.finite || bound.value > report.gamma_frontier->max_min_feasible;
    }
    if (improves) {
      report.gamma_frontier =
          GammaFrontier{bound.finite, bound.value, entry.child_seed, entry.spec};
    }

    report.instances.push_back(std::move(entry));
  }
  return report;
}

FrontierResult gamma_frontier(const BatchSpec& spec) {
  FrontierResult result;
  result.count = spec.count;
  BatchReport report = certify_batch(spec);
  if (report.gamma_frontier) {
    result.frontier = *report.gamma_frontier;
    result.ok = result.frontier.finite && result.frontier.max_min_feasible <= Value(3);
  }
  if (!report.all_pass) result.ok = false;
  return result;
}

LadderReport runtime_ladder(const GeneratorSpec& base, const std::vector<int>& good_counts,
                            int repetitions) {
  if (base.valuation_class != ValuationClass::AllCommon) {
    throw PreconditionError("runtime ladder runs the two-phase algorithm, which needs all-common "
                            "instances");
  }
  LadderReport report;
  for (size_t i = 0; i < good_counts.size(); ++i) {
    GeneratorSpec spec = base;
    spec.num_goods = good_counts[i];
    spec.seed = SplitMix64::stream(base.seed, static_cast<std::uint64_t>(i));
    Instance inst = generate(spec);

    LadderPoint point;
    point.goods = good_counts[i];
    double best = -1.0;
    for (int rep = 0; rep < std::max(repetitions, 1); ++rep) {
      auto start = Clock::now();
      SmIwrrResult result = run_sm_iwrr(inst);
      double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
      point.steps = result.stats.steps;
      if (best < 0 || elapsed < best) best = elapsed;
    }
    point.seconds = best;
    report.points.push_back(point);
  }

  std::vector<std::pair<double, double>> steps_fit, time_fit;
  for (const auto& p : report.points) {
    steps_fit.emplace_back(p.goods, static_cast<double>(p.steps));
    time_fit.emplace_back(p.goods, p.seconds);
  }
  report.step_log_slope = log_log_slope(steps_fit);
  report.time_log_slope = log_log_slope(time_fit);
  return report;
}

}  // namespace fairdiv
