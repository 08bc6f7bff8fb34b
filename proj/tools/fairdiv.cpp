// Command-line front end for the fair-division toolkit.
//
// Exit codes: 0 success / all properties pass, 1 a checked property or
// verdict failed, 2 usage or input error (including algorithm
// preconditions), 3 internal error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fairdiv/algorithms.hpp"
#include "fairdiv/audit.hpp"
#include "fairdiv/batch.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/stability.hpp"

namespace {

using fairdiv::Value;

constexpr int kExitPass = 0;
constexpr int kExitVerdictFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(const fairdiv::Json& j) { std::cout << j.dump(2) << "\n"; }

struct AllocateArgs {
  std::string algo;
  std::string instance_path;
  std::string trace_path;
};

int run_allocate(const AllocateArgs& args) {
  fairdiv::Instance inst = fairdiv::load_instance(args.instance_path);
  fairdiv::PickTrace trace;
  fairdiv::Json out;
  if (args.algo == "sm") {
    auto res = fairdiv::run_sm(inst);
    trace = std::move(res.trace);
    out = fairdiv::allocation_to_json(res.allocation, inst);
  } else if (args.algo == "iwrr") {
    auto res = fairdiv::run_iwrr(inst);
    trace = std::move(res.trace);
    out = fairdiv::allocation_to_json(res.allocation, inst);
  } else if (args.algo == "sm-iwrr") {
    auto res = fairdiv::run_sm_iwrr(inst);
    trace = std::move(res.trace);
    out = fairdiv::allocation_to_json(res.allocation, inst);
  } else if (args.algo == "weighted-greedy") {
    auto res = fairdiv::run_weighted_greedy(inst);
    trace = std::move(res.trace);
    out = fairdiv::group_allocation_to_json(res.allocation, inst);
  } else {
    throw fairdiv::InputError("unknown algorithm \"" + args.algo +
                              "\"; expected sm, iwrr, sm-iwrr or weighted-greedy");
  }
  if (!args.trace_path.empty()) {
    fairdiv::write_text_file(args.trace_path, fairdiv::trace_to_jsonl(trace));
  }
  emit(out);
  return kExitPass;
}

struct AuditArgs {
  std::string instance_path;
  std::string allocation_path;
  std::string gamma = "3";
  std::string require_csv;
};

int run_audit(const AuditArgs& args) {
  fairdiv::Instance inst = fairdiv::load_instance(args.instance_path);
  auto loaded = fairdiv::load_allocation(args.allocation_path, inst);
  Value gamma = Value::parse(args.gamma);

  fairdiv::FairnessReport report;
  if (std::holds_alternative<fairdiv::Allocation>(loaded)) {
    report = fairdiv::audit_all(inst, std::get<fairdiv::Allocation>(loaded), gamma);
  } else {
    report = fairdiv::audit_group_allocation(inst, std::get<fairdiv::GroupAllocation>(loaded));
  }
  emit(fairdiv::report_to_json(report, inst));

  auto lookup = [&report](fairdiv::Notion notion) -> std::optional<bool> {
    auto from = [](const std::optional<fairdiv::Verdict>& v) -> std::optional<bool> {
      if (!v) return std::nullopt;
      return v->pass;
    };
    switch (notion) {
      case fairdiv::Notion::Ef: return from(report.ef);
      case fairdiv::Notion::Ef1: return from(report.ef1);
      case fairdiv::Notion::Efx: return from(report.efx);
      case fairdiv::Notion::Wef: return from(report.wef);
      case fairdiv::Notion::Wef1: return from(report.wef1);
      case fairdiv::Notion::Wefx: return from(report.wefx);
      case fairdiv::Notion::Pef1:
        if (!report.pef1) return std::nullopt;
        return report.pef1->pass;
      case fairdiv::Notion::Iprop1:
        if (!report.iprop1) return std::nullopt;
        return report.iprop1->pass;
      case fairdiv::Notion::ExanteWef1:
        if (!report.exante_wef1) return std::nullopt;
        return report.exante_wef1->pass;
    }
    return std::nullopt;
  };

  bool all_required_pass = true;
  for (const std::string& name : split_list(args.require_csv)) {
    std::optional<bool> pass = lookup(fairdiv::notion_from_string(name));
    if (!pass) {
      throw fairdiv::PreconditionError("required notion " + name +
                                       " is not applicable to this allocation" +
                                       (report.wef_skip_reason.empty()
                                            ? ""
                                            : " (" + report.wef_skip_reason + ")"));
    }
    if (!*pass) all_required_pass = false;
  }
  return all_required_pass ? kExitPass : kExitVerdictFailure;
}

struct OracleArgs {
  std::string instance_path;
  std::string require_csv;
  std::string mode = "exists";
  std::string gamma = "3";
  std::uint64_t budget = fairdiv::kDefaultEnumerationBudget;
};

int run_oracle(const OracleArgs& args) {
  fairdiv::Instance inst = fairdiv::load_instance(args.instance_path);
  fairdiv::Query query;
  query.mode = fairdiv::query_mode_from_string(args.mode);
  query.gamma = Value::parse(args.gamma);
  if (!query.gamma.is_positive()) throw fairdiv::InputError("gamma must be positive");
  for (const std::string& name : split_list(args.require_csv)) {
    query.required.push_back(fairdiv::notion_from_string(name));
  }
  if (query.required.empty()) {
    throw fairdiv::InputError("oracle needs at least one notion in --require");
  }
  fairdiv::OracleResult result = fairdiv::enumerate_allocations(inst, query, args.budget);
  emit(fairdiv::oracle_result_to_json(result, inst));
  switch (query.mode) {
    case fairdiv::Query::Mode::Exists:
      return result.verdict == fairdiv::OracleResult::Verdict::Exists ? kExitPass
                                                                      : kExitVerdictFailure;
    case fairdiv::Query::Mode::Forall:
      // Exists here means a counterexample was found.
      return result.verdict == fairdiv::OracleResult::Verdict::None ? kExitPass
                                                                    : kExitVerdictFailure;
    case fairdiv::Query::Mode::Count:
      return kExitPass;
  }
  return kExitPass;
}

struct StabilityArgs {
  std::string instance_path;
  std::string mechanism;
  std::string ledger_path;
};

int run_stability(const StabilityArgs& args) {
  fairdiv::Instance inst = fairdiv::load_instance(args.instance_path);
  fairdiv::Mechanism mechanism = fairdiv::mechanism_from_string(args.mechanism);
  fairdiv::StabilityResult result = fairdiv::check_group_epsilon_stability(inst, mechanism);
  emit(fairdiv::stability_summary_to_json(result, mechanism));
  if (!args.ledger_path.empty()) {
    fairdiv::write_text_file(args.ledger_path, fairdiv::stability_ledger_to_jsonl(result, inst));
  }
  return result.pass ? kExitPass : kExitVerdictFailure;
}

struct GenArgs {
  fairdiv::GeneratorSpec spec;
  std::string cls = "general";
  std::string dist = "uniform";
  std::string partition = "balanced";
  std::string sizes_csv;
  std::string out_path;
};

int run_gen(GenArgs& args) {
  args.spec.valuation_class = fairdiv::valuation_class_from_string(args.cls);
  args.spec.distribution = fairdiv::value_distribution_from_string(args.dist);
  args.spec.partition = fairdiv::partition_shape_from_string(args.partition);
  for (const std::string& size : split_list(args.sizes_csv)) {
    args.spec.explicit_sizes.push_back(std::stoi(size));
  }
  fairdiv::Instance inst = fairdiv::generate(args.spec);
  fairdiv::Json j = fairdiv::instance_to_json(inst);
  if (!args.out_path.empty()) {
    fairdiv::write_text_file(args.out_path, j.dump(2) + "\n");
  } else {
    emit(j);
  }
  return kExitPass;
}

struct BatchArgs {
  fairdiv::BatchSpec spec;
  std::string cls = "general";
  std::string dist = "uniform";
  int max_agents = 0, max_goods = 0, max_groups = 0;
  std::string json_path, csv_path;
  bool ladder = false;
};

void finalize_batch_spec(BatchArgs& args) {
  args.spec.base.valuation_class = fairdiv::valuation_class_from_string(args.cls);
  args.spec.base.distribution = fairdiv::value_distribution_from_string(args.dist);
  if (args.max_agents > 0 || args.max_goods > 0 || args.max_groups > 0) {
    args.spec.randomize_sizes = true;
    if (args.max_agents > 0) args.spec.max_agents = args.max_agents;
    if (args.max_goods > 0) args.spec.max_goods = args.max_goods;
    if (args.max_groups > 0) args.spec.max_groups = args.max_groups;
    args.spec.min_agents = 1;
    args.spec.min_goods = 1;
  }
}

int run_certify(BatchArgs& args) {
  finalize_batch_spec(args);
  fairdiv::BatchReport report = fairdiv::certify_batch(args.spec);

  std::map<std::string, std::pair<int, int>> aggregate;  // property -> (pass, fail)
  for (const auto& entry : report.instances) {
    for (const auto& [name, pass] : entry.properties) {
      auto& bucket = aggregate[name];
      ++(pass ? bucket.first : bucket.second);
    }
  }
  for (const auto& [name, counts] : aggregate) {
    std::cout << name << ": " << counts.first << " pass, " << counts.second << " fail\n";
  }
  if (report.gamma_frontier) {
    std::cout << "max min_feasible_gamma: "
              << (report.gamma_frontier->finite ? report.gamma_frontier->max_min_feasible.str()
                                                : std::string("inf"))
              << " (child seed " << report.gamma_frontier->witness_child_seed << ")\n";
  }
  if (args.ladder) {
    fairdiv::GeneratorSpec base = args.spec.base;
    fairdiv::LadderReport ladder =
        fairdiv::runtime_ladder(base, {64, 128, 256, 512, 1024, 2048, 4096});
    std::cout << "runtime ladder (goods steps seconds):\n";
    for (const auto& p : ladder.points) {
      std::cout << "  " << p.goods << " " << p.steps << " " << p.seconds << "\n";
    }
    std::cout << "step log-slope " << ladder.step_log_slope << ", time log-slope "
              << ladder.time_log_slope << "\n";
  }
  std::cout << (report.all_pass ? "all properties passed" : "PROPERTY FAILURES; see report")
            << " (" << report.instances.size() << " instances)\n";

  if (!args.json_path.empty()) {
    fairdiv::write_text_file(args.json_path, fairdiv::batch_report_to_json(report).dump(2) + "\n");
  }
  if (!args.csv_path.empty()) {
    fairdiv::write_text_file(args.csv_path, fairdiv::batch_report_to_csv(report));
  }
  return report.all_pass ? kExitPass : kExitVerdictFailure;
}

int run_frontier(BatchArgs& args) {
  finalize_batch_spec(args);
  fairdiv::FrontierResult result = fairdiv::gamma_frontier(args.spec);
  emit(fairdiv::frontier_result_to_json(result));
  return result.ok ? kExitPass : kExitVerdictFailure;
}

struct FixturesArgs {
  bool verify = false;
  std::vector<std::string> c_values;
  std::string dir;
};

int run_fixtures(const FixturesArgs& args) {
  if (!args.verify) throw fairdiv::InputError("fixtures requires --verify");
  std::vector<Value> sweep;
  for (const std::string& c : args.c_values) sweep.push_back(Value::parse(c));
  if (sweep.empty()) sweep = fairdiv::fixtures::default_c_sweep();

  bool all_ok = true;
  for (const auto& cert : fairdiv::fixtures::certify_all(sweep)) {
    std::cout << (cert.ok ? "[ok] " : "[FAILED] ") << cert.fixture << " c=" << cert.c.str()
              << " " << cert.claim << ": expected=" << (cert.expected ? "yes" : "no")
              << " actual=" << (cert.actual ? "yes" : "no") << " (examined "
              << cert.allocations_examined << ")\n";
    if (!cert.ok) all_ok = false;
  }

  if (!args.dir.empty()) {
    namespace fs = std::filesystem;
    const Value c100(100), c1(1);
    const std::vector<std::pair<std::string, fairdiv::Instance>> expected = {
        {"prop2.json", fairdiv::fixtures::prop2(c100)},
        {"prop3a.json", fairdiv::fixtures::prop3a(c100)},
        {"prop3b.json", fairdiv::fixtures::prop3b(c100)},
        {"example_s2.json", fairdiv::fixtures::example_s2(c1)},
    };
    for (const auto& [file, built] : expected) {
      fs::path path = fs::path(args.dir) / file;
      bool ok = false;
      std::string note;
      try {
        ok = fairdiv::load_instance(path) == built;
        if (!ok) note = "contents differ from the built-in fixture";
      } catch (const std::exception& e) {
        note = e.what();
      }
      std::cout << (ok ? "[ok] " : "[FAILED] ") << "file " << path.string()
                << (ok ? " matches built-in" : ": " + note) << "\n";
      if (!ok) all_ok = false;
    }
  }
  return all_ok ? kExitPass : kExitVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairdiv: allocation algorithms, fairness audits and brute-force oracles "
               "for indivisible goods with weighted agent groups"};
  app.require_subcommand(0, 1);

  bool print_schemas = false;
  app.add_flag("--schema", print_schemas, "print the JSON schemas for all file formats and exit");

  AllocateArgs allocate_args;
  auto* allocate = app.add_subcommand("allocate", "run an allocation algorithm on an instance");
  allocate->add_option("--algo", allocate_args.algo, "sm, iwrr, sm-iwrr or weighted-greedy")
      ->required();
  allocate->add_option("--instance", allocate_args.instance_path, "instance JSON file")
      ->required();
  allocate->add_option("--trace", allocate_args.trace_path, "write the pick trace (JSON lines)");

  AuditArgs audit_args;
  auto* audit = app.add_subcommand("audit", "audit an allocation against every fairness notion");
  audit->add_option("--instance", audit_args.instance_path, "instance JSON file")->required();
  audit->add_option("--allocation", audit_args.allocation_path, "allocation JSON file")
      ->required();
  audit->add_option("--gamma", audit_args.gamma, "ex-ante factor (exact: \"3\", \"12/7\", \"1.5\")");
  audit->add_option("--require", audit_args.require_csv,
                    "comma-separated notions that must pass (exit 1 otherwise)");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "exhaustively search all allocations of a small instance");
  oracle->add_option("--instance", oracle_args.instance_path, "instance JSON file")->required();
  oracle->add_option("--require", oracle_args.require_csv, "comma-separated notions")->required();
  oracle->add_option("--mode", oracle_args.mode, "exists, forall or count");
  oracle->add_option("--gamma", oracle_args.gamma, "ex-ante factor for exante-wef1");
  oracle->add_option("--budget", oracle_args.budget, "maximum number of allocations to enumerate");

  StabilityArgs stability_args;
  auto* stability = app.add_subcommand("stability", "check group stability under membership deviations");
  stability->add_option("--instance", stability_args.instance_path, "instance JSON file")
      ->required();
  stability->add_option("--mechanism", stability_args.mechanism, "iwrr or sm-iwrr")->required();
  stability->add_option("--ledger", stability_args.ledger_path,
                        "write the per-deviation ledger (JSON lines)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
  gen->add_option("--agents", gen_args.spec.num_agents, "number of agents")->required();
  gen->add_option("--goods", gen_args.spec.num_goods, "number of goods")->required();
  gen->add_option("--groups", gen_args.spec.num_groups, "number of groups")->required();
  gen->add_option("--class", gen_args.cls, "all-common, group-common or general")->required();
  gen->add_option("--seed", gen_args.spec.seed, "64-bit seed")->required();
  gen->add_option("--dist", gen_args.dist, "uniform or zipf");
  gen->add_option("--lo", gen_args.spec.uniform_lo, "uniform lower bound");
  gen->add_option("--hi", gen_args.spec.uniform_hi, "uniform upper bound");
  gen->add_option("--zipf-exponent", gen_args.spec.zipf_exponent, "zipf exponent");
  gen->add_option("--zipf-cap", gen_args.spec.zipf_cap, "zipf value cap");
  gen->add_option("--partition", gen_args.partition, "balanced, random or explicit");
  gen->add_option("--sizes", gen_args.sizes_csv, "explicit group sizes, comma-separated");
  gen->add_option("--out", gen_args.out_path, "write to file instead of stdout");

  BatchArgs certify_args;
  auto* certify = app.add_subcommand("certify", "certify algorithm guarantees over a seeded batch");
  auto add_batch_options = [](CLI::App* cmd, BatchArgs& args) {
    cmd->add_option("--count", args.spec.count, "number of instances")->required();
    cmd->add_option("--seed", args.spec.base.seed, "64-bit batch seed")->required();
    cmd->add_option("--class", args.cls, "all-common, group-common or general");
    cmd->add_option("--dist", args.dist, "uniform or zipf");
    cmd->add_option("--agents", args.spec.base.num_agents, "fixed agent count");
    cmd->add_option("--goods", args.spec.base.num_goods, "fixed good count");
    cmd->add_option("--groups", args.spec.base.num_groups, "fixed group count");
    cmd->add_option("--max-agents", args.max_agents, "randomize agent count in [1, N]");
    cmd->add_option("--max-goods", args.max_goods, "randomize good count in [1, M]");
    cmd->add_option("--max-groups", args.max_groups, "randomize group count in [1, L]");
    cmd->add_option("--lo", args.spec.base.uniform_lo, "uniform lower bound");
    cmd->add_option("--hi", args.spec.base.uniform_hi, "uniform upper bound");
  };
  add_batch_options(certify, certify_args);
  certify->add_option("--json", certify_args.json_path, "write the full batch report as JSON");
  certify->add_option("--csv", certify_args.csv_path, "write one CSV row per instance per property");
  certify->add_flag("--ladder", certify_args.ladder,
                    "also run the doubling-ladder runtime measurement (all-common only)");

  BatchArgs frontier_args;
  auto* frontier = app.add_subcommand(
      "frontier", "report the worst observed min-feasible gamma of the round-robin allocation");
  add_batch_options(frontier, frontier_args);

  FixturesArgs fixtures_args;
  auto* fixtures = app.add_subcommand("fixtures", "certify the shipped counterexample instances");
  fixtures->add_flag("--verify", fixtures_args.verify, "run the certifications");
  fixtures->add_option("--c", fixtures_args.c_values,
                       "constant(s) to certify at (default sweep: 2, 10, 100, 1000000)");
  fixtures->add_option("--dir", fixtures_args.dir,
                       "also check the fixture files in this directory against the built-ins");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (print_schemas) {
      emit(fairdiv::schemas_json());
      return kExitPass;
    }
    if (allocate->parsed()) return run_allocate(allocate_args);
    if (audit->parsed()) return run_audit(audit_args);
    if (oracle->parsed()) return run_oracle(oracle_args);
    if (stability->parsed()) return run_stability(stability_args);
    if (gen->parsed()) return run_gen(gen_args);
    if (certify->parsed()) return run_certify(certify_args);
    if (frontier->parsed()) return run_frontier(frontier_args);
    if (fixtures->parsed()) return run_fixtures(fixtures_args);
    std::cerr << app.help() << "\n";
    return kExitUsage;
  } catch (const fairdiv::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fairdiv::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
