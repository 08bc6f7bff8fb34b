#include "fairdiv/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

const nlohmann::json& require_field(const nlohmann::json& j, const char* field,
                                    const char* where) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw InputError(std::string(where) + " is missing required field \"" + field + "\"");
  }
  return *it;
}

std::vector<std::string> string_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError(std::string(what) + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Json value_to_json(const Value& v) {
  if (v.fits_int64()) return v.as_int64();
  return v.str();
}

Value value_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Value(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) {
    std::uint64_t u = j.get<std::uint64_t>();
    return Value::parse(std::to_string(u));
  }
  if (j.is_string()) return Value::parse(j.get<std::string>());
  if (j.is_number_float()) {
    throw InputError("floating-point numbers are not exact; write the value as a string such as "
                     "\"12.75\" or \"51/4\"");
  }
  throw InputError("values must be integers or numeric strings");
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["agents"] = inst.agent_names();
  j["goods"] = inst.good_names();
  Json groups = Json::array();
  for (int k = 0; k < inst.num_groups(); ++k) {
    Json members = Json::array();
    for (int agent : inst.group_members(k)) members.push_back(inst.agent_name(agent));
    groups.push_back(std::move(members));
  }
  j["groups"] = std::move(groups);
  Json rows = Json::array();
  for (int i = 0; i < inst.num_agents(); ++i) {
    Json row = Json::array();
    for (int g = 0; g < inst.num_goods(); ++g) row.push_back(value_to_json(inst.value(i, g)));
    rows.push_back(std::move(row));
  }
  j["valuations"] = std::move(rows);
  j["class"] = std::string(to_string(inst.valuation_class()));
  return j;
}

Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("instance file must be a JSON object");
  std::vector<std::string> agents = string_list(require_field(j, "agents", "instance"), "agents");
  std::vector<std::string> goods = string_list(require_field(j, "goods", "instance"), "goods");

  auto index_of = [](const std::vector<std::string>& names, const std::string& name,
                     const char* what) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw InputError("instance groups reference unknown " + std::string(what) + " \"" + name +
                       "\"");
    }
    return static_cast<int>(it - names.begin());
  };

  const auto& groups_json = require_field(j, "groups", "instance");
  if (!groups_json.is_array()) throw InputError("instance \"groups\" must be an array of arrays");
  std::vector<std::vector<int>> groups;
  for (const auto& cell : groups_json) {
    std::vector<int> members;
    for (const std::string& name : string_list(cell, "group members")) {
      members.push_back(index_of(agents, name, "agent"));
    }
    groups.push_back(std::move(members));
  }

  const auto& rows_json = require_field(j, "valuations", "instance");
  if (!rows_json.is_array()) throw InputError("instance \"valuations\" must be an array of rows");
  std::vector<std::vector<Value>> rows;
  for (const auto& row_json : rows_json) {
    if (!row_json.is_array()) throw InputError("valuation rows must be arrays");
    std::vector<Value> row;
    for (const auto& cell : row_json) row.push_back(value_from_json(cell));
    rows.push_back(std::move(row));
  }

  ValuationClass cls =
      valuation_class_from_string(require_field(j, "class", "instance").get<std::string>());
  return Instance(std::move(agents), std::move(goods), std::move(groups), std::move(rows), cls);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("invalid JSON in " + path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

Json allocation_to_json(const Allocation& alloc, const Instance& inst) {
  Json bundles = Json::object();
  for (int i = 0; i < inst.num_agents(); ++i) {
    Json goods = Json::array();
    for (int g : alloc.bundles[i]) goods.push_back(inst.good_name(g));
    bundles[inst.agent_name(i)] = std::move(goods);
  }
  Json j;
  j["bundles"] = std::move(bundles);
  return j;
}

Json group_allocation_to_json(const GroupAllocation& alloc, const Instance& inst) {
  Json bundles = Json::array();
  for (int k = 0; k < inst.num_groups(); ++k) {
    Json goods = Json::array();
    for (int g : alloc.bundles[k]) goods.push_back(inst.good_name(g));
    bundles.push_back(std::move(goods));
  }
  Json j;
  j["group_bundles"] = std::move(bundles);
  return j;
}

std::variant<Allocation, GroupAllocation> allocation_from_json(const nlohmann::json& j,
                                                               const Instance& inst) {
  if (!j.is_object()) throw InputError("allocation file must be a JSON object");
  if (j.contains("bundles")) {
    const auto& bundles_json = j["bundles"];
    if (!bundles_json.is_object()) {
      throw InputError("allocation \"bundles\" must map agent names to good lists");
    }
    std::vector<std::vector<int>> bundles(inst.num_agents());
    for (const auto& [agent_name, goods] : bundles_json.items()) {
      int agent = inst.agent_index(agent_name);
      for (const std::string& good : string_list(goods, "bundle")) {
        bundles[agent].push_back(inst.good_index(good));
      }
    }
    return Allocation::make_complete(std::move(bundles), inst);
  }
  if (j.contains("group_bundles")) {
    const auto& bundles_json = j["group_bundles"];
    if (!bundles_json.is_array() ||
        bundles_json.size() != static_cast<size_t>(inst.num_groups())) {
      throw InputError("allocation \"group_bundles\" must be an array with one entry per group");
    }
    std::vector<std::vector<int>> bundles(inst.num_groups());
    for (int k = 0; k < inst.num_groups(); ++k) {
      for (const std::string& good : string_list(bundles_json[k], "group bundle")) {
        bundles[k].push_back(inst.good_index(good));
      }
    }
    return GroupAllocation::make_complete(std::move(bundles), inst);
  }
  throw InputError("allocation file needs either \"bundles\" or \"group_bundles\"");
}

std::variant<Allocation, GroupAllocation> load_allocation(const std::filesystem::path& path,
                                                          const Instance& inst) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open allocation file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("invalid JSON in " + path.string() + ": " + e.what());
  }
  return allocation_from_json(j, inst);
}

std::string trace_to_jsonl(const PickTrace& trace) {
  std::ostringstream out;
  for (const auto& e : trace.events) {
    Json j;
    j["step"] = e.step;
    j["round"] = e.round;
    j["group"] = e.group;
    j["agent"] = e.agent;
    j["good"] = e.good;
    j["reason"] = std::string(to_string(e.reason));
    out << j.dump() << "\n";
  }
  return out.str();
}

namespace {

Json envy_witness_to_json(const EnvyWitness& w, const Instance& inst, bool individual) {
  Json j;
  if (individual) {
    j["envious_agent"] = inst.agent_name(w.envious);
    j["envied_agent"] = inst.agent_name(w.envied);
  } else {
    j["envious_group"] = w.envious;
    j["envied_group"] = w.envied;
  }
  if (w.removed_good) j["removed_good"] = inst.good_name(*w.removed_good);
  j["own"] = w.own.str();
  j["other"] = w.other.str();
  return j;
}

Json verdict_to_json(const Verdict& v, const Instance& inst, bool individual) {
  Json j;
  j["pass"] = v.pass;
  if (v.witness) j["witness"] = envy_witness_to_json(*v.witness, inst, individual);
  return j;
}

Json proportion_to_json(const ProportionVerdict& v, const Instance& inst) {
  Json j;
  j["pass"] = v.pass;
  if (v.witness) {
    Json w;
    w["agent"] = inst.agent_name(v.witness->agent);
    if (v.witness->group >= 0) w["group"] = v.witness->group;
    if (v.witness->added_good) {
      w["added_good"] = inst.good_name(*v.witness->added_good);
    } else {
      w["added_good"] = nullptr;
    }
    w["reached"] = v.witness->own_plus_good.str();
    w["target"] = v.witness->target.str();
    j["witness"] = std::move(w);
  }
  return j;
}

Json skipped(const std::string& reason) {
  Json j;
  j["skipped"] = reason;
  return j;
}

}  // namespace

Json report_to_json(const FairnessReport& report, const Instance& inst) {
  Json j;
  auto emit_verdict = [&](const char* name, const std::optional<Verdict>& v, bool individual,
                          const std::string& reason) {
    j[name] = v ? verdict_to_json(*v, inst, individual) : skipped(reason);
  };
  emit_verdict("ef", report.ef, true, report.individual_skip_reason);
  emit_verdict("ef1", report.ef1, true, report.individual_skip_reason);
  emit_verdict("efx", report.efx, true, report.individual_skip_reason);
  emit_verdict("wef", report.wef, false, report.wef_skip_reason);
  emit_verdict("wef1", report.wef1, false, report.wef_skip_reason);
  emit_verdict("wefx", report.wefx, false, report.wef_skip_reason);
  if (report.exante_wef1) {
    Json e;
    e["gamma"] = report.exante_wef1->gamma.str();
    e["pass"] = report.exante_wef1->pass;
    e["min_feasible_gamma"] =
        report.exante_wef1->min_feasible.finite ? report.exante_wef1->min_feasible.value.str()
                                                : std::string("inf");
    if (report.exante_wef1->witness) {
      e["witness"] = envy_witness_to_json(*report.exante_wef1->witness, inst, false);
    }
    j["exante_wef1"] = std::move(e);
  } else {
    j["exante_wef1"] = skipped(report.individual_skip_reason);
  }
  j["pef1"] = report.pef1 ? proportion_to_json(*report.pef1, inst)
                          : skipped(report.individual_skip_reason);
  j["iprop1"] = report.iprop1 ? proportion_to_json(*report.iprop1, inst)
                              : skipped(report.individual_skip_reason);
  return j;
}

Json oracle_result_to_json(const OracleResult& result, const Instance& inst) {
  Json j;
  switch (result.verdict) {
    case OracleResult::Verdict::Exists: j["verdict"] = "exists"; break;
    case OracleResult::Verdict::None: j["verdict"] = "none"; break;
    case OracleResult::Verdict::Count: j["verdict"] = "count"; break;
  }
  if (result.verdict == OracleResult::Verdict::Count) j["count"] = result.count;
  if (result.witness) j["witness"] = allocation_to_json(*result.witness, inst);
  j["allocations_examined"] = result.allocations_examined;
  return j;
}

Json stability_summary_to_json(const StabilityResult& result, Mechanism mechanism) {
  Json j;
  j["mechanism"] = std::string(to_string(mechanism));
  j["pass"] = result.pass;
  j["identity_rerun_exact"] = result.identity_rerun_exact;
  j["deviations"] = result.ledger.size();
  std::uint64_t violations = 0;
  for (const auto& record : result.ledger) {
    if (!record.pass) ++violations;
  }
  j["violations"] = violations;
  return j;
}

std::string stability_ledger_to_jsonl(const StabilityResult& result, const Instance& inst) {
  std::ostringstream out;
  for (const auto& record : result.ledger) {
    Json j;
    j["agent"] = inst.agent_name(record.agent);
    if (record.target_group < 0) {
      j["target"] = "singleton";
    } else {
      j["target"] = record.target_group;
    }
    j["original_value"] = record.original_value.str();
    j["deviated_value"] = record.deviated_value.str();
    if (record.removed_good) {
      j["removed_good"] = inst.good_name(*record.removed_good);
    } else {
      j["removed_good"] = nullptr;
    }
    j["pass"] = record.pass;
    out << j.dump() << "\n";
  }
  return out.str();
}

Json generator_spec_to_json(const GeneratorSpec& spec) {
  Json j;
  j["agents"] = spec.num_agents;
  j["goods"] = spec.num_goods;
  j["groups"] = spec.num_groups;
  j["class"] = std::string(to_string(spec.valuation_class));
  j["distribution"] = std::string(to_string(spec.distribution));
  if (spec.distribution == ValueDistribution::UniformInt) {
    j["lo"] = spec.uniform_lo;
    j["hi"] = spec.uniform_hi;
  } else {
    j["zipf_exponent"] = spec.zipf_exponent;
    j["zipf_cap"] = spec.zipf_cap;
  }
  j["partition"] = std::string(to_string(spec.partition));
  if (spec.partition == PartitionShape::Explicit) j["sizes"] = spec.explicit_sizes;
  j["seed"] = spec.seed;
  return j;
}

GeneratorSpec generator_spec_from_json(const nlohmann::json& j) {
  GeneratorSpec spec;
  spec.num_agents = require_field(j, "agents", "spec").get<int>();
  spec.num_goods = require_field(j, "goods", "spec").get<int>();
  spec.num_groups = require_field(j, "groups", "spec").get<int>();
  spec.valuation_class =
      valuation_class_from_string(require_field(j, "class", "spec").get<std::string>());
  spec.distribution =
      value_distribution_from_string(require_field(j, "distribution", "spec").get<std::string>());
  if (spec.distribution == ValueDistribution::UniformInt) {
    spec.uniform_lo = require_field(j, "lo", "spec").get<long>();
    spec.uniform_hi = require_field(j, "hi", "spec").get<long>();
  } else {
    spec.zipf_exponent = require_field(j, "zipf_exponent", "spec").get<double>();
    spec.zipf_cap = require_field(j, "zipf_cap", "spec").get<long>();
  }
  spec.partition =
      partition_shape_from_string(require_field(j, "partition", "spec").get<std::string>());
  if (spec.partition == PartitionShape::Explicit) {
    spec.explicit_sizes = require_field(j, "sizes", "spec").get<std::vector<int>>();
  }
  spec.seed = require_field(j, "seed", "spec").get<std::uint64_t>();
  return spec;
}

Json batch_report_to_json(const BatchReport& report, bool include_timing) {
  Json j;
  j["base"] = generator_spec_to_json(report.spec.base);
  j["count"] = report.spec.count;
  j["randomize_sizes"] = report.spec.randomize_sizes;
  if (report.spec.randomize_sizes) {
    j["min_agents"] = report.spec.min_agents;
    j["max_agents"] = report.spec.max_agents;
    j["min_goods"] = report.spec.min_goods;
    j["max_goods"] = report.spec.max_goods;
    j["max_groups"] = report.spec.max_groups;
  }
  j["all_pass"] = report.all_pass;
  Json instances = Json::array();
  for (const auto& entry : report.instances) {
    Json e;
    e["child_seed"] = entry.child_seed;
    e["spec"] = generator_spec_to_json(entry.spec);
    Json props = Json::array();
    for (const auto& [name, pass] : entry.properties) {
      Json p;
      p["property"] = name;
      p["pass"] = pass;
      props.push_back(std::move(p));
    }
    e["properties"] = std::move(props);
    if (entry.min_feasible) {
      e["min_feasible_gamma"] =
          entry.min_feasible->finite ? entry.min_feasible->value.str() : std::string("inf");
    }
    instances.push_back(std::move(e));
  }
  j["instances"] = std::move(instances);
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> aggregate;
  for (const auto& entry : report.instances) {
    for (const auto& [name, pass] : entry.properties) {
      auto& bucket = aggregate[name];
      ++(pass ? bucket.first : bucket.second);
    }
  }
  Json aggregates = Json::object();
  for (const auto& [name, counts] : aggregate) {
    Json a;
    a["pass"] = counts.first;
    a["fail"] = counts.second;
    aggregates[name] = std::move(a);
  }
  j["aggregates"] = std::move(aggregates);
  if (report.gamma_frontier) {
    Json f;
    f["finite"] = report.gamma_frontier->finite;
    if (report.gamma_frontier->finite) {
      f["max_min_feasible_gamma"] = report.gamma_frontier->max_min_feasible.str();
    }
    f["witness_child_seed"] = report.gamma_frontier->witness_child_seed;
    f["witness_spec"] = generator_spec_to_json(report.gamma_frontier->witness_spec);
    j["gamma_frontier"] = std::move(f);
  }
  if (include_timing) {
    Json timing = Json::object();
    for (const auto& [algo, t] : report.timing) {
      Json entry;
      entry["calls"] = t.calls;
      entry["seconds"] = t.seconds;
      timing[algo] = std::move(entry);
    }
    j["timing"] = std::move(timing);
  }
  return j;
}

std::string batch_report_to_csv(const BatchReport& report) {
  std::ostringstream out;
  out << "child_seed,value_seed,agents,goods,groups,class,property,pass\n";
  for (const auto& entry : report.instances) {
    for (const auto& [name, pass] : entry.properties) {
      out << entry.child_seed << ',' << entry.spec.seed << ',' << entry.spec.num_agents << ','
          << entry.spec.num_goods << ',' << entry.spec.num_groups << ','
          << to_string(entry.spec.valuation_class) << ',' << name << ',' << (pass ? 1 : 0)
          << "\n";
    }
  }
  return out.str();
}

Json frontier_result_to_json(const FrontierResult& result) {
  Json j;
  j["ok"] = result.ok;
  j["count"] = result.count;
  j["finite"] = result.frontier.finite;
  if (result.frontier.finite) {
    j["max_min_feasible_gamma"] = result.frontier.max_min_feasible.str();
  }
  j["witness_child_seed"] = result.frontier.witness_child_seed;
  j["witness_spec"] = generator_spec_to_json(result.frontier.witness_spec);
  return j;
}

Json ladder_report_to_json(const LadderReport& report) {
  Json j;
  Json points = Json::array();
  for (const auto& p : report.points) {
    Json e;
    e["goods"] = p.goods;
    e["steps"] = p.steps;
    e["seconds"] = p.seconds;
    points.push_back(std::move(e));
  }
  j["points"] = std::move(points);
  j["step_log_slope"] = report.step_log_slope;
  j["time_log_slope"] = report.time_log_slope;
  return j;
}

Json certifications_to_json(const std::vector<fixtures::Certification>& certs) {
  Json arr = Json::array();
  for (const auto& cert : certs) {
    Json j;
    j["fixture"] = cert.fixture;
    j["c"] = cert.c.str();
    j["claim"] = cert.claim;
    j["expected"] = cert.expected;
    j["actual"] = cert.actual;
    j["ok"] = cert.ok;
    j["allocations_examined"] = cert.allocations_examined;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json schemas_json() {
  Json schemas;
  schemas["instance"] = Json::parse(R"({
    "type": "object",
    "required": ["agents", "goods", "groups", "valuations", "class"],
    "properties": {
      "agents": {"type": "array", "items": {"type": "string"}},
      "goods": {"type": "array", "items": {"type": "string"}},
      "groups": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
      "valuations": {"type": "array", "items": {"type": "array",
        "items": {"type": ["integer", "string"],
                  "description": "exact value: integer, decimal string, or p/q string"}}},
      "class": {"enum": ["all-common", "group-common", "general"]}
    }
  })");
  schemas["allocation"] = Json::parse(R"({
    "type": "object",
    "properties": {
      "bundles": {"type": "object",
        "additionalProperties": {"type": "array", "items": {"type": "string"}},
        "description": "agent name to list of good names; omitted agents hold nothing"},
      "group_bundles": {"type": "array",
        "items": {"type": "array", "items": {"type": "string"}},
        "description": "one bundle per group, for group-level allocations"}
    }
  })");
  schemas["trace_event"] = Json::parse(R"({
    "type": "object",
    "required": ["step", "round", "group", "agent", "good", "reason"],
    "properties": {
      "step": {"type": "integer"},
      "round": {"type": "integer", "description": "picker's prior selections"},
      "group": {"type": "integer"},
      "agent": {"type": "integer", "description": "-1 for group-level picks"},
      "good": {"type": "integer",
               "description": "source bundle index for reason=representative"},
      "reason": {"enum": ["sm", "iwrr", "weighted-greedy", "representative"]}
    }
  })");
  schemas["report"] = Json::parse(R"({
    "type": "object",
    "properties": {
      "ef": {"$ref": "#/definitions/verdict"},
      "ef1": {"$ref": "#/definitions/verdict"},
      "efx": {"$ref": "#/definitions/verdict"},
      "wef": {"$ref": "#/definitions/verdict"},
      "wef1": {"$ref": "#/definitions/verdict"},
      "wefx": {"$ref": "#/definitions/verdict"},
      "exante_wef1": {"type": "object",
        "properties": {"gamma": {"type": "string"}, "pass": {"type": "boolean"},
                       "min_feasible_gamma": {"type": "string"}}},
      "pef1": {"$ref": "#/definitions/verdict"},
      "iprop1": {"$ref": "#/definitions/verdict"}
    },
    "definitions": {
      "verdict": {"type": "object",
        "properties": {"pass": {"type": "boolean"}, "witness": {"type": "object"},
                       "skipped": {"type": "string"}}}
    }
  })");
  schemas["oracle_result"] = Json::parse(R"({
    "type": "object",
    "required": ["verdict", "allocations_examined"],
    "properties": {
      "verdict": {"enum": ["exists", "none", "count"]},
      "count": {"type": "integer"},
      "witness": {"type": "object"},
      "allocations_examined": {"type": "integer"}
    }
  })");
  schemas["stability_record"] = Json::parse(R"({
    "type": "object",
    "required": ["agent", "target", "original_value", "deviated_value", "pass"],
    "properties": {
      "agent": {"type": "string"},
      "target": {"type": ["integer", "string"],
                 "description": "group index, or \"singleton\" for a fresh group"},
      "original_value": {"type": "string"},
      "deviated_value": {"type": "string"},
      "removed_good": {"type": ["string", "null"]},
      "pass": {"type": "boolean"}
    }
  })");
  return schemas;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file " + path.string());
  out << text;
}

}  // namespace fairdiv
