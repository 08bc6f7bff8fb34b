#include <doctest.h>

#include "fairdiv/algorithms.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/json_io.hpp"
#include "helpers.hpp"

using fairdiv::Allocation;
using fairdiv::allocation_from_json;
using fairdiv::GroupAllocation;
using fairdiv::InputError;
using fairdiv::Instance;
using fairdiv::instance_from_json;
using fairdiv::instance_to_json;
using fairdiv::Value;
using fairdiv::value_from_json;
using fairdiv::value_to_json;
using fairdiv::ValuationClass;

TEST_CASE("values round-trip through json exactly") {
  CHECK(value_from_json(value_to_json(Value(42))) == Value(42));
  CHECK(value_from_json(value_to_json(Value(7, 3))) == Value(7, 3));
  CHECK(value_to_json(Value(5)).is_number_integer());
  CHECK(value_to_json(Value(1, 2)).is_string());
  CHECK(value_from_json(nlohmann::json::parse("\"12.75\"")) == Value(51, 4));
  CHECK_THROWS_AS(value_from_json(nlohmann::json::parse("0.5")), InputError);
  CHECK_THROWS_AS(value_from_json(nlohmann::json::parse("true")), InputError);
}

TEST_CASE("instances round-trip through json") {
  fairdiv::GeneratorSpec spec;
  spec.num_agents = 5;
  spec.num_goods = 8;
  spec.num_groups = 2;
  spec.valuation_class = ValuationClass::GroupCommon;
  spec.partition = fairdiv::PartitionShape::Random;
  spec.seed = 2718;
  Instance inst = fairdiv::generate(spec);
  CHECK(instance_from_json(instance_to_json(inst)) == inst);
}

TEST_CASE("instance parsing accepts string and integer values") {
  auto j = nlohmann::json::parse(R"({
    "agents": ["a", "b"],
    "goods": ["x", "y"],
    "groups": [["a"], ["b"]],
    "valuations": [[1, "0.5"], ["3/2", 0]],
    "class": "general"
  })");
  Instance inst = instance_from_json(j);
  CHECK(inst.value(0, 1) == Value(1, 2));
  CHECK(inst.value(1, 0) == Value(3, 2));
}

TEST_CASE("instance parsing rejects malformed input") {
  auto base = nlohmann::json::parse(R"({
    "agents": ["a"], "goods": ["x"], "groups": [["a"]],
    "valuations": [[1]], "class": "general"})");
  auto broken = base;
  broken.erase("groups");
  CHECK_THROWS_AS(instance_from_json(broken), InputError);
  broken = base;
  broken["groups"] = nlohmann::json::parse(R"([["zz"]])");
  CHECK_THROWS_AS(instance_from_json(broken), InputError);
  broken = base;
  broken["valuations"] = nlohmann::json::parse("[[0.25]]");
  CHECK_THROWS_AS(instance_from_json(broken), InputError);
  broken = base;
  broken["class"] = "sorta-common";
  CHECK_THROWS_AS(instance_from_json(broken), InputError);
}

TEST_CASE("allocations round-trip and reject inconsistencies") {
  Instance inst = helpers::all_common({1, 1, 1}, {{0}, {1}});
  Allocation alloc = Allocation::make_complete({{0, 2}, {1}}, inst);
  auto loaded = allocation_from_json(fairdiv::allocation_to_json(alloc, inst), inst);
  REQUIRE(std::holds_alternative<Allocation>(loaded));
  CHECK(std::get<Allocation>(loaded) == alloc);

  // Agents missing from the map hold nothing; unknown names are errors.
  auto partial = nlohmann::json::parse(R"({"bundles": {"p1": ["g1","g2","g3"]}})");
  auto from_partial = allocation_from_json(partial, inst);
  CHECK(std::get<Allocation>(from_partial).bundles[1].empty());
  CHECK_THROWS_AS(
      allocation_from_json(nlohmann::json::parse(R"({"bundles": {"nope": ["g1"]}})"), inst),
      InputError);
  CHECK_THROWS_AS(
      allocation_from_json(
          nlohmann::json::parse(R"({"bundles": {"p1": ["g1"], "p2": ["g1", "g2", "g3"]}})"),
          inst),
      InputError);
  CHECK_THROWS_AS(
      allocation_from_json(nlohmann::json::parse(R"({"bundles": {"p1": ["g1"]}})"), inst),
      InputError);

  GroupAllocation groups = GroupAllocation::make_complete({{0, 1}, {2}}, inst);
  auto loaded_groups =
      allocation_from_json(fairdiv::group_allocation_to_json(groups, inst), inst);
  REQUIRE(std::holds_alternative<GroupAllocation>(loaded_groups));
  CHECK(std::get<GroupAllocation>(loaded_groups) == groups);
}

TEST_CASE("traces serialize one event per line") {
  Instance inst = helpers::all_common({3, 2, 1}, {{0}, {1}});
  auto result = fairdiv::run_iwrr(inst);
  std::string jsonl = fairdiv::trace_to_jsonl(result.trace);
  size_t lines = 0;
  for (char c : jsonl) lines += (c == '\n');
  CHECK(lines == result.trace.events.size());
  CHECK(jsonl.find("\"reason\":\"iwrr\"") != std::string::npos);
  auto first = nlohmann::json::parse(jsonl.substr(0, jsonl.find('\n')));
  CHECK(first["step"] == 0);
  CHECK(first["agent"].is_number_integer());
}

TEST_CASE("report json uses the stable field names") {
  Instance inst = helpers::all_common({1, 1, 1, 1, 1}, {{0}, {1, 2}});
  Allocation alloc = Allocation::make_complete({{0}, {1, 2}, {3, 4}}, inst);
  fairdiv::Json j = fairdiv::report_to_json(fairdiv::audit_all(inst, alloc), inst);
  CHECK(j["ef1"]["pass"] == true);
  CHECK(j["wef1"]["pass"] == false);
  CHECK(j["wef1"]["witness"]["envious_group"] == 0);
  CHECK(j["wef1"]["witness"]["envied_group"] == 1);
  CHECK(j["wef1"]["witness"].contains("removed_good"));
  CHECK(j["exante_wef1"]["gamma"] == "3");
  CHECK(j["exante_wef1"].contains("min_feasible_gamma"));
  CHECK(j["pef1"]["pass"] == true);

  // On declared-general instances the weighted family is marked skipped.
  Instance general = helpers::make({{1, 2}, {2, 1}}, {{0}, {1}}, ValuationClass::General);
  Allocation split = Allocation::make_complete({{0}, {1}}, general);
  fairdiv::Json g = fairdiv::report_to_json(fairdiv::audit_all(general, split), general);
  CHECK(g["wef1"].contains("skipped"));
  CHECK_FALSE(g["exante_wef1"].contains("skipped"));
}

TEST_CASE("schemas parse and cover every format") {
  fairdiv::Json schemas = fairdiv::schemas_json();
  for (const char* key :
       {"instance", "allocation", "trace_event", "report", "oracle_result", "stability_record"}) {
    CHECK(schemas.contains(key));
  }
}

TEST_CASE("generator specs round-trip through json") {
  fairdiv::GeneratorSpec spec;
  spec.num_agents = 6;
  spec.num_goods = 11;
  spec.num_groups = 2;
  spec.valuation_class = ValuationClass::General;
  spec.partition = fairdiv::PartitionShape::Explicit;
  spec.explicit_sizes = {4, 2};
  spec.seed = 0xFFFFFFFFFFFFFFFFULL;  // seeds are full 64-bit
  fairdiv::GeneratorSpec back =
      fairdiv::generator_spec_from_json(fairdiv::generator_spec_to_json(spec));
  CHECK(back.seed == spec.seed);
  CHECK(back.explicit_sizes == spec.explicit_sizes);
  CHECK(fairdiv::generate(back) == fairdiv::generate(spec));
}
