#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <variant>

#include "fairdiv/audit.hpp"
#include "fairdiv/batch.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/stability.hpp"
#include "fairdiv/trace.hpp"

namespace fairdiv {

// Output preserves insertion order so emission is byte-stable.
using Json = nlohmann::ordered_json;

/// Exact numbers serialize as JSON integers when they fit, else as
/// canonical "p/q" strings. Parsing accepts integers and strings
/// ("42", "12.75", "51/4"); non-integral JSON numbers are rejected so no
/// value ever passes through floating point.
Json value_to_json(const Value& v);
Value value_from_json(const nlohmann::json& j);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);
Instance load_instance(const std::filesystem::path& path);

Json allocation_to_json(const Allocation& alloc, const Instance& inst);
Json group_allocation_to_json(const GroupAllocation& alloc, const Instance& inst);

/// An allocation file holds either per-agent "bundles" or per-group
/// "group_bundles"; agents or groups missing from the map hold nothing.
std::variant<Allocation, GroupAllocation> allocation_from_json(const nlohmann::json& j,
                                                               const Instance& inst);
std::variant<Allocation, GroupAllocation> load_allocation(const std::filesystem::path& path,
                                                          const Instance& inst);

/// One JSON object per line, in step order.
std::string trace_to_jsonl(const PickTrace& trace);

Json report_to_json(const FairnessReport& report, const Instance& inst);

Json oracle_result_to_json(const OracleResult& result, const Instance& inst);

Json stability_summary_to_json(const StabilityResult& result, Mechanism mechanism);
std::string stability_ledger_to_jsonl(const StabilityResult& result, const Instance& inst);

Json generator_spec_to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const nlohmann::json& j);

/// Timing is wall clock and lives under its own key; pass include_timing =
/// false to get the deterministic core for byte comparisons.
Json batch_report_to_json(const BatchReport& report, bool include_timing = true);
std::string batch_report_to_csv(const BatchReport& report);

Json frontier_result_to_json(const FrontierResult& result);
Json ladder_report_to_json(const LadderReport& report);

Json certifications_to_json(const std::vector<fixtures::Certification>& certs);

/// JSON schema documents for the instance, allocation, trace-event, report,
/// oracle-result and stability-record formats.
Json schemas_json();

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace fairdiv
