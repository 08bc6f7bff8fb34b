#include "fairdiv/instance.hpp"

#include <algorithm>
#include <unordered_set>

#include "fairdiv/errors.hpp"

namespace fairdiv {

std::string_view to_string(ValuationClass c) {
  switch (c) {
    case ValuationClass::AllCommon: return "all-common";
    case ValuationClass::GroupCommon: return "group-common";
    case ValuationClass::General: return "general";
  }
  return "general";
}

ValuationClass valuation_class_from_string(std::string_view s) {
  if (s == "all-common") return ValuationClass::AllCommon;
  if (s == "group-common") return ValuationClass::GroupCommon;
  if (s == "general") return ValuationClass::General;
  throw InputError("unknown valuation class \"" + std::string(s) +
                   "\"; expected all-common, group-common or general");
}

namespace {

void check_unique_names(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) throw InputError(std::string(what) + " name must not be empty");
    if (!seen.insert(name).second) {
      throw InputError("duplicate " + std::string(what) + " name \"" + name + "\"");
    }
  }
}

}  // namespace

Instance::Instance(std::vector<std::string> agent_names,
                   std::vector<std::string> good_names,
                   std::vector<std::vector<int>> groups,
                   std::vector<std::vector<Value>> valuations,
                   ValuationClass declared_class)
    : agent_names_(std::move(agent_names)),
      good_names_(std::move(good_names)),
      groups_(std::move(groups)),
      valuations_(std::move(valuations)),
      declared_class_(declared_class) {
  const int n = num_agents();
  const int m = num_goods();
  if (n < 1) throw InputError("instance needs at least one agent");
  check_unique_names(agent_names_, "agent");
  check_unique_names(good_names_, "good");

  if (groups_.empty()) throw InputError("instance needs at least one group");
  group_of_.assign(n, -1);
  for (int k = 0; k < num_groups(); ++k) {
    if (groups_[k].empty()) throw InputError("group " + std::to_string(k) + " is empty");
    for (int agent : groups_[k]) {
      if (agent < 0 || agent >= n) {
        throw InputError("group " + std::to_string(k) + " references invalid agent index " +
                         std::to_string(agent));
      }
      if (group_of_[agent] != -1) {
        throw InputError("agent \"" + agent_names_[agent] + "\" appears in more than one group");
      }
      group_of_[agent] = k;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (group_of_[i] == -1) {
      throw InputError("agent \"" + agent_names_[i] + "\" belongs to no group");
    }
  }

  if (static_cast<int>(valuations_.size()) != n) {
    throw InputError("valuation matrix must have one row per agent");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(valuations_[i].size()) != m) {
      throw InputError("valuation row for agent \"" + agent_names_[i] +
                       "\" must have one entry per good");
    }
    for (const Value& v : valuations_[i]) {
      if (v.is_negative()) {
        throw InputError("negative valuation for agent \"" + agent_names_[i] + "\"");
      }
    }
  }

  // The declared class is validated, not trusted.
  ValuationClass actual = classify(valuations_, groups_);
  if (declared_class_ == ValuationClass::AllCommon && actual != ValuationClass::AllCommon) {
    throw InputError("instance declared all-common but valuation rows differ across agents");
  }
  if (declared_class_ == ValuationClass::GroupCommon && actual == ValuationClass::General) {
    throw InputError("instance declared group-common but valuation rows differ within a group");
  }
}

int Instance::weight(int group) const {
  if (group < 0 || group >= num_groups()) {
    throw InputError("invalid group index " + std::to_string(group));
  }
  return static_cast<int>(groups_[group].size());
}

int Instance::group_of(int agent) const {
  if (agent < 0 || agent >= num_agents()) {
    throw InputError("invalid agent index " + std::to_string(agent));
  }
  return group_of_[agent];
}

const std::vector<int>& Instance::group_members(int group) const {
  if (group < 0 || group >= num_groups()) {
    throw InputError("invalid group index " + std::to_string(group));
  }
  return groups_[group];
}

const Value& Instance::value(int agent, int good) const {
  if (agent < 0 || agent >= num_agents()) {
    throw InputError("invalid agent index " + std::to_string(agent));
  }
  if (good < 0 || good >= num_goods()) {
    throw InputError("invalid good index " + std::to_string(good));
  }
  return valuations_[agent][good];
}

const std::vector<Value>& Instance::row(int agent) const {
  if (agent < 0 || agent >= num_agents()) {
    throw InputError("invalid agent index " + std::to_string(agent));
  }
  return valuations_[agent];
}

const std::string& Instance::agent_name(int agent) const {
  if (agent < 0 || agent >= num_agents()) {
    throw InputError("invalid agent index " + std::to_string(agent));
  }
  return agent_names_[agent];
}

const std::string& Instance::good_name(int good) const {
  if (good < 0 || good >= num_goods()) {
    throw InputError("invalid good index " + std::to_string(good));
  }
  return good_names_[good];
}

int Instance::agent_index(std::string_view name) const {
  auto it = std::find(agent_names_.begin(), agent_names_.end(), name);
  if (it == agent_names_.end()) {
    throw InputError("unknown agent \"" + std::string(name) + "\"");
  }
  return static_cast<int>(it - agent_names_.begin());
}

int Instance::good_index(std::string_view name) const {
  auto it = std::find(good_names_.begin(), good_names_.end(), name);
  if (it == good_names_.end()) {
    throw InputError("unknown good \"" + std::string(name) + "\"");
  }
  return static_cast<int>(it - good_names_.begin());
}

bool Instance::operator==(const Instance& other) const {
  return agent_names_ == other.agent_names_ && good_names_ == other.good_names_ &&
         groups_ == other.groups_ && valuations_ == other.valuations_ &&
         declared_class_ == other.declared_class_;
}

ValuationClass Instance::classify(const std::vector<std::vector<Value>>& valuations,
                                  const std::vector<std::vector<int>>& groups) {
  bool group_common = true;
  for (const auto& members : groups) {
    for (size_t j = 1; j < members.size(); ++j) {
      if (valuations[members[j]] != valuations[members[0]]) {
        group_common = false;
        break;
      }
    }
    if (!group_common) break;
  }
  if (!group_common) return ValuationClass::General;
  bool all_common = true;
  for (size_t i = 1; i < valuations.size(); ++i) {
    if (valuations[i] != valuations[0]) {
      all_common = false;
      break;
    }
  }
  return all_common ? ValuationClass::AllCommon : ValuationClass::GroupCommon;
}

}  // namespace fairdiv
