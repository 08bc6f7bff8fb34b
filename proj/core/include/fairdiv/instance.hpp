#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/value.hpp"

namespace fairdiv {

/// How much structure the valuation matrix is declared (and validated) to have.
enum class ValuationClass {
  AllCommon,    // every agent has the same valuation row
  GroupCommon,  // rows are identical within each group
  General,      // unrestricted non-negative rows
};

std::string_view to_string(ValuationClass c);
ValuationClass valuation_class_from_string(std::string_view s);

/// A fair-division problem: named agents partitioned into non-empty groups,
/// named goods, and an n-by-m additive valuation matrix of exact non-negative
/// rationals. A group's weight is always its size; it is never stored or
/// specified independently.
///
/// Immutable after construction. The constructor validates the partition, the
/// sign of every entry, and that the matrix actually satisfies the declared
/// valuation class (a declared all-common instance with differing rows is
/// rejected, it is not trusted).
class Instance {
 public:
  Instance(std::vector<std::string> agent_names,
           std::vector<std::string> good_names,
           std::vector<std::vector<int>> groups,
           std::vector<std::vector<Value>> valuations,
           ValuationClass declared_class);

  int num_agents() const { return static_cast<int>(agent_names_.size()); }
  int num_goods() const { return static_cast<int>(good_names_.size()); }
  int num_groups() const { return static_cast<int>(groups_.size()); }

  /// Group weight w_k = |T_k|.
  int weight(int group) const;

  int group_of(int agent) const;
  const std::vector<int>& group_members(int group) const;
  const std::vector<std::vector<int>>& groups() const { return groups_; }

  const Value& value(int agent, int good) const;
  const std::vector<Value>& row(int agent) const;

  ValuationClass valuation_class() const { return declared_class_; }

  const std::vector<std::string>& agent_names() const { return agent_names_; }
  const std::vector<std::string>& good_names() const { return good_names_; }
  const std::string& agent_name(int agent) const;
  const std::string& good_name(int good) const;
  int agent_index(std::string_view name) const;  // throws InputError if unknown
  int good_index(std::string_view name) const;

  bool operator==(const Instance& other) const;

  /// Strongest class the matrix actually satisfies under the given partition.
  static ValuationClass classify(const std::vector<std::vector<Value>>& valuations,
                                 const std::vector<std::vector<int>>& groups);

 private:
  std::vector<std::string> agent_names_;
  std::vector<std::string> good_names_;
  std::vector<std::vector<int>> groups_;
  std::vector<int> group_of_;
  std::vector<std::vector<Value>> valuations_;
  ValuationClass declared_class_;
};

}  // namespace fairdiv
