#include "fairdiv/fixtures.hpp"

#include "fairdiv/audit.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/oracle.hpp"

namespace fairdiv {
namespace fixtures {

namespace {

Instance all_common(std::vector<std::string> agents, std::vector<std::string> goods,
                    std::vector<std::vector<int>> groups, std::vector<Value> row) {
  std::vector<std::vector<Value>> matrix(agents.size(), row);
  return Instance(std::move(agents), std::move(goods), std::move(groups), std::move(matrix),
                  ValuationClass::AllCommon);
}

void require_large_constant(const Value& c) {
  if (c < Value(2)) throw InputError("fixture constant c must be at least 2");
}

}  // namespace

Instance prop2(const Value& c) {
  require_large_constant(c);
  return all_common({"p1", "p2", "p3", "p4"}, {"g1", "g2", "g3", "g4"}, {{0, 1}, {2, 3}},
                    {c, Value(1), Value(1), Value(1)});
}

Instance prop3a(const Value& c) {
  require_large_constant(c);
  return all_common({"p1", "p2", "p3", "p4"}, {"g1", "g2", "g3", "g4"}, {{0, 1}, {2, 3}},
                    {c, c, Value(1), Value(1)});
}

Instance prop3b(const Value& c) {
  require_large_constant(c);
  return all_common({"p1", "p2", "p3"}, {"g1", "g2", "g3"}, {{0, 1}, {2}},
                    {c, Value(1), Value(1)});
}

Instance example_s2(const Value& c) {
  if (!c.is_positive()) throw InputError("fixture constant c must be positive");
  return all_common({"p1", "p2", "p3"}, {"g1", "g2", "g3", "g4", "g5"}, {{0}, {1, 2}},
                    {c, c, c, c, c});
}

Allocation example_s2_allocation(const Instance& inst) {
  return Allocation::make_complete({{0}, {1, 2}, {3, 4}}, inst);
}

std::vector<Value> default_c_sweep() {
  return {Value(2), Value(10), Value(100), Value(1000000)};
}

std::vector<Certification> certify_all(const std::vector<Value>& c_sweep) {
  std::vector<Certification> out;
  auto run = [&out](std::string fixture, const Value& c, std::string claim, bool expected,
                    const Instance& inst, const std::vector<Notion>& required,
                    const std::vector<Notion>& forbidden) {
    OracleResult res = enumerate_where(
        inst,
        [&](const Allocation& alloc) {
          for (Notion n : required) {
            if (!satisfies(inst, alloc, n, Value(3))) return false;
          }
          for (Notion n : forbidden) {
            if (satisfies(inst, alloc, n, Value(3))) return false;
          }
          return true;
        },
        Query::Mode::Exists);
    bool actual = res.verdict == OracleResult::Verdict::Exists;
    out.push_back({std::move(fixture), c, std::move(claim), expected, actual, expected == actual,
                   res.allocations_examined});
  };

  for (const Value& c : c_sweep) {
    // A one-good-per-agent allocation exists that is both ef1 and wefx only
    // while c/2 <= 1; beyond that the group holding the big good is always
    // envied even after removing its least valued good.
    run("prop2", c, "ef1-and-wefx-allocation-exists", c <= Value(2), prop2(c), {Notion::Ef1, Notion::Wefx},
        {});

    // Giving both big goods to one pair is efx but stops being wef1 once
    // (2c - c)/2 exceeds 1, i.e. beyond c = 2.
    run("prop3a", c, "efx-without-wef1-allocation-exists", c > Value(2), prop3a(c),
        {Notion::Efx}, {Notion::Wef1});
    run("prop3a", c, "efx-and-wef1-allocation-exists", true, prop3a(c),
        {Notion::Efx, Notion::Wef1}, {});

    // The big good alone covers the two-agent group's weighted share, but
    // one of its members walks away empty-handed.
    run("prop3b", c, "wef1-without-ef1-allocation-exists", true, prop3b(c), {Notion::Wef1},
        {Notion::Ef1});

    // The worked allocation: individually fine up to one good, but the
    // singleton group's weighted envy survives any single removal.
    Instance example = example_s2(c);
    Allocation alloc = example_s2_allocation(example);
    FairnessReport report = audit_all(example, alloc);
    auto audit_claim = [&](std::string claim, bool expected, bool actual) {
      out.push_back({"example_s2", c, std::move(claim), expected, actual, expected == actual, 1});
    };
    audit_claim("allocation-is-ef1", true, report.ef1->pass);
    audit_claim("allocation-fails-wef1", true, !report.wef1->pass);
    audit_claim("allocation-fails-wefx", true, !report.wefx->pass);
  }
  return out;
}

}  // namespace fixtures
}  // namespace fairdiv
