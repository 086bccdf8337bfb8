#pragma once

#include <string>
#include <vector>

#include "foon/operators.hpp"
#include "foon/predicates.hpp"

namespace foon {

// A rendered PDDL document. The emitted text is canonical: two-space
// indentation, lowercase symbols, atoms sorted within each block, LF line
// endings. Effects list changed facts only (adds, then (not ...) deletes).
struct PddlDocument {
  enum class Kind { domain, problem };

  Kind kind = Kind::domain;
  std::string name;
  std::string text;
};

struct PddlDomain {
  std::string name;
  std::vector<std::string> requirements;
  std::vector<TypedSymbol> constants;
  std::vector<PlanningOperator> actions;
};

struct PddlProblem {
  std::string name;
  std::string domain;
  std::vector<TypedSymbol> objects;
  PredicateSet init;
  PredicateSet goal;
};

PddlDocument render_domain(const std::string& name,
                           const std::vector<PlanningOperator>& actions,
                           const std::vector<TypedSymbol>& constants,
                           bool declare_types);
PddlDocument render_problem(const std::string& name, const std::string& domain_name,
                            const std::vector<TypedSymbol>& objects,
                            const PredicateSet& init, const PredicateSet& goal);

// Minimal reader for the emitted subset; primarily used to check the
// well-formedness invariant and by round-trip tests. Throws foon::Error on
// malformed input.
PddlDomain parse_domain(const std::string& text);
PddlProblem parse_problem(const std::string& text);

}  // namespace foon
