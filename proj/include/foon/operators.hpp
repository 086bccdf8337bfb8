#pragma once

#include <string>
#include <vector>

#include "foon/predicates.hpp"

namespace foon {

enum class SymbolType { object, container, ingredient, surface, tool, robot };

std::string symbol_type_name(SymbolType type);

struct TypedSymbol {
  std::string name;
  SymbolType type = SymbolType::object;

  friend auto operator<=>(const TypedSymbol&, const TypedSymbol&) = default;
};

// A STRIPS planning operator. Macro-level operators are fully ground
// (empty parameter list); micro-level operators are lifted and use `?name`
// placeholders inside their predicate arguments.
struct PlanningOperator {
  std::string name;
  std::vector<TypedSymbol> parameters;
  PredicateSet preconditions;
  PredicateSet add_effects;
  PredicateSet delete_effects;

  bool ground() const { return parameters.empty(); }
};

// add/delete disjointness plus well-formedness of parameter references.
std::vector<std::string> operator_violations(const PlanningOperator& op);

}  // namespace foon
