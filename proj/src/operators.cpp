#include "foon/operators.hpp"

#include <algorithm>

namespace foon {

std::string symbol_type_name(SymbolType type) {
  switch (type) {
    case SymbolType::object: return "object";
    case SymbolType::container: return "container";
    case SymbolType::ingredient: return "ingredient";
    case SymbolType::surface: return "surface";
    case SymbolType::tool: return "tool";
    case SymbolType::robot: return "robot";
  }
  return "?";
}

namespace {

bool is_variable(const std::string& symbol) {
  return !symbol.empty() && symbol[0] == '?';
}

void collect_symbols(const PredicateSet& ps, std::vector<std::string>& out) {
  for (const auto& p : ps) {
    out.push_back(p.focal());
    if (p.form() == Predicate::Form::relation) out.push_back(p.relative());
  }
}

}  // namespace

std::vector<std::string> operator_violations(const PlanningOperator& op) {
  std::vector<std::string> violations;
  for (const auto& p : op.add_effects) {
    if (op.delete_effects.count(p))
      violations.push_back("operator '" + op.name + "' both adds and deletes " +
                           p.text());
  }
  std::vector<std::string> symbols;
  collect_symbols(op.preconditions, symbols);
  collect_symbols(op.add_effects, symbols);
  collect_symbols(op.delete_effects, symbols);
  for (const auto& s : symbols) {
    if (!is_variable(s)) continue;
    bool declared = std::any_of(op.parameters.begin(), op.parameters.end(),
                                [&](const TypedSymbol& t) { return t.name == s; });
    if (!declared)
      violations.push_back("operator '" + op.name + "' references undeclared parameter " +
                           s);
  }
  return violations;
}

}  // namespace foon
