#include "foon/macro_compiler.hpp"

#include <algorithm>
#include <set>

#include "foon/errors.hpp"

namespace foon {

namespace {

const ObjectNode* input_counterpart(const FunctionalUnit& unit, const std::string& label) {
  for (const auto& node : unit.inputs)
    if (node.label == label) return &node;
  return nullptr;
}

std::string primary_object(const FunctionalUnit& unit) {
  for (const auto& output : unit.outputs) {
    const ObjectNode* counterpart = input_counterpart(unit, output.label);
    if (counterpart && *counterpart == output) continue;
    if (counterpart) {
      std::vector<std::string> gained;
      std::set_difference(output.ingredients.begin(), output.ingredients.end(),
                          counterpart->ingredients.begin(),
                          counterpart->ingredients.end(), std::back_inserter(gained));
      if (!gained.empty()) return gained.front();
    }
    return output.label;
  }
  return unit.outputs.front().label;
}

}  // namespace

PlanningOperator compile_macro_po(const FunctionalUnit& unit, std::size_t index) {
  PredicateSet pre;
  for (const auto& node : unit.inputs) {
    PredicateSet facts = object_node_to_predicates(node);
    pre.insert(facts.begin(), facts.end());
  }
  PredicateSet out;
  for (const auto& node : unit.outputs) {
    PredicateSet facts = object_node_to_predicates(node);
    out.insert(facts.begin(), facts.end());
  }

  PlanningOperator op;
  op.name = unit.motion.label + "_" + primary_object(unit) + "_" + std::to_string(index);
  std::set_difference(out.begin(), out.end(), pre.begin(), pre.end(),
                      std::inserter(op.add_effects, op.add_effects.end()));
  std::set_difference(pre.begin(), pre.end(), out.begin(), out.end(),
                      std::inserter(op.delete_effects, op.delete_effects.end()));
  op.preconditions = std::move(pre);
  return op;
}

std::vector<PlanningOperator> compile_task_tree(const TaskTree& tree) {
  std::vector<PlanningOperator> ops;
  ops.reserve(tree.units.size());
  for (std::size_t i = 0; i < tree.units.size(); ++i)
    ops.push_back(compile_macro_po(tree.units[i], i));
  return ops;
}

std::vector<std::string> collect_symbols(const std::vector<PlanningOperator>& ops,
                                         const PredicateSet& extra) {
  std::set<std::string> symbols;
  auto take = [&](const PredicateSet& ps) {
    for (const auto& p : ps) {
      symbols.insert(p.focal());
      if (p.form() == Predicate::Form::relation) symbols.insert(p.relative());
    }
  };
  for (const auto& op : ops) {
    take(op.preconditions);
    take(op.add_effects);
    take(op.delete_effects);
  }
  take(extra);
  return {symbols.begin(), symbols.end()};
}

PddlDocument emit_macro_domain(const std::string& name,
                               const std::vector<PlanningOperator>& ops,
                               const std::vector<std::string>& symbols) {
  std::set<std::string> names;
  for (const auto& op : ops)
    if (!names.insert(op.name).second)
      throw NameCollisionError("duplicate macro operator name '" + op.name + "'");

  std::vector<TypedSymbol> constants;
  for (const auto& s : symbols) constants.push_back({s, SymbolType::object});
  return render_domain(name, ops, constants, /*declare_types=*/false);
}

PredicateSet kitchen_init(const std::vector<ObjectNode>& kitchen) {
  PredicateSet init;
  for (const auto& node : kitchen) {
    PredicateSet facts = object_node_to_predicates(node);
    init.insert(facts.begin(), facts.end());
  }
  return init;
}

PddlDocument emit_macro_problem(const std::string& name, const std::string& domain_name,
                                const std::vector<ObjectNode>& kitchen,
                                const ObjectNode& goal) {
  State init{kitchen_init(kitchen)};
  auto violations = init.consistency_violations();
  if (!violations.empty())
    throw InconsistentInitError("kitchen init is inconsistent: " + violations.front());
  PredicateSet goal_preds = object_node_to_predicates(goal);
  return render_problem(name, domain_name, {}, init.facts, goal_preds);
}

}  // namespace foon
