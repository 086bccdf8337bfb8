#pragma once

#include <string>
#include <vector>

#include "foon/foon_graph.hpp"
#include "foon/operators.hpp"
#include "foon/pddl.hpp"
#include "foon/predicates.hpp"

namespace foon {

// Compiles one functional unit into a ground macro operator:
//   preconditions = union of input-node translations
//   add effects   = union of output-node translations minus preconditions
//   delete effects = preconditions minus output translations
// The name is <motion>_<primary>_<index> where the primary object comes from
// the first output node that differs from its same-label input counterpart;
// when the difference is a gained ingredient, the ingredient names the
// action (pour_vodka_0 rather than pour_drinking_glass_0).
PlanningOperator compile_macro_po(const FunctionalUnit& unit, std::size_t index);

std::vector<PlanningOperator> compile_task_tree(const TaskTree& tree);

// All symbols mentioned by the given operators and fact sets.
std::vector<std::string> collect_symbols(const std::vector<PlanningOperator>& ops,
                                         const PredicateSet& extra = {});

// Ground macro domain; all symbols are declared as constants. Throws
// NameCollisionError on duplicate operator names.
PddlDocument emit_macro_domain(const std::string& name,
                               const std::vector<PlanningOperator>& ops,
                               const std::vector<std::string>& symbols);

// Macro problem: init is the kitchen translation, goal the goal-node
// translation. Throws InconsistentInitError when the init set violates
// State consistency.
PddlDocument emit_macro_problem(const std::string& name, const std::string& domain_name,
                                const std::vector<ObjectNode>& kitchen,
                                const ObjectNode& goal);

PredicateSet kitchen_init(const std::vector<ObjectNode>& kitchen);

}  // namespace foon
