#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace foon {

// One state attribute of an object node. Geometric attributes relate the
// node to another object (in/on/under); physical attributes are unary
// (whole, sliced, mixed, empty, ...).
struct StateAttribute {
  enum class Kind { geometric, physical };

  Kind kind = Kind::physical;
  std::string label;
  std::string relative_object;  // geometric only

  friend auto operator<=>(const StateAttribute&, const StateAttribute&) = default;
};

StateAttribute geometric_state(const std::string& rel, std::string relative_object);
StateAttribute physical_state(std::string label);

// An object node: type label, state attributes and (optionally) the
// ingredients it is made up of. Two nodes are equal iff label, states and
// ingredient set are all equal; states and ingredients are kept sorted so
// equality is structural.
struct ObjectNode {
  std::string label;
  std::vector<StateAttribute> states;      // sorted, unique labels
  std::vector<std::string> ingredients;    // sorted, unique

  bool has_geometric_placement() const;    // any on/under state
  bool has_physical_state(const std::string& label) const;

  // Availability matching ignores geometric states: label, physical states
  // and ingredients must agree.
  bool matches_ignoring_geometry(const ObjectNode& other) const;

  friend auto operator<=>(const ObjectNode&, const ObjectNode&) = default;
};

// Canonicalizing builder: sorts states/ingredients, drops duplicates.
ObjectNode make_object_node(std::string label,
                            std::vector<StateAttribute> states = {},
                            std::vector<std::string> ingredients = {});

struct MotionNode {
  std::string label;

  friend auto operator<=>(const MotionNode&, const MotionNode&) = default;
};

// The atomic FOON element: input object nodes, one motion, output object
// nodes. Node order within a unit follows the source file.
struct FunctionalUnit {
  std::vector<ObjectNode> inputs;
  MotionNode motion;
  std::vector<ObjectNode> outputs;

  friend auto operator<=>(const FunctionalUnit&, const FunctionalUnit&) = default;
};

// A FOON graph as an ordered list of functional units. Unit index is stable
// and 0-based. Edges of the bipartite graph are implicit in unit membership.
struct FOONGraph {
  std::vector<FunctionalUnit> units;
  std::vector<ObjectNode> goal_candidates;  // sorted, unique

  bool contains_unit(const FunctionalUnit& unit) const;
  void add_goal_candidate(const ObjectNode& node);
};

// An executable subgraph: units in execution order plus, for each unit, its
// index in the source graph.
struct TaskTree {
  std::vector<FunctionalUnit> units;
  std::vector<std::size_t> provenance;

  bool empty() const { return units.empty(); }
  std::size_t size() const { return units.size(); }
};

// Merges subgraphs into a universal FOON: unit-for-unit union with exact
// duplicates removed (first occurrence kept, order preserved) and goal
// candidates unioned.
FOONGraph merge_subgraphs(const std::vector<FOONGraph>& subgraphs);

// Backward search for a unit sequence that produces `goal` from `kitchen`.
// Availability checks ignore geometric states. Ties between units producing
// the same node are broken toward the lowest unit index; nodes under
// expansion are marked visited so cyclic graphs terminate.
//
// Throws GoalUnknownError when the goal matches no unit output and is not in
// the kitchen, UnsolvableError when candidates exist but none can be
// satisfied.
TaskTree retrieve_task_tree(const FOONGraph& foon, const ObjectNode& goal,
                            const std::vector<ObjectNode>& kitchen);

// True iff every input of units[i] is available from the kitchen or the
// outputs of units[j<i], and the final unit outputs the goal (or the goal is
// in the kitchen for an empty tree). Used by tests to replay-check retrieval.
bool task_tree_is_sound(const TaskTree& tree, const ObjectNode& goal,
                        const std::vector<ObjectNode>& kitchen);

}  // namespace foon
