#include "foon/foon_graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "foon/errors.hpp"

namespace foon {

StateAttribute geometric_state(const std::string& rel, std::string relative_object) {
  StateAttribute s;
  s.kind = StateAttribute::Kind::geometric;
  s.label = rel;
  s.relative_object = std::move(relative_object);
  return s;
}

StateAttribute physical_state(std::string label) {
  StateAttribute s;
  s.kind = StateAttribute::Kind::physical;
  s.label = std::move(label);
  return s;
}

bool ObjectNode::has_geometric_placement() const {
  return std::any_of(states.begin(), states.end(), [](const StateAttribute& s) {
    return s.kind == StateAttribute::Kind::geometric &&
           (s.label == "on" || s.label == "under");
  });
}

bool ObjectNode::has_physical_state(const std::string& label_) const {
  return std::any_of(states.begin(), states.end(), [&](const StateAttribute& s) {
    return s.kind == StateAttribute::Kind::physical && s.label == label_;
  });
}

bool ObjectNode::matches_ignoring_geometry(const ObjectNode& other) const {
  if (label != other.label || ingredients != other.ingredients) return false;
  auto physical_of = [](const ObjectNode& n) {
    std::vector<StateAttribute> ps;
    for (const auto& s : n.states)
      if (s.kind == StateAttribute::Kind::physical) ps.push_back(s);
    return ps;
  };
  return physical_of(*this) == physical_of(other);
}

ObjectNode make_object_node(std::string label, std::vector<StateAttribute> states,
                            std::vector<std::string> ingredients) {
  ObjectNode node;
  node.label = std::move(label);
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  // State labels are unique regardless of kind/relative.
  std::vector<StateAttribute> unique_labels;
  for (auto& s : states) {
    bool seen = std::any_of(unique_labels.begin(), unique_labels.end(),
                            [&](const StateAttribute& u) { return u.label == s.label; });
    if (!seen) unique_labels.push_back(std::move(s));
  }
  node.states = std::move(unique_labels);
  std::sort(ingredients.begin(), ingredients.end());
  ingredients.erase(std::unique(ingredients.begin(), ingredients.end()),
                    ingredients.end());
  node.ingredients = std::move(ingredients);
  return node;
}

bool FOONGraph::contains_unit(const FunctionalUnit& unit) const {
  return std::find(units.begin(), units.end(), unit) != units.end();
}

void FOONGraph::add_goal_candidate(const ObjectNode& node) {
  auto it = std::lower_bound(goal_candidates.begin(), goal_candidates.end(), node);
  if (it == goal_candidates.end() || *it != node) goal_candidates.insert(it, node);
}

FOONGraph merge_subgraphs(const std::vector<FOONGraph>& subgraphs) {
  FOONGraph merged;
  for (const auto& g : subgraphs) {
    for (const auto& unit : g.units)
      if (!merged.contains_unit(unit)) merged.units.push_back(unit);
    for (const auto& goal : g.goal_candidates) merged.add_goal_candidate(goal);
  }
  return merged;
}

namespace {

bool available_in(const std::vector<ObjectNode>& pool, const ObjectNode& node) {
  return std::any_of(pool.begin(), pool.end(), [&](const ObjectNode& p) {
    return p.matches_ignoring_geometry(node);
  });
}

struct Retrieval {
  const FOONGraph& foon;
  const std::vector<ObjectNode>& kitchen;
  std::vector<std::size_t> selected;
  std::vector<ObjectNode> produced;

  bool satisfied(const ObjectNode& node) const {
    return available_in(kitchen, node) || available_in(produced, node);
  }

  // Tries to make `target` available. `expanding` carries the nodes on the
  // current expansion stack; revisiting one would cycle, so such candidate
  // units are skipped.
  bool expand(const ObjectNode& target, std::vector<ObjectNode>& expanding) {
    if (satisfied(target)) return true;
    if (std::any_of(expanding.begin(), expanding.end(), [&](const ObjectNode& n) {
          return n.matches_ignoring_geometry(target);
        }))
      return false;
    expanding.push_back(target);
    for (std::size_t idx = 0; idx < foon.units.size(); ++idx) {
      const FunctionalUnit& unit = foon.units[idx];
      bool outputs_target =
          std::any_of(unit.outputs.begin(), unit.outputs.end(), [&](const ObjectNode& o) {
            return o.matches_ignoring_geometry(target);
          });
      if (!outputs_target) continue;
      if (std::find(selected.begin(), selected.end(), idx) != selected.end()) continue;

      auto selected_snapshot = selected;
      auto produced_snapshot = produced;
      bool ok = true;
      for (const auto& input : unit.inputs) {
        if (!expand(input, expanding)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        selected.push_back(idx);
        produced.insert(produced.end(), unit.outputs.begin(), unit.outputs.end());
        expanding.pop_back();
        return true;
      }
      selected = std::move(selected_snapshot);
      produced = std::move(produced_snapshot);
    }
    expanding.pop_back();
    return false;
  }
};

}  // namespace

TaskTree retrieve_task_tree(const FOONGraph& foon, const ObjectNode& goal,
                            const std::vector<ObjectNode>& kitchen) {
  if (available_in(kitchen, goal)) return {};

  bool known = std::any_of(foon.units.begin(), foon.units.end(), [&](const FunctionalUnit& u) {
    return std::any_of(u.outputs.begin(), u.outputs.end(), [&](const ObjectNode& o) {
      return o.matches_ignoring_geometry(goal);
    });
  });
  if (!known)
    throw GoalUnknownError("goal node '" + goal.label +
                           "' appears in no unit output and is not in the kitchen");

  Retrieval r{foon, kitchen, {}, {}};
  std::vector<ObjectNode> expanding;
  if (!r.expand(goal, expanding))
    throw UnsolvableError("no unit sequence produces goal node '" + goal.label +
                          "' from the kitchen");

  TaskTree tree;
  for (std::size_t idx : r.selected) {
    tree.units.push_back(foon.units[idx]);
    tree.provenance.push_back(idx);
  }
  return tree;
}

bool task_tree_is_sound(const TaskTree& tree, const ObjectNode& goal,
                        const std::vector<ObjectNode>& kitchen) {
  std::vector<ObjectNode> pool = kitchen;
  for (const auto& unit : tree.units) {
    for (const auto& input : unit.inputs)
      if (!available_in(pool, input)) return false;
    pool.insert(pool.end(), unit.outputs.begin(), unit.outputs.end());
  }
  if (tree.empty()) return available_in(kitchen, goal);
  const auto& last = tree.units.back();
  return std::any_of(last.outputs.begin(), last.outputs.end(), [&](const ObjectNode& o) {
           return o.matches_ignoring_geometry(goal);
         }) ||
         available_in(pool, goal);
}

}  // namespace foon
