#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "foon/predicates.hpp"

namespace foon {

inline constexpr int kCellCount = 21;
inline constexpr int kCellColumns = 7;

enum class SizeClass { small, large };
enum class ObjectKind { container, ingredient, tool };
enum class Orientation { upright, upside_down };

struct CellCoord {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

// Cells are numbered cell_1 .. cell_21 across a 7x3 grid, row-major.
std::string cell_name(int id);                     // 1-based id
std::optional<int> cell_id(const std::string& name);
CellCoord cell_coord(int id);
int cell_id_from_coord(CellCoord coord);

struct Cell {
  int id = 0;
  SizeClass size = SizeClass::small;
  std::optional<std::string> occupant;  // ground occupant only
};

struct SceneObject {
  std::string label;
  SizeClass size = SizeClass::small;
  ObjectKind kind = ObjectKind::container;
  std::vector<std::string> contents;     // sorted, unique
  Orientation orientation = Orientation::upright;
  std::set<std::string> attributes;      // raw physical labels, e.g. "mixed"
};

// The symbolic table-top world: 21 cells (3 large), a fixed object catalog,
// single-gripper robot, single-level stacking and containment.
struct SceneState {
  std::vector<Cell> cells;                        // size kCellCount, id order
  std::vector<SceneObject> objects;               // catalog order
  std::optional<std::string> gripper;             // held object
  std::map<std::string, std::string> stacks;      // upper object -> base object

  const SceneObject* find_object(const std::string& label) const;
  SceneObject* find_object(const std::string& label);
  const Cell* cell_of(const std::string& label) const;    // ground cell or null
  const std::string* container_of(const std::string& label) const;

  // The cell ultimately supporting `label` (through one stack level), or
  // nullopt when held or contained.
  std::optional<int> supporting_cell(const std::string& label) const;

  // Invariant violations (each object in exactly one place, large objects on
  // large cells, stacking/occupancy well-formed). Empty means valid. Initial
  // scenes place every non-contained object uniquely; after pour-some steps a
  // substance may legitimately appear in several containers' contents.
  std::vector<std::string> invariant_violations() const;
  bool valid() const { return invariant_violations().empty(); }
};

// The 11-object cocktail layout with canonical placements: object k of the
// scene catalog sits on cell_k (k = 4..14), cells 12-14 are the large cells
// holding spoon, celery stick and knife.
SceneState standard_scene();

struct SceneRandomization {
  double upside_down_glass = 0.25;
  double stacking = 0.30;  // per eligible small object
};

// Deterministic function of the seed: permutes placements within size
// classes, optionally flips the empty glass upside down and stacks small
// objects onto the can or an upright cup.
SceneState random_scene(std::uint64_t seed, const SceneRandomization& cfg = {});

// One grounded plan step as executed against a scene.
struct GroundStep {
  std::string action_name;
  std::vector<std::string> args;
  std::optional<CellCoord> target_cell;

  std::string text() const;

  friend bool operator==(const GroundStep& a, const GroundStep& b) {
    return a.action_name == b.action_name && a.args == b.args;
  }
};

// Applies one micro action to the scene. Preconditions of the step's
// operator must hold in scene_to_state(scene); the translated result equals
// the STRIPS successor of the translated input. Throws
// PreconditionViolatedError listing the offending facts.
SceneState apply_action(const SceneState& scene, const GroundStep& step);

// JSON persistence (schema documented in the README).
std::string scene_to_json(const SceneState& scene);
SceneState scene_from_json(const std::string& text);

}  // namespace foon
