#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace foon {

struct ObjectNode;
struct SceneState;

// Reserved symbols of the object-centered predicate vocabulary.
inline constexpr const char* kAir = "air";
inline constexpr const char* kTable = "table";
inline constexpr const char* kHand = "hand";

enum class Relation { in, on, under };

std::string relation_name(Relation rel);
std::optional<Relation> relation_from_name(const std::string& name);

// A ground logical fact, either a spatial relation between two objects or a
// unary attribute of one object.
//
// Relation semantics follow the object-centered reading:
//   (in c x)    container c holds x; (in c air) means c is empty
//   (on s x)    x sits on top of s;  (on s air) means the top of s is free
//   (under x s) s is directly beneath x (x rests on/in s)
class Predicate {
public:
  enum class Form { relation, attribute };

  static Predicate relation(Relation rel, std::string focal, std::string relative);
  static Predicate attribute(std::string label, std::string focal);

  Form form() const { return form_; }
  Relation rel() const { return rel_; }
  const std::string& head() const { return head_; }
  const std::string& focal() const { return focal_; }
  const std::string& relative() const { return relative_; }

  bool mentions(const std::string& symbol) const {
    return focal_ == symbol || (form_ == Form::relation && relative_ == symbol);
  }

  // Rendered as a PDDL atom: lowercase, single spaces, e.g. "(in bottle vodka)".
  std::string text() const;

  friend auto operator<=>(const Predicate& a, const Predicate& b) {
    return std::tie(a.head_, a.focal_, a.relative_) <=>
           std::tie(b.head_, b.focal_, b.relative_);
  }
  friend bool operator==(const Predicate& a, const Predicate& b) {
    return std::tie(a.head_, a.focal_, a.relative_) ==
           std::tie(b.head_, b.focal_, b.relative_);
  }

private:
  Predicate() = default;

  Form form_ = Form::attribute;
  Relation rel_ = Relation::in;
  std::string head_;      // relation name or attribute label
  std::string focal_;
  std::string relative_;  // empty for attributes
};

using PredicateSet = std::set<Predicate>;

// Convenience constructors used throughout.
Predicate in(std::string container, std::string content);
Predicate on(std::string surface, std::string object);
Predicate under(std::string object, std::string support);
Predicate attr(std::string label, std::string object);

// A set of facts describing a world snapshot.
struct State {
  PredicateSet facts;

  bool holds(const Predicate& p) const { return facts.count(p) > 0; }
  bool holds_all(const PredicateSet& ps) const;

  // Geometric consistency:
  //  - (in a b), b != air, iff (under b a)
  //  - (on s o), o != air, implies (under o s)
  //  - every (under x y) is grounded by (in y x) or (on y x)
  //  - (in c air) excludes any other (in c _)
  //  - (on s air) excludes any other (on s _)
  //  - an object rests on at most one support
  //  - the hand holds at most one object
  // Violations are returned as human-readable descriptions; empty means
  // consistent.
  std::vector<std::string> consistency_violations() const;
  bool consistent() const { return consistency_violations().empty(); }
};

// Physical-state labels with first-class support; anything else passes
// through as (is-<label> obj) with a warning collected by the caller.
bool is_known_physical_state(const std::string& label);

struct TranslationNote {
  std::string message;
};

// Maps one FOON object node to its predicate facts. Geometric states map to
// their relation with the node as focal object, `empty` maps to (in x air),
// ingredients expand to (in x i) + (under i x), physical states map to
// (is-<state> x). Nodes without an on/under geometric state default to the
// work surface: (on table x) + (under x table). Reserved labels translate
// to nothing.
PredicateSet object_node_to_predicates(const ObjectNode& node,
                                       std::vector<TranslationNote>* notes = nullptr);

// Full predicate snapshot of a table-cell scene: cell occupancy, stackings,
// containments, gripper, orientation and size-class facts. See scene.hpp
// for the scene model itself.
State scene_to_state(const SceneState& scene);

}  // namespace foon
