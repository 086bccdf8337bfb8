#include "foon/predicates.hpp"

#include <algorithm>
#include <map>

#include "foon/errors.hpp"
#include "foon/foon_graph.hpp"

namespace foon {

std::string relation_name(Relation rel) {
  switch (rel) {
    case Relation::in: return "in";
    case Relation::on: return "on";
    case Relation::under: return "under";
  }
  return "?";
}

std::optional<Relation> relation_from_name(const std::string& name) {
  if (name == "in") return Relation::in;
  if (name == "on") return Relation::on;
  if (name == "under") return Relation::under;
  return std::nullopt;
}

Predicate Predicate::relation(Relation rel, std::string focal, std::string relative) {
  if (focal.empty() || relative.empty())
    throw UnknownRelationError("relation predicate requires two symbols");
  if (focal == relative)
    throw UnknownRelationError("relation predicate cannot relate '" + focal +
                               "' to itself");
  Predicate p;
  p.form_ = Form::relation;
  p.rel_ = rel;
  p.head_ = relation_name(rel);
  p.focal_ = std::move(focal);
  p.relative_ = std::move(relative);
  return p;
}

Predicate Predicate::attribute(std::string label, std::string focal) {
  if (label.empty() || focal.empty())
    throw UnknownRelationError("attribute predicate requires label and symbol");
  Predicate p;
  p.form_ = Form::attribute;
  p.head_ = std::move(label);
  p.focal_ = std::move(focal);
  return p;
}

std::string Predicate::text() const {
  if (form_ == Form::relation) return "(" + head_ + " " + focal_ + " " + relative_ + ")";
  return "(" + head_ + " " + focal_ + ")";
}

Predicate in(std::string container, std::string content) {
  return Predicate::relation(Relation::in, std::move(container), std::move(content));
}

Predicate on(std::string surface, std::string object) {
  return Predicate::relation(Relation::on, std::move(surface), std::move(object));
}

Predicate under(std::string object, std::string support) {
  return Predicate::relation(Relation::under, std::move(object), std::move(support));
}

Predicate attr(std::string label, std::string object) {
  return Predicate::attribute(std::move(label), std::move(object));
}

bool State::holds_all(const PredicateSet& ps) const {
  return std::all_of(ps.begin(), ps.end(), [&](const Predicate& p) { return holds(p); });
}

std::vector<std::string> State::consistency_violations() const {
  std::vector<std::string> violations;
  auto violation = [&](const std::string& msg) { violations.push_back(msg); };

  std::map<std::string, std::vector<const Predicate*>> in_by_container;
  std::map<std::string, std::vector<const Predicate*>> on_by_surface;
  std::map<std::string, int> supports_of;  // object -> count of (on s obj)

  for (const auto& p : facts) {
    if (p.form() != Predicate::Form::relation) continue;
    switch (p.rel()) {
      case Relation::in:
        in_by_container[p.focal()].push_back(&p);
        break;
      case Relation::on:
        on_by_surface[p.focal()].push_back(&p);
        if (p.relative() != kAir) supports_of[p.relative()] += 1;
        break;
      case Relation::under:
        break;
    }
  }

  for (const auto& [container, ps] : in_by_container) {
    bool has_air = std::any_of(ps.begin(), ps.end(),
                               [](const Predicate* p) { return p->relative() == kAir; });
    if (has_air && ps.size() > 1)
      violation("container '" + container + "' is both empty and filled");
    for (const Predicate* p : ps) {
      if (p->relative() == kAir) continue;
      if (!holds(under(p->relative(), container)))
        violation(p->text() + " lacks its (under " + p->relative() + " " + container +
                  ") pairing");
    }
  }

  for (const auto& [surface, ps] : on_by_surface) {
    bool has_air = std::any_of(ps.begin(), ps.end(),
                               [](const Predicate* p) { return p->relative() == kAir; });
    if (has_air && ps.size() > 1)
      violation("surface '" + surface + "' is both free and occupied");
    for (const Predicate* p : ps) {
      if (p->relative() == kAir) continue;
      if (!holds(under(p->relative(), surface)))
        violation(p->text() + " lacks its (under " + p->relative() + " " + surface +
                  ") pairing");
    }
  }

  for (const auto& [object, count] : supports_of) {
    if (count > 1)
      violation("object '" + object + "' rests on " + std::to_string(count) +
                " supports");
  }

  // Every (under x y) must be grounded by a containment or support fact.
  for (const auto& p : facts) {
    if (p.form() != Predicate::Form::relation || p.rel() != Relation::under) continue;
    if (p.relative() == kAir) continue;  // held object, grounded by (in hand x)
    if (!holds(in(p.relative(), p.focal())) && !holds(on(p.relative(), p.focal())))
      violation(p.text() + " has neither (in " + p.relative() + " " + p.focal() +
                ") nor (on " + p.relative() + " " + p.focal() + ")");
  }

  auto hand_it = in_by_container.find(kHand);
  if (hand_it != in_by_container.end()) {
    int held = 0;
    for (const Predicate* p : hand_it->second)
      if (p->relative() != kAir) ++held;
    if (held > 1) violation("the hand holds more than one object");
  }

  return violations;
}

bool is_known_physical_state(const std::string& label) {
  static const std::vector<std::string> known = {"whole", "sliced", "mixed", "chopped",
                                                 "cooked"};
  return std::find(known.begin(), known.end(), label) != known.end();
}

PredicateSet object_node_to_predicates(const ObjectNode& node,
                                       std::vector<TranslationNote>* notes) {
  PredicateSet facts;
  if (node.label == kAir || node.label == kTable || node.label == kHand) return facts;

  bool placed_explicitly = false;
  for (const auto& state : node.states) {
    if (state.kind != StateAttribute::Kind::geometric) continue;
    auto rel = relation_from_name(state.label);
    if (!rel)
      throw UnknownRelationError("geometric state '" + state.label + "' on node '" +
                                 node.label + "' is not one of in/on/under");
    const std::string& other = state.relative_object;
    switch (*rel) {
      case Relation::in:  // node contains `other`
        facts.insert(in(node.label, other));
        if (other != kAir) facts.insert(under(other, node.label));
        break;
      case Relation::on:  // `other` sits on node
        facts.insert(on(node.label, other));
        if (other != kAir) facts.insert(under(other, node.label));
        placed_explicitly = true;
        break;
      case Relation::under:  // node rests on `other`
        facts.insert(under(node.label, other));
        facts.insert(on(other, node.label));
        placed_explicitly = true;
        break;
    }
  }

  if (!placed_explicitly) {
    facts.insert(under(node.label, kTable));
    facts.insert(on(kTable, node.label));
  }

  for (const auto& state : node.states) {
    if (state.kind != StateAttribute::Kind::physical) continue;
    if (state.label == "empty") {
      facts.insert(in(node.label, kAir));
      continue;
    }
    if (!is_known_physical_state(state.label) && notes)
      notes->push_back({"physical state '" + state.label + "' on node '" + node.label +
                        "' is outside the known vocabulary; passed through"});
    facts.insert(attr("is-" + state.label, node.label));
  }

  for (const auto& ingredient : node.ingredients) {
    facts.insert(in(node.label, ingredient));
    facts.insert(under(ingredient, node.label));
  }

  return facts;
}

}  // namespace foon
