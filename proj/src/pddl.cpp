#include "foon/pddl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <variant>

#include "foon/errors.hpp"

namespace foon {

namespace {

void collect_predicate_schemas(const PredicateSet& ps,
                               std::map<std::string, int>& schemas) {
  for (const auto& p : ps)
    schemas[p.head()] = p.form() == Predicate::Form::relation ? 2 : 1;
}

std::string parameter_list(const std::vector<TypedSymbol>& params) {
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += " ";
    out += params[i].name + " - " + symbol_type_name(params[i].type);
  }
  out += ")";
  return out;
}

// "(and\n<indent>line\n...)" or "(and)" when empty; no trailing newline.
std::string and_block(const std::vector<std::string>& lines, const std::string& indent) {
  if (lines.empty()) return "(and)";
  std::string out = "(and";
  for (const auto& line : lines) out += "\n" + indent + line;
  out += ")";
  return out;
}

std::string typed_symbol_block(std::vector<TypedSymbol> symbols, const std::string& head,
                               const std::string& indent) {
  std::sort(symbols.begin(), symbols.end());
  if (symbols.empty()) return "(" + head + ")";
  std::string out = "(" + head;
  for (const auto& s : symbols)
    out += "\n" + indent + s.name + " - " + symbol_type_name(s.type);
  out += ")";
  return out;
}

std::vector<std::string> atom_lines(const PredicateSet& atoms) {
  std::vector<std::string> lines;
  for (const auto& a : atoms) lines.push_back(a.text());
  return lines;
}

}  // namespace

PddlDocument render_domain(const std::string& name,
                           const std::vector<PlanningOperator>& actions,
                           const std::vector<TypedSymbol>& constants,
                           bool declare_types) {
  std::ostringstream out;
  out << "(define (domain " << name << ")\n";
  out << "  (:requirements :strips :typing)\n";
  if (declare_types) {
    out << "  (:types container ingredient surface tool robot - object)\n";
  } else {
    out << "  (:types object)\n";
  }
  if (!constants.empty())
    out << "  " << typed_symbol_block(constants, ":constants", "    ") << "\n";

  std::map<std::string, int> schemas;
  for (const auto& op : actions) {
    collect_predicate_schemas(op.preconditions, schemas);
    collect_predicate_schemas(op.add_effects, schemas);
    collect_predicate_schemas(op.delete_effects, schemas);
  }
  if (!schemas.empty()) {
    out << "  (:predicates";
    for (const auto& [head, arity] : schemas) {
      out << "\n    (" << head << " ?x - object";
      if (arity == 2) out << " ?y - object";
      out << ")";
    }
    out << ")\n";
  }

  for (const auto& op : actions) {
    out << "  (:action " << op.name << "\n";
    out << "    :parameters " << parameter_list(op.parameters) << "\n";
    out << "    :precondition " << and_block(atom_lines(op.preconditions), "      ")
        << "\n";
    std::vector<std::string> effects = atom_lines(op.add_effects);
    for (const auto& a : op.delete_effects) effects.push_back("(not " + a.text() + ")");
    out << "    :effect " << and_block(effects, "      ") << ")\n";
  }
  std::string text = out.str();
  text.pop_back();  // fold the trailing newline into the closing paren
  text += ")\n";
  return {PddlDocument::Kind::domain, name, text};
}

PddlDocument render_problem(const std::string& name, const std::string& domain_name,
                            const std::vector<TypedSymbol>& objects,
                            const PredicateSet& init, const PredicateSet& goal) {
  std::ostringstream out;
  out << "(define (problem " << name << ")\n";
  out << "  (:domain " << domain_name << ")\n";
  out << "  " << typed_symbol_block(objects, ":objects", "    ") << "\n";
  out << "  (:init";
  for (const auto& a : init) out << "\n    " << a.text();
  out << ")\n";
  out << "  (:goal " << and_block(atom_lines(goal), "    ") << "))\n";
  return {PddlDocument::Kind::problem, name, out.str()};
}

// ---------------------------------------------------------------------------
// Subset reader
// ---------------------------------------------------------------------------

namespace {

struct Sexp {
  std::variant<std::string, std::vector<Sexp>> value;

  bool is_atom() const { return std::holds_alternative<std::string>(value); }
  const std::string& atom() const { return std::get<std::string>(value); }
  const std::vector<Sexp>& list() const { return std::get<std::vector<Sexp>>(value); }
};

class SexpParser {
public:
  explicit SexpParser(const std::string& text) : text_(text) {}

  Sexp parse() {
    skip_space();
    Sexp result = parse_one();
    skip_space();
    if (pos_ != text_.size()) throw Error("pddl: trailing content after document");
    return result;
  }

private:
  Sexp parse_one() {
    skip_space();
    if (pos_ >= text_.size()) throw Error("pddl: unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      std::vector<Sexp> items;
      while (true) {
        skip_space();
        if (pos_ >= text_.size()) throw Error("pddl: unbalanced parenthesis");
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        items.push_back(parse_one());
      }
      return Sexp{std::move(items)};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')')
      ++pos_;
    if (start == pos_) throw Error("pddl: empty token");
    return Sexp{text_.substr(start, pos_ - start)};
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

Predicate atom_to_predicate(const Sexp& sexp) {
  if (sexp.is_atom()) throw Error("pddl: expected an atom list");
  const auto& items = sexp.list();
  if (items.empty() || !items[0].is_atom()) throw Error("pddl: malformed atom");
  const std::string& head = items[0].atom();
  auto rel = relation_from_name(head);
  if (rel) {
    if (items.size() != 3 || !items[1].is_atom() || !items[2].is_atom())
      throw Error("pddl: relation atom '" + head + "' needs two arguments");
    return Predicate::relation(*rel, items[1].atom(), items[2].atom());
  }
  if (items.size() != 2 || !items[1].is_atom())
    throw Error("pddl: attribute atom '" + head + "' needs one argument");
  return Predicate::attribute(head, items[1].atom());
}

SymbolType type_from_name(const std::string& name) {
  if (name == "object") return SymbolType::object;
  if (name == "container") return SymbolType::container;
  if (name == "ingredient") return SymbolType::ingredient;
  if (name == "surface") return SymbolType::surface;
  if (name == "tool") return SymbolType::tool;
  if (name == "robot") return SymbolType::robot;
  throw Error("pddl: unknown type '" + name + "'");
}

std::vector<TypedSymbol> parse_typed_list(const std::vector<Sexp>& items,
                                          std::size_t begin) {
  std::vector<TypedSymbol> out;
  std::vector<std::string> pending;
  for (std::size_t i = begin; i < items.size(); ++i) {
    if (!items[i].is_atom()) throw Error("pddl: malformed typed list");
    const std::string& token = items[i].atom();
    if (token == "-") {
      if (i + 1 >= items.size() || !items[i + 1].is_atom())
        throw Error("pddl: dangling '-' in typed list");
      SymbolType type = type_from_name(items[i + 1].atom());
      for (auto& name : pending) out.push_back({std::move(name), type});
      pending.clear();
      ++i;
    } else {
      pending.push_back(token);
    }
  }
  for (auto& name : pending) out.push_back({std::move(name), SymbolType::object});
  return out;
}

void parse_condition(const Sexp& sexp, PredicateSet& positive, PredicateSet* negative) {
  if (sexp.is_atom()) throw Error("pddl: malformed condition");
  const auto& items = sexp.list();
  if (items.empty()) return;  // (and) with no conjuncts parses as an empty list
  if (items[0].is_atom() && items[0].atom() == "and") {
    for (std::size_t i = 1; i < items.size(); ++i)
      parse_condition(items[i], positive, negative);
    return;
  }
  if (items[0].is_atom() && items[0].atom() == "not") {
    if (!negative) throw Error("pddl: negation not allowed here");
    if (items.size() != 2) throw Error("pddl: malformed (not ...)");
    negative->insert(atom_to_predicate(items[1]));
    return;
  }
  positive.insert(atom_to_predicate(sexp));
}

const Sexp* find_section(const std::vector<Sexp>& items, const std::string& keyword) {
  for (const auto& item : items) {
    if (item.is_atom()) continue;
    const auto& list = item.list();
    if (!list.empty() && list[0].is_atom() && list[0].atom() == keyword) return &item;
  }
  return nullptr;
}

std::pair<std::string, const std::vector<Sexp>&> open_define(const Sexp& root,
                                                             const std::string& kind) {
  if (root.is_atom()) throw Error("pddl: expected (define ...)");
  const auto& items = root.list();
  if (items.size() < 2 || !items[0].is_atom() || items[0].atom() != "define")
    throw Error("pddl: expected (define ...)");
  const auto& header = items[1];
  if (header.is_atom() || header.list().size() != 2 || !header.list()[0].is_atom() ||
      header.list()[0].atom() != kind || !header.list()[1].is_atom())
    throw Error("pddl: expected (" + kind + " <name>)");
  return {header.list()[1].atom(), items};
}

}  // namespace

PddlDomain parse_domain(const std::string& text) {
  Sexp root = SexpParser(text).parse();
  auto [name, items] = open_define(root, "domain");
  PddlDomain domain;
  domain.name = name;

  if (const Sexp* reqs = find_section(items, ":requirements")) {
    for (std::size_t i = 1; i < reqs->list().size(); ++i)
      domain.requirements.push_back(reqs->list()[i].atom());
  }
  if (const Sexp* constants = find_section(items, ":constants"))
    domain.constants = parse_typed_list(constants->list(), 1);

  for (const auto& item : items) {
    if (item.is_atom()) continue;
    const auto& list = item.list();
    if (list.empty() || !list[0].is_atom() || list[0].atom() != ":action") continue;
    if (list.size() < 2 || !list[1].is_atom()) throw Error("pddl: action without name");
    PlanningOperator op;
    op.name = list[1].atom();
    for (std::size_t i = 2; i + 1 < list.size(); i += 2) {
      if (!list[i].is_atom()) throw Error("pddl: malformed action section");
      const std::string& keyword = list[i].atom();
      const Sexp& body = list[i + 1];
      if (keyword == ":parameters") {
        if (body.is_atom()) throw Error("pddl: malformed :parameters");
        op.parameters = parse_typed_list(body.list(), 0);
      } else if (keyword == ":precondition") {
        parse_condition(body, op.preconditions, nullptr);
      } else if (keyword == ":effect") {
        parse_condition(body, op.add_effects, &op.delete_effects);
      } else {
        throw Error("pddl: unknown action section '" + keyword + "'");
      }
    }
    domain.actions.push_back(std::move(op));
  }
  return domain;
}

PddlProblem parse_problem(const std::string& text) {
  Sexp root = SexpParser(text).parse();
  auto [name, items] = open_define(root, "problem");
  PddlProblem problem;
  problem.name = name;

  if (const Sexp* dom = find_section(items, ":domain")) {
    if (dom->list().size() != 2 || !dom->list()[1].is_atom())
      throw Error("pddl: malformed :domain");
    problem.domain = dom->list()[1].atom();
  }
  if (const Sexp* objects = find_section(items, ":objects"))
    problem.objects = parse_typed_list(objects->list(), 1);
  if (const Sexp* init = find_section(items, ":init")) {
    for (std::size_t i = 1; i < init->list().size(); ++i)
      problem.init.insert(atom_to_predicate(init->list()[i]));
  }
  if (const Sexp* goal = find_section(items, ":goal")) {
    if (goal->list().size() != 2) throw Error("pddl: malformed :goal");
    parse_condition(goal->list()[1], problem.goal, nullptr);
  }
  return problem;
}

}  // namespace foon
