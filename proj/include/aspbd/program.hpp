// Propositional disjunctive logic programs: rules, parsing, canonical
// printing, models, Gelfond-Lifschitz reducts and answer sets.
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace aspbd {

using Atom = std::string;
using AtomSet = std::set<Atom>;
// An interpretation is the set of atoms assigned true.
using Interpretation = AtomSet;

// Atom names match [a-z][A-Za-z0-9_]*; "not" is reserved.
bool is_valid_atom_name(const std::string& name);

// x1 | ... | xl :- y1, ..., yn, not z1, ..., not zm.
// head may be empty (integrity constraint); pos_body and neg_body may overlap,
// in which case the rule is never applicable but still legal.
struct Rule {
  AtomSet head;
  AtomSet pos_body;
  AtomSet neg_body;

  auto operator<=>(const Rule&) const = default;

  bool is_constraint() const { return head.empty(); }
  bool is_fact() const { return pos_body.empty() && neg_body.empty(); }
  // "normal" here caps the head at one atom; constraints count as normal.
  bool is_normal() const { return head.size() <= 1; }
  bool is_horn() const { return is_normal() && neg_body.empty(); }
  AtomSet body() const;
  AtomSet atoms() const;
};

// Rule order and duplicates never matter semantically; Program keeps rules
// sorted and unique so that equality is program equality.
struct Program {
  std::vector<Rule> rules;

  auto operator<=>(const Program&) const = default;

  static Program from_rules(std::vector<Rule> rules);
  AtomSet atoms() const;
  bool is_normal() const;
  bool is_horn() const;
  bool uses_negation() const;
  bool has_constraints() const;
  std::vector<Rule> constraints() const;
  std::vector<Rule> non_constraints() const;
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line, int column);
};

// Grammar: rules terminated by ".", heads joined by "|", body after ":-",
// body literals separated by ",", default negation written "not a",
// "%" starts a comment running to end of line.
Program parse_program(const std::string& text);

// Canonical form: one rule per line, atoms in lexicographic order within
// head/positive body/negative body, rules in normalized program order.
// parse_program(print_program(p)) == p for every program.
std::string print_program(const Program& p);
std::string print_rule(const Rule& r);

// M satisfies r iff (head u neg_body) intersects M or pos_body \ M is nonempty.
bool satisfies(const Interpretation& m, const Rule& r);
bool is_model(const Interpretation& m, const Program& p);

// P^M: drop rules whose negative body intersects M, strip negation elsewhere.
Program gl_reduct(const Program& p, const Interpretation& m);

// Least model of a negation-free program with at most one head atom per rule.
// Constraints are allowed: returns nullopt when the least model of the
// definite part violates one. Throws std::invalid_argument otherwise.
std::optional<Interpretation> least_model(const Program& p);

// M is an answer set iff M is a minimal model of gl_reduct(p, M).
// Normal programs use the least-model shortcut; disjunctive programs check
// all proper subsets of M.
bool is_answer_set(const Program& p, const Interpretation& m);

// All answer sets by candidate enumeration over subsets of at(p).
// Throws std::invalid_argument when |at(p)| > max_atoms.
std::set<Interpretation> answer_sets_bruteforce(const Program& p,
                                                std::size_t max_atoms = 20);

// Truth assignment over a fixed atom domain.
struct Assignment {
  std::map<Atom, bool> values;

  auto operator<=>(const Assignment&) const = default;

  AtomSet domain() const;
  AtomSet true_atoms() const;
  AtomSet false_atoms() const;
  bool at(const Atom& a) const;  // throws std::out_of_range if absent
};

// Enumerates all 2^|domain| assignments in binary counting order over the
// sorted domain, first atom as the most significant bit:
// 00...0, 00...1, ..., 11...1.
void for_each_assignment(const AtomSet& domain,
                         const std::function<bool(const Assignment&)>& visit);
std::vector<Assignment> all_assignments(const AtomSet& domain);

}  // namespace aspbd
