#include "aspbd/program.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace aspbd {

bool is_valid_atom_name(const std::string& name) {
  if (name.empty() || name == "not") return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

AtomSet Rule::body() const {
  AtomSet b = pos_body;
  b.insert(neg_body.begin(), neg_body.end());
  return b;
}

AtomSet Rule::atoms() const {
  AtomSet a = head;
  a.insert(pos_body.begin(), pos_body.end());
  a.insert(neg_body.begin(), neg_body.end());
  return a;
}

Program Program::from_rules(std::vector<Rule> rules) {
  std::sort(rules.begin(), rules.end());
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
  return Program{std::move(rules)};
}

AtomSet Program::atoms() const {
  AtomSet a;
  for (const Rule& r : rules) {
    const AtomSet ra = r.atoms();
    a.insert(ra.begin(), ra.end());
  }
  return a;
}

bool Program::is_normal() const {
  return std::all_of(rules.begin(), rules.end(),
                     [](const Rule& r) { return r.is_normal(); });
}

bool Program::is_horn() const {
  return std::all_of(rules.begin(), rules.end(),
                     [](const Rule& r) { return r.is_horn(); });
}

bool Program::uses_negation() const {
  return std::any_of(rules.begin(), rules.end(),
                     [](const Rule& r) { return !r.neg_body.empty(); });
}

bool Program::has_constraints() const {
  return std::any_of(rules.begin(), rules.end(),
                     [](const Rule& r) { return r.is_constraint(); });
}

std::vector<Rule> Program::constraints() const {
  std::vector<Rule> out;
  for (const Rule& r : rules)
    if (r.is_constraint()) out.push_back(r);
  return out;
}

std::vector<Rule> Program::non_constraints() const {
  std::vector<Rule> out;
  for (const Rule& r : rules)
    if (!r.is_constraint()) out.push_back(r);
  return out;
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + msg),
      line(line),
      column(column) {}

namespace {

enum class TokKind { ident, kw_not, pipe, arrow, comma, dot, end };

struct Token {
  TokKind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    const int line = line_, col = col_;
    if (pos_ >= text_.size()) return {TokKind::end, "", line, col};
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        word.push_back(text_[pos_]);
        advance();
      }
      if (word == "not") return {TokKind::kw_not, word, line, col};
      return {TokKind::ident, word, line, col};
    }
    if (c == '|') {
      advance();
      return {TokKind::pipe, "|", line, col};
    }
    if (c == ',') {
      advance();
      return {TokKind::comma, ",", line, col};
    }
    if (c == '.') {
      advance();
      return {TokKind::dot, ".", line, col};
    }
    if (c == ':') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        advance();
        advance();
        return {TokKind::arrow, ":-", line, col};
      }
      throw ParseError("expected ':-'", line, col);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { shift(); }

  Program parse() {
    std::vector<Rule> rules;
    while (tok_.kind != TokKind::end) rules.push_back(parse_rule());
    return Program::from_rules(std::move(rules));
  }

 private:
  void shift() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, tok_.line, tok_.column);
  }

  Atom parse_atom() {
    if (tok_.kind != TokKind::ident) fail("expected atom");
    if (!is_valid_atom_name(tok_.text))
      fail("invalid atom name '" + tok_.text + "'");
    Atom a = tok_.text;
    shift();
    return a;
  }

  Rule parse_rule() {
    Rule r;
    if (tok_.kind == TokKind::ident) {
      r.head.insert(parse_atom());
      while (tok_.kind == TokKind::pipe) {
        shift();
        r.head.insert(parse_atom());
      }
    }
    if (tok_.kind == TokKind::arrow) {
      shift();
      if (tok_.kind != TokKind::dot) parse_body(r);
    } else if (r.head.empty()) {
      fail("expected rule");
    }
    if (tok_.kind != TokKind::dot) fail("expected '.'");
    shift();
    return r;
  }

  void parse_body(Rule& r) {
    parse_literal(r);
    while (tok_.kind == TokKind::comma) {
      shift();
      parse_literal(r);
    }
  }

  void parse_literal(Rule& r) {
    if (tok_.kind == TokKind::kw_not) {
      shift();
      r.neg_body.insert(parse_atom());
    } else {
      r.pos_body.insert(parse_atom());
    }
  }

  Lexer lexer_;
  Token tok_{TokKind::end, "", 0, 0};
};

}  // namespace

Program parse_program(const std::string& text) { return Parser(text).parse(); }

std::string print_rule(const Rule& r) {
  std::ostringstream out;
  bool first = true;
  for (const Atom& a : r.head) {
    if (!first) out << " | ";
    out << a;
    first = false;
  }
  if (!r.pos_body.empty() || !r.neg_body.empty()) {
    if (!r.head.empty()) out << " ";
    out << ":- ";
    first = true;
    for (const Atom& a : r.pos_body) {
      if (!first) out << ", ";
      out << a;
      first = false;
    }
    for (const Atom& a : r.neg_body) {
      if (!first) out << ", ";
      out << "not " << a;
      first = false;
    }
  } else if (r.head.empty()) {
    out << ":-";
  }
  out << ".";
  return out.str();
}

std::string print_program(const Program& p) {
  std::ostringstream out;
  for (const Rule& r : p.rules) out << print_rule(r) << "\n";
  return out.str();
}

bool satisfies(const Interpretation& m, const Rule& r) {
  for (const Atom& a : r.head)
    if (m.count(a)) return true;
  for (const Atom& a : r.neg_body)
    if (m.count(a)) return true;
  for (const Atom& a : r.pos_body)
    if (!m.count(a)) return true;
  return false;
}

bool is_model(const Interpretation& m, const Program& p) {
  return std::all_of(p.rules.begin(), p.rules.end(),
                     [&](const Rule& r) { return satisfies(m, r); });
}

Program gl_reduct(const Program& p, const Interpretation& m) {
  std::vector<Rule> rules;
  for (const Rule& r : p.rules) {
    bool blocked = false;
    for (const Atom& a : r.neg_body) {
      if (m.count(a)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) rules.push_back(Rule{r.head, r.pos_body, {}});
  }
  return Program::from_rules(std::move(rules));
}

std::optional<Interpretation> least_model(const Program& p) {
  for (const Rule& r : p.rules) {
    if (!r.neg_body.empty())
      throw std::invalid_argument("least_model: program uses negation");
    if (r.head.size() > 1)
      throw std::invalid_argument("least_model: program is disjunctive");
  }
  Interpretation t;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : p.rules) {
      if (r.head.empty()) continue;
      const Atom& h = *r.head.begin();
      if (t.count(h)) continue;
      if (std::all_of(r.pos_body.begin(), r.pos_body.end(),
                      [&](const Atom& a) { return t.count(a) > 0; })) {
        t.insert(h);
        changed = true;
      }
    }
  }
  for (const Rule& r : p.rules) {
    if (!r.is_constraint()) continue;
    if (std::all_of(r.pos_body.begin(), r.pos_body.end(),
                    [&](const Atom& a) { return t.count(a) > 0; }))
      return std::nullopt;
  }
  return t;
}

namespace {

// Minimality via the definition: no proper subset of m models p.
bool no_proper_submodel(const Program& p, const Interpretation& m) {
  const std::vector<Atom> atoms(m.begin(), m.end());
  const std::size_t n = atoms.size();
  if (n >= 8 * sizeof(std::uint64_t))
    throw std::invalid_argument("is_answer_set: interpretation too large");
  const std::uint64_t full = (n == 0) ? 0 : ((std::uint64_t{1} << n) - 1);
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    Interpretation sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) sub.insert(atoms[i]);
    if (is_model(sub, p)) return false;
  }
  return true;
}

}  // namespace

bool is_answer_set(const Program& p, const Interpretation& m) {
  const Program reduct = gl_reduct(p, m);
  if (p.is_normal()) return least_model(reduct) == std::optional(m);
  if (!is_model(m, reduct)) return false;
  return no_proper_submodel(reduct, m);
}

std::set<Interpretation> answer_sets_bruteforce(const Program& p,
                                                std::size_t max_atoms) {
  const AtomSet atom_set = p.atoms();
  if (atom_set.size() > max_atoms)
    throw std::invalid_argument("answer_sets_bruteforce: atom bound exceeded");
  const std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
  const std::size_t n = atoms.size();
  std::set<Interpretation> result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Interpretation m;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) m.insert(atoms[i]);
    if (is_answer_set(p, m)) result.insert(std::move(m));
  }
  return result;
}

AtomSet Assignment::domain() const {
  AtomSet d;
  for (const auto& [a, v] : values) d.insert(a);
  return d;
}

AtomSet Assignment::true_atoms() const {
  AtomSet t;
  for (const auto& [a, v] : values)
    if (v) t.insert(a);
  return t;
}

AtomSet Assignment::false_atoms() const {
  AtomSet f;
  for (const auto& [a, v] : values)
    if (!v) f.insert(a);
  return f;
}

bool Assignment::at(const Atom& a) const { return values.at(a); }

void for_each_assignment(const AtomSet& domain,
                         const std::function<bool(const Assignment&)>& visit) {
  const std::vector<Atom> atoms(domain.begin(), domain.end());
  const std::size_t n = atoms.size();
  if (n >= 8 * sizeof(std::uint64_t))
    throw std::invalid_argument("for_each_assignment: domain too large");
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    Assignment tau;
    for (std::size_t j = 0; j < n; ++j) {
      const bool value = (i >> (n - 1 - j)) & 1;  // first atom = high bit
      tau.values[atoms[j]] = value;
    }
    if (!visit(tau)) return;
  }
}

std::vector<Assignment> all_assignments(const AtomSet& domain) {
  std::vector<Assignment> out;
  for_each_assignment(domain, [&](const Assignment& tau) {
    out.push_back(tau);
    return true;
  });
  return out;
}

}  // namespace aspbd
