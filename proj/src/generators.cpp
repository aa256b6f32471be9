#include "aspbd/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

namespace aspbd {

std::set<std::string> HittingSetInstance::ground() const {
  std::set<std::string> all;
  for (const auto& s : sets) all.insert(s.begin(), s.end());
  return all;
}

std::string element_atom(const std::string& element) {
  return "e_" + element;
}

namespace {

std::string gadget_atom(char kind, std::size_t i, std::size_t j) {
  return std::string(1, kind) + "_" + std::to_string(i) + "_" +
         std::to_string(j);
}

}  // namespace

Program gen_hitting_set_program(const HittingSetInstance& inst,
                                GadgetVariant variant) {
  if (inst.k < 0)
    throw std::invalid_argument("gen_hitting_set_program: negative budget");
  AtomSet ground_atoms;
  for (const std::string& e : inst.ground())
    ground_atoms.insert(element_atom(e));

  std::vector<Rule> rules;
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    if (inst.sets[i].empty())
      throw std::invalid_argument("gen_hitting_set_program: empty member set");
    AtomSet member_atoms;
    for (const std::string& e : inst.sets[i])
      member_atoms.insert(element_atom(e));
    for (std::size_t j = 1; j <= static_cast<std::size_t>(inst.k) + 1; ++j) {
      const Atom a = gadget_atom('a', i + 1, j);
      const Atom b = gadget_atom('b', i + 1, j);
      Rule r;  // a_i_j <- ... not members ..., not b_i_j
      r.head = {a};
      r.neg_body = member_atoms;
      r.neg_body.insert(b);
      Rule s;  // b_i_j <- ..., not a_i_j
      s.head = {b};
      s.neg_body = {a};
      if (variant == GadgetVariant::directed) {
        s.pos_body = ground_atoms;
      } else {
        r.pos_body = member_atoms;
      }
      rules.push_back(std::move(r));
      rules.push_back(std::move(s));
    }
  }
  return Program::from_rules(std::move(rules));
}

std::optional<std::set<std::string>> brute_force_hitting_set(
    const HittingSetInstance& inst) {
  const std::set<std::string> ground_set = inst.ground();
  if (ground_set.size() > 16)
    throw std::invalid_argument("brute_force_hitting_set: ground set too big");
  const std::vector<std::string> elements(ground_set.begin(),
                                          ground_set.end());
  const std::uint32_t n = static_cast<std::uint32_t>(elements.size());

  std::vector<std::uint32_t> set_masks;
  for (const auto& s : inst.sets) {
    std::uint32_t mask = 0;
    for (std::uint32_t b = 0; b < n; ++b)
      if (s.count(elements[b])) mask |= std::uint32_t{1} << b;
    set_masks.push_back(mask);
  }

  std::optional<std::uint32_t> best;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (best && std::popcount(mask) >= std::popcount(*best)) continue;
    const bool hits_all =
        std::all_of(set_masks.begin(), set_masks.end(),
                    [&](std::uint32_t s) { return (s & mask) != 0; });
    if (hits_all) best = mask;
  }
  if (!best || std::popcount(*best) > inst.k) return std::nullopt;
  std::set<std::string> out;
  for (std::uint32_t b = 0; b < n; ++b)
    if (*best & (std::uint32_t{1} << b)) out.insert(elements[b]);
  return out;
}

Digraph Digraph::parse(const std::string& text) {
  Digraph g;
  std::set<std::string> vertex_set;
  std::set<std::pair<std::string, std::string>> edge_set;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  const auto check_name = [&](const std::string& name) {
    if (!is_valid_atom_name(name))
      throw ParseError("invalid vertex name: " + name, line_no, 1);
    return name;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "#") {
      std::string a, b, c, extra;
      if (g.s || !(tokens >> a >> b >> c) || (tokens >> extra))
        continue;  // comment, or a second header
      g.s = check_name(a);
      g.m = check_name(b);
      g.t = check_name(c);
      vertex_set.insert({a, b, c});
      continue;
    }
    if (first.rfind("#", 0) == 0) continue;
    std::string second, extra;
    if (!(tokens >> second)) {
      vertex_set.insert(check_name(first));
      continue;
    }
    if (tokens >> extra)
      throw ParseError("expected 'u v' edge line", line_no, 1);
    vertex_set.insert(check_name(first));
    vertex_set.insert(check_name(second));
    edge_set.insert({first, second});
  }
  g.vertices.assign(vertex_set.begin(), vertex_set.end());
  g.edges.assign(edge_set.begin(), edge_set.end());
  return g;
}

std::string Digraph::print() const {
  std::ostringstream out;
  if (s && m && t) out << "# " << *s << " " << *m << " " << *t << "\n";
  std::set<std::string> touched;
  for (const auto& [u, v] : edges) {
    out << u << " " << v << "\n";
    touched.insert(u);
    touched.insert(v);
  }
  if (s && m && t) touched.insert({*s, *m, *t});
  for (const std::string& v : vertices)
    if (!touched.count(v)) out << v << "\n";
  return out.str();
}

Program gen_path_gadget(const Digraph& g) {
  if (!g.s || !g.m || !g.t)
    throw std::invalid_argument("gen_path_gadget: s, m, t not set");
  const std::set<std::string> vertex_set(g.vertices.begin(), g.vertices.end());
  if (*g.s == *g.m || *g.s == *g.t || *g.m == *g.t)
    throw std::invalid_argument("gen_path_gadget: s, m, t not distinct");
  if (!vertex_set.count(*g.s) || !vertex_set.count(*g.m) ||
      !vertex_set.count(*g.t))
    throw std::invalid_argument("gen_path_gadget: s, m, t not vertices");

  std::vector<Rule> rules;
  for (const auto& [v, w] : g.edges) {
    Rule r;
    r.head = {v};
    if (w == *g.m)
      r.neg_body = {w};
    else
      r.pos_body = {w};
    rules.push_back(std::move(r));
  }
  Rule closing;
  closing.head = {*g.t};
  closing.neg_body = {*g.s};
  rules.push_back(std::move(closing));
  return Program::from_rules(std::move(rules));
}

Program pad_with_bad_even_cycles(const Program& p, int k) {
  if (k < 0)
    throw std::invalid_argument("pad_with_bad_even_cycles: negative count");
  const AtomSet taken = p.atoms();
  std::vector<Rule> rules = p.rules;
  std::size_t index = 1;
  for (int added = 0; added < k; ++index) {
    const Atom u = "u_" + std::to_string(index);
    const Atom w = "w_" + std::to_string(index);
    if (taken.count(u) || taken.count(w)) continue;
    Rule r1;
    r1.head = {u};
    r1.neg_body = {w};
    Rule r2;
    r2.head = {w};
    r2.neg_body = {u};
    rules.push_back(std::move(r1));
    rules.push_back(std::move(r2));
    ++added;
  }
  return Program::from_rules(std::move(rules));
}

Program random_program(int atoms, int rules, double neg_prob,
                       double disj_prob, std::uint64_t seed) {
  if (atoms < 0 || rules < 0)
    throw std::invalid_argument("random_program: negative size");
  if (atoms == 0) return Program{};

  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  // modulo draws keep the stream identical across standard libraries
  const auto pick = [&](int bound) {
    return static_cast<int>(rng() % static_cast<std::uint32_t>(bound));
  };
  const auto chance = [&](double prob) {
    return static_cast<double>(rng() % 1000000) < prob * 1000000.0;
  };
  const auto atom_name = [](int i) { return "x" + std::to_string(i + 1); };

  std::vector<Rule> out;
  for (int i = 0; i < rules; ++i) {
    Rule r;
    const bool constraint = pick(16) == 0;
    if (!constraint) {
      r.head.insert(atom_name(pick(atoms)));
      if (chance(disj_prob)) r.head.insert(atom_name(pick(atoms)));
    }
    const int body_size = pick(std::min(3, atoms) + 1);
    for (int b = 0; b < body_size; ++b) {
      const Atom a = atom_name(pick(atoms));
      if (chance(neg_prob))
        r.neg_body.insert(a);
      else
        r.pos_body.insert(a);
    }
    out.push_back(std::move(r));
  }
  return Program::from_rules(std::move(out));
}

}  // namespace aspbd
