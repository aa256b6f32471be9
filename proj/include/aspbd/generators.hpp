// Instance generators: hitting-set gadget programs, path gadgets over
// digraphs, bad-even-cycle padding, and seeded random programs, plus the
// small hitting-set oracle the gadget tests compare against.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aspbd/program.hpp"

namespace aspbd {

struct HittingSetInstance {
  std::vector<std::set<std::string>> sets;  // non-empty member sets
  int k = 0;

  std::set<std::string> ground() const;  // union of the member sets
};

// Atom standing for a ground-set element ("e_" + element).
std::string element_atom(const std::string& element);

// Two-copies-plus-one gadget per member set: for set i and copy j,
//   directed:   a_i_j <- not <elements of S_i>, not b_i_j
//               b_i_j <- <all ground elements>, not a_i_j
//   undirected: a_i_j <- <elements of S_i>, not <elements of S_i>, not b_i_j
//               b_i_j <- not a_i_j
// with j ranging over 1..k+1.
enum class GadgetVariant { directed, undirected };
Program gen_hitting_set_program(const HittingSetInstance& inst,
                                GadgetVariant variant);

// Minimum hitting set when its size is at most k, nullopt otherwise.
// Ground sets larger than 16 elements are rejected.
std::optional<std::set<std::string>> brute_force_hitting_set(
    const HittingSetInstance& inst);

// Directed graph with optional distinguished vertices s, m, t. Text form:
// one "u v" edge per line, single-token lines declare isolated vertices,
// and a "# s m t" line fixes the distinguished triple; other lines starting
// with '#' are comments.
struct Digraph {
  std::vector<std::string> vertices;  // sorted, unique
  std::vector<std::pair<std::string, std::string>> edges;  // sorted, unique
  std::optional<std::string> s, m, t;

  static Digraph parse(const std::string& text);
  std::string print() const;
};

// One rule per edge: v <- w for an edge (v, w) with w != m, v <- not m for
// an edge into m, plus the closing rule t <- not s. Requires s, m, t to be
// distinct vertices of the graph.
Program gen_path_gadget(const Digraph& g);

// Adds k fresh two-atom gadgets {u_i <- not w_i; w_i <- not u_i}, each a
// vertex-disjoint directed and undirected bad even cycle; indices that
// would collide with existing atoms are skipped.
Program pad_with_bad_even_cycles(const Program& p, int k);

// Deterministic random program over atoms x1..xn. Per rule: the head is
// empty with probability 1/16, otherwise one atom plus a second with
// probability disj_prob; the body draws uniform 0..min(3, n) literals, each
// negative with probability neg_prob. Drawing order is part of the
// contract; identical seeds give identical programs on every platform.
Program random_program(int atoms, int rules, double neg_prob,
                       double disj_prob, std::uint64_t seed);

}  // namespace aspbd
