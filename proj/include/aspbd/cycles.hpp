// Cycle analysis over signed dependency graphs: exhaustive directed cycle
// search, block decompositions, even-cycle detection, parity-constrained
// paths, and bad-even-cycle detection for the undirected view.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aspbd/depgraph.hpp"

namespace aspbd {

// A cycle in cyclic vertex order; the first vertex is not repeated at the
// end. Directed witnesses carry one sign per step i -> i+1 (mod length) and
// count negative steps. Undirected witnesses list U_P vertices (atoms and
// v(...) vertices) and count the v(...) vertices. Witnesses for raw
// unlabeled graphs count negative-provenance edges, which is zero for
// graphs built without provenance.
struct CycleWitness {
  bool directed = false;
  std::vector<std::string> vertices;
  std::vector<EdgeSign> step_signs;  // directed witnesses only
  int negative_count = 0;

  bool bad() const { return negative_count > 0; }
  bool even() const { return negative_count % 2 == 0; }
  std::size_t length() const { return vertices.size(); }
};

// Budget for the exhaustive directed search; "steps" counts edge visits.
struct CycleLimits {
  std::size_t max_cycles = std::size_t{1} << 18;
  std::size_t max_steps = 4'000'000;
};

struct CycleEnumeration {
  std::vector<CycleWitness> cycles;
  bool truncated = false;  // limits hit; the list may be incomplete
};

// All simple directed cycles (loops count, antiparallel pairs count, and
// parallel edges of opposite sign give distinct cycles), each exactly once,
// anchored at its least vertex, in deterministic order.
CycleEnumeration enumerate_directed_cycles(const SignedDepGraph& g,
                                           const CycleLimits& limits = {});

// First simple directed cycle satisfying the requested predicates
// (require_bad: at least one negative step; require_even: an even number of
// negative steps). A missing witness is definitive only when !truncated.
struct DirectedCycleQuery {
  std::optional<CycleWitness> witness;
  bool truncated = false;
};
DirectedCycleQuery has_directed_cycle(const SignedDepGraph& g,
                                      bool require_bad, bool require_even,
                                      const CycleLimits& limits = {});

// Biconnected blocks of an undirected multigraph; loops form their own
// single-edge blocks. Vertices shared by two or more non-loop blocks are
// the cut vertices.
struct BlockDecomposition {
  struct Block {
    std::vector<std::string> vertices;
    std::vector<std::size_t> edge_indices;  // into UnlabeledGraph::edges
    bool is_loop = false;
  };
  std::vector<Block> blocks;
  std::vector<std::string> cut_vertices;
};
BlockDecomposition blocks(const UnlabeledGraph& g);

// Any cycle at all (used for forest checks); undirected input only.
std::optional<CycleWitness> has_any_cycle_undirected(const UnlabeledGraph& g);

// Same queries phrased over the expanded undirected view, with witnesses in
// U_P terms (atoms and v(...) vertices) and v(...) vertices counted.
std::optional<CycleWitness> has_any_cycle_undirected(
    const ExpandedUndirectedGraph& u);
std::optional<CycleWitness> has_even_cycle_undirected(
    const ExpandedUndirectedGraph& u);

// Cycle through at least one negative vertex of the expanded view: exists
// iff some v(...) vertex lies in a block with two or more edges.
std::optional<CycleWitness> has_bad_cycle_undirected(
    const ExpandedUndirectedGraph& u);

// Even-length cycle detection via blocks: a graph has no even cycle iff
// every block is a single edge, a loop, or an odd chordless cycle; any
// other block yields an explicit even cycle (parallel edges make a
// two-edge even cycle).
std::optional<CycleWitness> has_even_cycle_undirected(const UnlabeledGraph& g);

// Parity-constrained simple paths between distinct vertices, s != t.
// Feasibility is decided per block along the block-cut tree path: bipartite
// blocks force the parity of every traversal, non-bipartite blocks admit
// both parities.
bool odd_path_exists(const UnlabeledGraph& g, const std::string& s,
                     const std::string& t);
std::optional<std::vector<std::string>> find_parity_path(
    const UnlabeledGraph& g, const std::string& s, const std::string& t,
    bool odd);

// Bad even cycle of the undirected view: for each negative signed edge
// e = {s, t}, look for an odd path from s to t in the unlabeled graph of
// the view without e; the witness is returned in U_P terms.
std::optional<CycleWitness> has_bad_even_cycle_undirected(
    const ExpandedUndirectedGraph& u);

// Witness checking used by tests and the verification paths.
bool validate_witness(const SignedDepGraph& g, const CycleWitness& w);
bool validate_witness(const ExpandedUndirectedGraph& u, const CycleWitness& w);
bool validate_witness(const UnlabeledGraph& g, const CycleWitness& w);

}  // namespace aspbd
