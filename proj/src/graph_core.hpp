// Internal index-based graph algorithms shared by the cycle and class
// machinery: biconnected blocks of undirected multigraphs, strongly
// connected components, BFS paths, and two vertex-disjoint paths.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace aspbd::core {

// Undirected multigraph on vertices 0..n-1; loops and parallel edges allowed.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

struct Blocks {
  // Edge ids per block; every non-loop edge lies in exactly one block and
  // every loop forms a block of its own.
  std::vector<std::vector<int>> edge_ids;
  std::vector<std::vector<int>> vertex_ids;
  std::vector<bool> is_cut;  // per vertex
};

Blocks biconnected_blocks(const Multigraph& g);

// Strongly connected components of a directed graph; returns a component id
// per vertex, ids in reverse topological order of the condensation.
std::vector<int> scc_ids(int n, const std::vector<std::pair<int, int>>& edges);

// Shortest path (by edge count) from s to t restricted to allowed vertices;
// returns vertex/edge id sequence. Loops are ignored.
struct Walk {
  std::vector<int> vertices;
  std::vector<int> edge_ids;
};
std::optional<Walk> bfs_path(const Multigraph& g, int s, int t,
                             const std::vector<bool>& allowed);

// Two vertex-disjoint paths from {u, v} to the target set, endpoints
// distinct, interior vertices outside the target set, u- and v-path
// returned in that order. Vertices not marked allowed are unusable.
struct DisjointPaths {
  Walk from_u;
  Walk from_v;
};
std::optional<DisjointPaths> two_disjoint_paths_to_set(
    const Multigraph& g, int u, int v, const std::vector<bool>& target,
    const std::vector<bool>& allowed);

}  // namespace aspbd::core
