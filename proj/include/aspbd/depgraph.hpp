// Signed dependency graphs of a program, their undirected view with
// negative vertices, and the unlabeled parity-preserving transformation.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aspbd/program.hpp"

namespace aspbd {

enum class EdgeSign { positive, negative };

// Directed dependency graph D_P: one vertex per atom; for every rule r,
// every x in H(r) and y in B(r) yield an edge (x, y), negative iff
// y in B-(r). At most one positive and one negative edge per ordered
// pair; self-loops allowed.
struct SignedDepGraph {
  struct Edge {
    std::string src;
    std::string dst;
    EdgeSign sign = EdgeSign::positive;
    auto operator<=>(const Edge&) const = default;
  };

  std::vector<std::string> vertices;  // sorted, unique
  std::vector<Edge> edges;            // sorted, unique

  static SignedDepGraph from_edges(std::vector<std::string> vertices,
                                   std::vector<Edge> edges);
};

SignedDepGraph build_directed(const Program& p);

// Fresh-vertex naming; parentheses keep these out of the atom namespace.
std::string negative_vertex_name(const std::string& src, const std::string& dst);
std::string subdivision_vertex_name(const std::string& u, const std::string& v);

// One undirected signed edge of the view underlying U_P. Positive directed
// edges collapse per unordered pair (antiparallel positives give one edge);
// every negative directed edge keeps an edge of its own, identified by its
// originating directed edge, so parallel negative edges can occur.
struct UndirectedSignedEdge {
  std::string u;  // u <= v
  std::string v;
  EdgeSign sign = EdgeSign::positive;
  // originating directed edge (src, dst); set exactly for negative edges
  std::optional<std::pair<std::string, std::string>> origin;

  auto operator<=>(const UndirectedSignedEdge&) const = default;
};

// Undirected dependency graph U_P together with the signed view it expands.
// Expansion: each negative view edge e becomes a fresh vertex v(src,dst)
// joined to both endpoints (a negative loop becomes two parallel edges);
// positive view edges are kept as plain edges.
struct ExpandedUndirectedGraph {
  std::vector<std::string> atoms;                   // sorted
  std::vector<UndirectedSignedEdge> signed_edges;   // sorted

  std::vector<std::string> vertices;                // atoms, then v(...) sorted
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::pair<std::string, std::string>>
      negative_vertex_origin;                       // v(...) -> directed edge
};

ExpandedUndirectedGraph build_undirected(const Program& p);
ExpandedUndirectedGraph undirected_view(const SignedDepGraph& d);
// Direct constructor for tests and generated graphs; normalizes edge
// endpoints (u <= v) and fills origins of negative edges lacking one.
ExpandedUndirectedGraph expand_signed(
    std::vector<std::string> vertices,
    std::vector<UndirectedSignedEdge> edges);

// Unlabeled multigraph with provenance into a signed edge list. Built by
// subdividing every positive signed edge through a fresh w(...) vertex and
// keeping negative edges as plain edges, so that the number of negative
// edges of a signed cycle and the length of the corresponding unlabeled
// cycle agree modulo 2.
struct UnlabeledGraph {
  bool directed = false;
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // indices into vertices
  std::vector<int> provenance;  // per edge: index into the source signed
                                // edge list, or -1 when constructed raw

  int vertex_index(const std::string& name) const;  // -1 when absent
  // multiplicity of the undirected pair {a, b} (a == b counts loops)
  int edge_multiplicity(int a, int b) const;

  static UnlabeledGraph undirected_from_named_edges(
      std::vector<std::string> vertices,
      std::vector<std::pair<std::string, std::string>> edges);
};

UnlabeledGraph unlabel(const SignedDepGraph& d);
UnlabeledGraph unlabel(const ExpandedUndirectedGraph& u);

std::string export_dot(const SignedDepGraph& g);
std::string export_dot(const ExpandedUndirectedGraph& g);
std::string export_dot(const UnlabeledGraph& g);

}  // namespace aspbd
