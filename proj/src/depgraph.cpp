#include "aspbd/depgraph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace aspbd {

SignedDepGraph SignedDepGraph::from_edges(std::vector<std::string> vertices,
                                          std::vector<Edge> edges) {
  std::set<std::string> vs(vertices.begin(), vertices.end());
  for (const Edge& e : edges) {
    vs.insert(e.src);
    vs.insert(e.dst);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return SignedDepGraph{{vs.begin(), vs.end()}, std::move(edges)};
}

SignedDepGraph build_directed(const Program& p) {
  std::vector<SignedDepGraph::Edge> edges;
  for (const Rule& r : p.rules) {
    for (const Atom& x : r.head) {
      for (const Atom& y : r.pos_body)
        edges.push_back({x, y, EdgeSign::positive});
      for (const Atom& y : r.neg_body)
        edges.push_back({x, y, EdgeSign::negative});
    }
  }
  const AtomSet atoms = p.atoms();
  return SignedDepGraph::from_edges({atoms.begin(), atoms.end()},
                                    std::move(edges));
}

std::string negative_vertex_name(const std::string& src,
                                 const std::string& dst) {
  return "v(" + src + "," + dst + ")";
}

std::string subdivision_vertex_name(const std::string& u,
                                    const std::string& v) {
  return "w(" + u + "," + v + ")";
}

namespace {

ExpandedUndirectedGraph finish_expansion(std::vector<std::string> atoms,
                                         std::vector<UndirectedSignedEdge> se) {
  std::sort(se.begin(), se.end());
  se.erase(std::unique(se.begin(), se.end()), se.end());

  ExpandedUndirectedGraph g;
  g.atoms = std::move(atoms);
  g.signed_edges = std::move(se);

  std::set<std::string> vertex_set(g.atoms.begin(), g.atoms.end());
  for (const UndirectedSignedEdge& e : g.signed_edges) {
    if (e.sign == EdgeSign::positive) {
      g.edges.emplace_back(e.u, e.v);
    } else {
      const auto& [src, dst] = *e.origin;
      const std::string nv = negative_vertex_name(src, dst);
      vertex_set.insert(nv);
      g.negative_vertex_origin[nv] = {src, dst};
      g.edges.emplace_back(e.u, nv);
      g.edges.emplace_back(nv, e.v);
    }
  }
  g.vertices.assign(vertex_set.begin(), vertex_set.end());
  return g;
}

}  // namespace

ExpandedUndirectedGraph undirected_view(const SignedDepGraph& d) {
  std::vector<UndirectedSignedEdge> se;
  for (const SignedDepGraph::Edge& e : d.edges) {
    const std::string u = std::min(e.src, e.dst);
    const std::string v = std::max(e.src, e.dst);
    if (e.sign == EdgeSign::positive) {
      se.push_back({u, v, EdgeSign::positive, std::nullopt});
    } else {
      se.push_back({u, v, EdgeSign::negative, std::pair{e.src, e.dst}});
    }
  }
  return finish_expansion(d.vertices, std::move(se));
}

ExpandedUndirectedGraph build_undirected(const Program& p) {
  return undirected_view(build_directed(p));
}

ExpandedUndirectedGraph expand_signed(std::vector<std::string> vertices,
                                      std::vector<UndirectedSignedEdge> edges) {
  std::set<std::string> vs(vertices.begin(), vertices.end());
  for (UndirectedSignedEdge& e : edges) {
    vs.insert(e.u);
    vs.insert(e.v);
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      if (e.origin) std::swap(e.origin->first, e.origin->second);
    }
    if (e.sign == EdgeSign::negative && !e.origin) e.origin = {e.u, e.v};
    if (e.sign == EdgeSign::positive) e.origin.reset();
  }
  return finish_expansion({vs.begin(), vs.end()}, std::move(edges));
}

int UnlabeledGraph::vertex_index(const std::string& name) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), name);
  if (it == vertices.end() || *it != name) return -1;
  return static_cast<int>(it - vertices.begin());
}

int UnlabeledGraph::edge_multiplicity(int a, int b) const {
  int count = 0;
  for (const auto& [u, v] : edges) {
    if ((u == a && v == b) || (u == b && v == a)) ++count;
  }
  return count;
}

UnlabeledGraph UnlabeledGraph::undirected_from_named_edges(
    std::vector<std::string> vertices,
    std::vector<std::pair<std::string, std::string>> edges) {
  std::set<std::string> vs(vertices.begin(), vertices.end());
  for (const auto& [u, v] : edges) {
    vs.insert(u);
    vs.insert(v);
  }
  UnlabeledGraph g;
  g.directed = false;
  g.vertices.assign(vs.begin(), vs.end());
  for (const auto& [u, v] : edges) {
    g.edges.emplace_back(g.vertex_index(u), g.vertex_index(v));
    g.provenance.push_back(-1);
  }
  return g;
}

UnlabeledGraph unlabel(const SignedDepGraph& d) {
  std::set<std::string> vs(d.vertices.begin(), d.vertices.end());
  for (const SignedDepGraph::Edge& e : d.edges)
    if (e.sign == EdgeSign::positive)
      vs.insert(subdivision_vertex_name(e.src, e.dst));

  UnlabeledGraph g;
  g.directed = true;
  g.vertices.assign(vs.begin(), vs.end());
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const SignedDepGraph::Edge& e = d.edges[i];
    const int src = g.vertex_index(e.src);
    const int dst = g.vertex_index(e.dst);
    if (e.sign == EdgeSign::positive) {
      const int w = g.vertex_index(subdivision_vertex_name(e.src, e.dst));
      g.edges.emplace_back(src, w);
      g.provenance.push_back(static_cast<int>(i));
      g.edges.emplace_back(w, dst);
      g.provenance.push_back(static_cast<int>(i));
    } else {
      g.edges.emplace_back(src, dst);
      g.provenance.push_back(static_cast<int>(i));
    }
  }
  return g;
}

UnlabeledGraph unlabel(const ExpandedUndirectedGraph& u) {
  std::set<std::string> vs(u.atoms.begin(), u.atoms.end());
  for (const UndirectedSignedEdge& e : u.signed_edges)
    if (e.sign == EdgeSign::positive)
      vs.insert(subdivision_vertex_name(e.u, e.v));

  UnlabeledGraph g;
  g.directed = false;
  g.vertices.assign(vs.begin(), vs.end());
  for (std::size_t i = 0; i < u.signed_edges.size(); ++i) {
    const UndirectedSignedEdge& e = u.signed_edges[i];
    const int a = g.vertex_index(e.u);
    const int b = g.vertex_index(e.v);
    if (e.sign == EdgeSign::positive) {
      const int w = g.vertex_index(subdivision_vertex_name(e.u, e.v));
      g.edges.emplace_back(a, w);
      g.provenance.push_back(static_cast<int>(i));
      g.edges.emplace_back(w, b);
      g.provenance.push_back(static_cast<int>(i));
    } else {
      g.edges.emplace_back(a, b);
      g.provenance.push_back(static_cast<int>(i));
    }
  }
  return g;
}

namespace {

// Identifier-safe names stay unquoted so plain atom edges read "a -> b".
std::string dot_name(const std::string& name) {
  bool plain = !name.empty();
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      plain = false;
  }
  if (plain && std::isdigit(static_cast<unsigned char>(name[0])))
    plain = false;
  if (plain) return name;
  std::string quoted = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') quoted.push_back('\\');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

}  // namespace

std::string export_dot(const SignedDepGraph& g) {
  std::ostringstream out;
  out << "digraph dependencies {\n";
  for (const std::string& v : g.vertices) out << "  " << dot_name(v) << ";\n";
  for (const SignedDepGraph::Edge& e : g.edges) {
    out << "  " << dot_name(e.src) << " -> " << dot_name(e.dst);
    if (e.sign == EdgeSign::negative) out << " [sign=neg, style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const ExpandedUndirectedGraph& g) {
  std::ostringstream out;
  out << "graph dependencies {\n";
  for (const std::string& v : g.vertices) {
    out << "  " << dot_name(v);
    if (g.negative_vertex_origin.count(v)) out << " [sign=neg, shape=box]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges)
    out << "  " << dot_name(u) << " -- " << dot_name(v) << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const UnlabeledGraph& g) {
  std::ostringstream out;
  out << (g.directed ? "digraph" : "graph") << " unlabeled {\n";
  for (const std::string& v : g.vertices) out << "  " << dot_name(v) << ";\n";
  for (const auto& [u, v] : g.edges) {
    out << "  " << dot_name(g.vertices[u]) << (g.directed ? " -> " : " -- ")
        << dot_name(g.vertices[v]) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace aspbd
