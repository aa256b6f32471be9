#include "aspbd/cycles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "graph_core.hpp"

namespace aspbd {

namespace {

// ---------------------------------------------------------------------------
// Directed search
// ---------------------------------------------------------------------------

struct DirectedIndex {
  std::vector<std::string> names;
  // per vertex: (dst, sign), in sorted edge order
  std::vector<std::vector<std::pair<int, EdgeSign>>> adj;
};

DirectedIndex index_directed(const SignedDepGraph& g) {
  DirectedIndex ix;
  ix.names = g.vertices;
  ix.adj.resize(ix.names.size());
  const auto vid = [&](const std::string& name) {
    return static_cast<int>(
        std::lower_bound(ix.names.begin(), ix.names.end(), name) -
        ix.names.begin());
  };
  for (const SignedDepGraph::Edge& e : g.edges)
    ix.adj[vid(e.src)].emplace_back(vid(e.dst), e.sign);
  return ix;
}

// Anchored depth-first search delivering every simple directed cycle exactly
// once (anchored at its least vertex). Returns true when the caller stopped
// the search; *truncated reports a limits hit.
bool for_each_directed_cycle(
    const SignedDepGraph& g, const CycleLimits& limits,
    const std::function<bool(const CycleWitness&)>& take, bool* truncated) {
  const DirectedIndex ix = index_directed(g);
  const int n = static_cast<int>(ix.names.size());
  std::size_t steps = 0, produced = 0;
  *truncated = false;

  struct Frame {
    int v;
    std::size_t next;
  };

  for (int anchor = 0; anchor < n; ++anchor) {
    std::vector<Frame> frames{{anchor, 0}};
    std::vector<int> path{anchor};
    std::vector<EdgeSign> signs;
    std::vector<char> on_path(n, 0);
    on_path[anchor] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < ix.adj[f.v].size()) {
        const auto [w, sign] = ix.adj[f.v][f.next++];
        if (++steps > limits.max_steps) {
          *truncated = true;
          return false;
        }
        if (w < anchor) continue;
        if (w == anchor) {
          CycleWitness witness;
          witness.directed = true;
          for (int v : path) witness.vertices.push_back(ix.names[v]);
          witness.step_signs = signs;
          witness.step_signs.push_back(sign);
          witness.negative_count = static_cast<int>(
              std::count(witness.step_signs.begin(), witness.step_signs.end(),
                         EdgeSign::negative));
          if (!take(witness)) return true;
          if (++produced >= limits.max_cycles) {
            *truncated = true;
            return false;
          }
        } else if (!on_path[w]) {
          on_path[w] = 1;
          path.push_back(w);
          signs.push_back(sign);
          frames.push_back({w, 0});
        }
      } else {
        frames.pop_back();
        if (!frames.empty()) {
          on_path[f.v] = 0;
          path.pop_back();
          signs.pop_back();
        }
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Undirected helpers (index-based cycles and ears within one block)
// ---------------------------------------------------------------------------

core::Multigraph to_multigraph(const UnlabeledGraph& g) {
  if (g.directed)
    throw std::invalid_argument("undirected operation on a directed graph");
  return core::Multigraph{static_cast<int>(g.vertices.size()), g.edges};
}

// vertices[i] -- vertices[i+1 mod n] via edges[i]
struct IdCycle {
  std::vector<int> vertices;
  std::vector<int> edges;
};

struct IdPath {
  std::vector<int> vertices;
  std::vector<int> edges;  // size = vertices.size() - 1
};

using EdgeList = std::vector<int>;

std::map<int, std::vector<std::pair<int, int>>> local_adjacency(
    const core::Multigraph& mg, const EdgeList& eids) {
  std::map<int, std::vector<std::pair<int, int>>> adj;
  for (int e : eids) {
    const auto [u, v] = mg.edges[e];
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }
  return adj;
}

// Any cycle within the given edge set; the caller guarantees one exists.
IdCycle any_cycle_in_edges(const core::Multigraph& mg, const EdgeList& eids) {
  for (int e : eids) {
    const auto [u, v] = mg.edges[e];
    if (u == v) return {{u}, {e}};
  }
  const auto adj = local_adjacency(mg, eids);

  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  std::map<int, int> state;  // 1 = on stack, 2 = done
  const int start = adj.begin()->first;
  std::vector<Frame> frames{{start, -1, 0}};
  std::vector<int> path_v{start};
  std::vector<int> path_e;
  state[start] = 1;
  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto& lst = adj.at(f.v);
    if (f.next < lst.size()) {
      const auto [w, eid] = lst[f.next++];
      if (eid == f.parent_edge) continue;
      const auto it = state.find(w);
      if (it != state.end() && it->second == 1) {
        const std::size_t pos =
            std::find(path_v.begin(), path_v.end(), w) - path_v.begin();
        IdCycle c;
        c.vertices.assign(path_v.begin() + pos, path_v.end());
        c.edges.assign(path_e.begin() + pos, path_e.end());
        c.edges.push_back(eid);
        return c;
      }
      if (it == state.end()) {
        state[w] = 1;
        path_v.push_back(w);
        path_e.push_back(eid);
        frames.push_back({w, eid, 0});
      }
    } else {
      state[f.v] = 2;
      frames.pop_back();
      if (!frames.empty()) {
        path_v.pop_back();
        path_e.pop_back();
      }
    }
  }
  throw std::logic_error("any_cycle_in_edges: no cycle");
}

// Walks a block that is exactly a simple cycle (every vertex has degree 2).
IdCycle walk_cycle_block(const core::Multigraph& mg, const EdgeList& eids) {
  const auto adj = local_adjacency(mg, eids);
  const int start = adj.begin()->first;
  IdCycle c;
  int cur = start, prev_edge = -1;
  do {
    const auto& inc = adj.at(cur);
    const auto [w, eid] = (inc[0].second == prev_edge) ? inc[1] : inc[0];
    c.vertices.push_back(cur);
    c.edges.push_back(eid);
    cur = w;
    prev_edge = eid;
  } while (cur != start);
  return c;
}

// Open ear of an odd cycle C inside a 2-connected block: a path between two
// distinct C-vertices whose interior and edges avoid C. Found via
// multi-source BFS from C over non-C edges; different BFS trees are
// vertex-disjoint, so tree-path concatenations are simple.
IdPath find_ear(const core::Multigraph& mg, const EdgeList& eids,
                const IdCycle& c) {
  const std::set<int> cset(c.vertices.begin(), c.vertices.end());
  const std::set<int> cedges(c.edges.begin(), c.edges.end());
  const auto adj = local_adjacency(mg, eids);

  std::map<int, int> root, par_v, par_e;
  std::deque<int> queue;
  for (int v : c.vertices) {
    root[v] = v;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& [y, eid] : adj.at(x)) {
      if (cedges.count(eid) || cset.count(y) || root.count(y)) continue;
      root[y] = root.at(x);
      par_v[y] = x;
      par_e[y] = eid;
      queue.push_back(y);
    }
  }

  const auto climb = [&](int v) {
    // path from the tree root down to v
    IdPath path;
    for (int x = v; !cset.count(x); x = par_v.at(x)) {
      path.vertices.push_back(x);
      path.edges.push_back(par_e.at(x));
    }
    path.vertices.push_back(root.at(v));
    std::reverse(path.vertices.begin(), path.vertices.end());
    std::reverse(path.edges.begin(), path.edges.end());
    return path;
  };

  for (int e : eids) {
    if (cedges.count(e)) continue;
    const auto [p, q] = mg.edges[e];
    const int rp = cset.count(p) ? p : root.at(p);
    const int rq = cset.count(q) ? q : root.at(q);
    if (rp == rq) continue;
    const IdPath left = climb(p);   // rp .. p
    const IdPath right = climb(q);  // rq .. q
    IdPath ear = left;
    ear.edges.push_back(e);
    ear.vertices.insert(ear.vertices.end(), right.vertices.rbegin(),
                        right.vertices.rend());
    ear.edges.insert(ear.edges.end(), right.edges.rbegin(),
                     right.edges.rend());
    return ear;
  }
  throw std::logic_error("find_ear: 2-connected non-cycle block has no ear");
}

// Arc of c from position i forward to position j (vertices c[i]..c[j]).
IdPath cycle_arc(const IdCycle& c, std::size_t i, std::size_t j) {
  const std::size_t n = c.vertices.size();
  IdPath arc;
  arc.vertices.push_back(c.vertices[i]);
  for (std::size_t k = i; k != j; k = (k + 1) % n) {
    arc.edges.push_back(c.edges[k]);
    arc.vertices.push_back(c.vertices[(k + 1) % n]);
  }
  return arc;
}

IdPath reverse_path(IdPath p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

// ear runs x..y; returns ear + one y->x arc of c, chosen to make the total
// edge count even. The two arcs have different parities because c is odd.
IdCycle combine_even(const IdCycle& c, const IdPath& ear) {
  const int x = ear.vertices.front();
  const int y = ear.vertices.back();
  const std::size_t ix =
      std::find(c.vertices.begin(), c.vertices.end(), x) - c.vertices.begin();
  const std::size_t iy =
      std::find(c.vertices.begin(), c.vertices.end(), y) - c.vertices.begin();
  const IdPath forward = cycle_arc(c, ix, iy);   // x .. y
  const IdPath backward = cycle_arc(c, iy, ix);  // y .. x
  const IdPath back_arc =
      ((ear.edges.size() + forward.edges.size()) % 2 == 0)
          ? reverse_path(forward)
          : backward;
  IdCycle cycle;
  cycle.vertices = ear.vertices;
  cycle.edges = ear.edges;
  cycle.vertices.insert(cycle.vertices.end(), back_arc.vertices.begin() + 1,
                        back_arc.vertices.end() - 1);
  cycle.edges.insert(cycle.edges.end(), back_arc.edges.begin(),
                     back_arc.edges.end());
  return cycle;
}

bool block_is_simple_cycle(const core::Multigraph& mg, const EdgeList& eids) {
  std::map<int, int> degree;
  for (int e : eids) {
    const auto [u, v] = mg.edges[e];
    if (u == v) return false;
    ++degree[u];
    ++degree[v];
  }
  if (degree.size() != eids.size()) return false;
  for (const auto& [v, d] : degree)
    if (d != 2) return false;
  return true;
}

// Even cycle within one offending block (not an edge, loop, or odd cycle).
IdCycle even_cycle_in_block(const core::Multigraph& mg, const EdgeList& eids) {
  if (block_is_simple_cycle(mg, eids)) {
    IdCycle c = walk_cycle_block(mg, eids);
    if (c.edges.size() % 2 != 0)
      throw std::logic_error("even_cycle_in_block: odd cycle block");
    return c;
  }
  const IdCycle c = any_cycle_in_edges(mg, eids);
  if (c.edges.size() % 2 == 0) return c;
  return combine_even(c, find_ear(mg, eids, c));
}

// ---------------------------------------------------------------------------
// Witness construction
// ---------------------------------------------------------------------------

bool edge_counts_negative(const UnlabeledGraph& g, int eid) {
  if (g.provenance[eid] < 0) return false;
  const auto& [u, v] = g.edges[eid];
  const auto is_subdivision = [&](int vertex) {
    return g.vertices[vertex].rfind("w(", 0) == 0;
  };
  return !is_subdivision(u) && !is_subdivision(v);
}

CycleWitness witness_from_id_cycle(const UnlabeledGraph& g, const IdCycle& c) {
  CycleWitness w;
  w.directed = false;
  for (int v : c.vertices) w.vertices.push_back(g.vertices[v]);
  for (int e : c.edges)
    if (edge_counts_negative(g, e)) ++w.negative_count;
  return w;
}

// U_P itself as an unlabeled multigraph (no subdivision, no provenance).
UnlabeledGraph raw_view(const ExpandedUndirectedGraph& u) {
  return UnlabeledGraph::undirected_from_named_edges(u.vertices, u.edges);
}

int count_expanded_negatives(const ExpandedUndirectedGraph& u,
                             const std::vector<std::string>& cycle) {
  int count = 0;
  for (const std::string& v : cycle)
    if (u.negative_vertex_origin.count(v)) ++count;
  return count;
}

std::optional<IdCycle> even_cycle_ids(const core::Multigraph& mg) {
  const core::Blocks raw = core::biconnected_blocks(mg);
  for (const auto& eids : raw.edge_ids) {
    if (eids.size() == 1) continue;  // bridge or loop
    if (block_is_simple_cycle(mg, eids) && eids.size() % 2 == 1) continue;
    return even_cycle_in_block(mg, eids);
  }
  return std::nullopt;
}

// Maps a cycle of unlabel(u) back to a U_P vertex sequence: merge the two
// halves of each subdivided positive edge, replace each negative signed
// edge by its v(...) vertex.
CycleWitness expanded_witness_from_unlabel(const ExpandedUndirectedGraph& u,
                                           const UnlabeledGraph& gr,
                                           IdCycle c) {
  const auto is_subdivision = [&](int v) {
    return gr.vertices[v].rfind("w(", 0) == 0;
  };
  std::size_t k = 0;
  while (k < c.vertices.size() && is_subdivision(c.vertices[k])) ++k;
  if (k == c.vertices.size())
    throw std::logic_error("unlabel cycle has only subdivision vertices");
  std::rotate(c.vertices.begin(),
              c.vertices.begin() + static_cast<std::ptrdiff_t>(k),
              c.vertices.end());
  std::rotate(c.edges.begin(),
              c.edges.begin() + static_cast<std::ptrdiff_t>(k),
              c.edges.end());

  std::vector<int> signed_ids;
  for (int e : c.edges) {
    const int sid = gr.provenance[e];
    if (signed_ids.empty() || signed_ids.back() != sid)
      signed_ids.push_back(sid);
  }

  CycleWitness w;
  w.directed = false;
  const std::string start = gr.vertices[c.vertices.front()];
  w.vertices.push_back(start);
  std::string cur = start;
  for (int sid : signed_ids) {
    const UndirectedSignedEdge& se = u.signed_edges[sid];
    if (se.u != cur && se.v != cur)
      throw std::logic_error("unlabel cycle: signed edge mismatch");
    const std::string next = (se.u == cur) ? se.v : se.u;
    if (se.sign == EdgeSign::negative) {
      w.vertices.push_back(
          negative_vertex_name(se.origin->first, se.origin->second));
      ++w.negative_count;
    }
    w.vertices.push_back(next);
    cur = next;
  }
  if (cur != start || w.vertices.back() != start)
    throw std::logic_error("unlabel cycle: walk does not close");
  w.vertices.pop_back();
  return w;
}

// ---------------------------------------------------------------------------
// Parity-constrained paths (block-cut tree walk)
// ---------------------------------------------------------------------------

struct BlockContext {
  core::Multigraph mg;
  core::Blocks blocks;
  std::vector<char> is_loop_block;
  std::vector<int> nonloop_block_of;  // per vertex, -1 if none
};

BlockContext make_block_context(const UnlabeledGraph& g) {
  BlockContext ctx{to_multigraph(g), {}, {}, {}};
  ctx.blocks = core::biconnected_blocks(ctx.mg);
  const std::size_t nblocks = ctx.blocks.edge_ids.size();
  ctx.is_loop_block.assign(nblocks, 0);
  ctx.nonloop_block_of.assign(ctx.mg.n, -1);
  for (std::size_t b = 0; b < nblocks; ++b) {
    const auto& eids = ctx.blocks.edge_ids[b];
    const auto [u, v] = ctx.mg.edges[eids.front()];
    ctx.is_loop_block[b] = (eids.size() == 1 && u == v);
    if (ctx.is_loop_block[b]) continue;
    for (int x : ctx.blocks.vertex_ids[b])
      if (!ctx.blocks.is_cut[x]) ctx.nonloop_block_of[x] = static_cast<int>(b);
  }
  return ctx;
}

struct Segment {
  int block;
  int entry;
  int exit;
};

// The unique chain of blocks an s-t path must traverse, or nullopt when s
// and t are disconnected.
std::optional<std::vector<Segment>> segment_chain(const BlockContext& ctx,
                                                  int s, int t) {
  const std::size_t nblocks = ctx.blocks.edge_ids.size();
  std::vector<int> cut_node(ctx.mg.n, -1);
  int nodes = static_cast<int>(nblocks);
  for (int v = 0; v < ctx.mg.n; ++v)
    if (ctx.blocks.is_cut[v]) cut_node[v] = nodes++;

  std::vector<std::vector<int>> tree(nodes);
  for (std::size_t b = 0; b < nblocks; ++b) {
    if (ctx.is_loop_block[b]) continue;
    for (int v : ctx.blocks.vertex_ids[b]) {
      if (!ctx.blocks.is_cut[v]) continue;
      tree[b].push_back(cut_node[v]);
      tree[cut_node[v]].push_back(static_cast<int>(b));
    }
  }

  const auto node_of = [&](int v) -> int {
    if (ctx.blocks.is_cut[v]) return cut_node[v];
    return ctx.nonloop_block_of[v];  // -1 when v has no non-loop edges
  };
  const int ns = node_of(s), nt = node_of(t);
  if (ns < 0 || nt < 0) return std::nullopt;

  std::vector<int> parent(nodes, -2);
  std::deque<int> queue{ns};
  parent[ns] = -1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == nt) break;
    for (int y : tree[x]) {
      if (parent[y] != -2) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[nt] == -2) return std::nullopt;

  std::vector<int> node_path;
  for (int x = nt; x != -1; x = parent[x]) node_path.push_back(x);
  std::reverse(node_path.begin(), node_path.end());

  const auto cut_vertex_of_node = [&](int node) {
    for (int v = 0; v < ctx.mg.n; ++v)
      if (cut_node[v] == node) return v;
    throw std::logic_error("segment_chain: not a cut node");
  };

  std::vector<Segment> chain;
  for (std::size_t i = 0; i < node_path.size(); ++i) {
    const int node = node_path[i];
    if (node >= static_cast<int>(nblocks)) continue;  // cut node
    const int entry =
        (i == 0) ? s : cut_vertex_of_node(node_path[i - 1]);
    const int exit =
        (i + 1 == node_path.size()) ? t : cut_vertex_of_node(node_path[i + 1]);
    chain.push_back({node, entry, exit});
  }
  return chain;
}

// Two-coloring of one block; nullopt when the block is not bipartite, in
// which case both path parities are achievable between any two vertices.
std::optional<std::map<int, char>> block_coloring(const core::Multigraph& mg,
                                                  const EdgeList& eids) {
  const auto adj = local_adjacency(mg, eids);
  std::map<int, char> color;
  const int start = adj.begin()->first;
  std::deque<int> queue{start};
  color[start] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& [y, eid] : adj.at(x)) {
      const auto it = color.find(y);
      if (it == color.end()) {
        color[y] = static_cast<char>(1 - color[x]);
        queue.push_back(y);
      } else if (it->second == color[x]) {
        return std::nullopt;
      }
    }
  }
  return color;
}

// Odd cycle of a non-bipartite block, via the first BFS coloring conflict.
IdCycle odd_cycle_in_block(const core::Multigraph& mg, const EdgeList& eids) {
  const auto adj = local_adjacency(mg, eids);
  std::map<int, char> color;
  std::map<int, int> par_v, par_e;
  const int start = adj.begin()->first;
  std::deque<int> queue{start};
  color[start] = 0;
  par_v[start] = -1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& [y, eid] : adj.at(x)) {
      const auto it = color.find(y);
      if (it == color.end()) {
        color[y] = static_cast<char>(1 - color[x]);
        par_v[y] = x;
        par_e[y] = eid;
        queue.push_back(y);
      } else if (it->second == color[x] && y != x) {
        // conflict edge (x, y): combine the two tree paths at their meet
        std::vector<int> xa, ya;
        for (int v = x; v != -1; v = par_v.at(v)) xa.push_back(v);
        std::set<int> on_xa(xa.begin(), xa.end());
        int meet = y;
        while (!on_xa.count(meet)) meet = par_v.at(meet);
        IdCycle c;
        for (int v = x; v != meet; v = par_v.at(v)) {
          c.vertices.push_back(v);
          c.edges.push_back(par_e.at(v));
        }
        c.vertices.push_back(meet);
        std::vector<int> down_v, down_e;
        for (int v = y; v != meet; v = par_v.at(v)) {
          down_v.push_back(v);
          down_e.push_back(par_e.at(v));
        }
        for (std::size_t i = down_v.size(); i-- > 0;) {
          c.edges.push_back(down_e[i]);
          c.vertices.push_back(down_v[i]);
        }
        c.edges.push_back(eid);
        if (c.edges.size() % 2 != 1)
          throw std::logic_error("odd_cycle_in_block: even cycle");
        return c;
      }
    }
  }
  throw std::logic_error("odd_cycle_in_block: block is bipartite");
}

// BFS from `from` through non-C vertices (avoiding `avoid`) until a C vertex
// is first touched; returns the path from .. y with y on C.
std::optional<IdPath> path_to_cycle(const core::Multigraph& mg,
                                    const EdgeList& eids,
                                    const std::set<int>& cset, int from,
                                    int avoid) {
  const auto adj = local_adjacency(mg, eids);
  std::map<int, int> par_v, par_e;
  std::deque<int> queue{from};
  par_v[from] = -1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& [y, eid] : adj.at(x)) {
      if (y == avoid) continue;
      if (cset.count(y)) {
        IdPath path;
        path.vertices.push_back(y);
        path.edges.push_back(eid);
        for (int v = x; v != -1; v = par_v.at(v)) {
          path.vertices.push_back(v);
          if (par_v.at(v) != -1) path.edges.push_back(par_e.at(v));
        }
        return reverse_path(path);  // from .. y
      }
      if (par_v.count(y)) continue;
      par_v[y] = x;
      par_e[y] = eid;
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

IdPath concat_paths(const IdPath& a, const IdPath& b) {
  if (a.vertices.back() != b.vertices.front())
    throw std::logic_error("concat_paths: junction mismatch");
  IdPath out = a;
  out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1,
                      b.vertices.end());
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

IdPath walk_to_path(const core::Walk& w) { return {w.vertices, w.edge_ids}; }

// Simple u-v path of the requested parity inside one non-bipartite block.
// An odd cycle plus two disjoint connectors realizes either parity because
// the two connector-to-connector arcs of an odd cycle differ in parity.
IdPath parity_path_in_nonbipartite_block(const BlockContext& ctx,
                                         const EdgeList& eids, int u, int v,
                                         int parity) {
  core::Multigraph block_mg{ctx.mg.n, {}};
  std::vector<int> orig_edge;
  for (int e : eids) {
    block_mg.edges.push_back(ctx.mg.edges[e]);
    orig_edge.push_back(e);
  }
  const auto relabel = [&](IdPath p) {
    for (int& e : p.edges) e = orig_edge[e];
    return p;
  };
  std::vector<bool> allowed(ctx.mg.n, false);
  for (const auto& [a, b] : block_mg.edges) allowed[a] = allowed[b] = true;

  if (const auto direct = core::bfs_path(block_mg, u, v, allowed)) {
    if (static_cast<int>(direct->edge_ids.size()) % 2 == parity)
      return relabel(walk_to_path(*direct));
  }

  const IdCycle c = odd_cycle_in_block(ctx.mg, eids);
  const std::set<int> cset(c.vertices.begin(), c.vertices.end());
  const auto pos = [&](int x) {
    return static_cast<std::size_t>(
        std::find(c.vertices.begin(), c.vertices.end(), x) -
        c.vertices.begin());
  };
  const auto arc_with_parity = [&](int x, int y, int want) {
    IdPath arc = cycle_arc(c, pos(x), pos(y));
    if (static_cast<int>(arc.edges.size()) % 2 == want) return arc;
    arc = reverse_path(cycle_arc(c, pos(y), pos(x)));
    if (static_cast<int>(arc.edges.size()) % 2 != want)
      throw std::logic_error("arc_with_parity: odd cycle arcs agree");
    return arc;
  };

  // everything below works in global edge ids; only the flow helper output
  // needs relabeling
  if (cset.count(u) && cset.count(v)) {
    return arc_with_parity(u, v, parity);
  }
  if (cset.count(u) || cset.count(v)) {
    const bool swapped = !cset.count(u);
    const int on = swapped ? v : u;
    const int off = swapped ? u : v;
    const auto p2 = path_to_cycle(ctx.mg, eids, cset, off, on);
    if (!p2) throw std::logic_error("parity path: connector missing");
    const int y = p2->vertices.back();
    const int want = (parity - static_cast<int>(p2->edges.size()) % 2 + 2) % 2;
    IdPath path = concat_paths(arc_with_parity(on, y, want),
                               reverse_path(*p2));  // on .. y .. off
    if (swapped) path = reverse_path(path);
    return path;
  }

  std::vector<bool> target(ctx.mg.n, false);
  for (int x : c.vertices) target[x] = true;
  const auto paths =
      core::two_disjoint_paths_to_set(block_mg, u, v, target, allowed);
  if (!paths) throw std::logic_error("parity path: disjoint connectors missing");
  const IdPath pu = relabel(walk_to_path(paths->from_u));  // u .. x
  const IdPath pv = relabel(walk_to_path(paths->from_v));  // v .. y
  const int x = pu.vertices.back();
  const int y = pv.vertices.back();
  const int want =
      ((parity - static_cast<int>(pu.edges.size() + pv.edges.size())) % 2 + 2) %
      2;
  return concat_paths(concat_paths(pu, arc_with_parity(x, y, want)),
                      reverse_path(pv));
}

struct ParityPlan {
  std::vector<Segment> chain;
  std::vector<std::optional<bool>> forced;  // per segment: parity, odd = true
  int forced_sum = 0;
  int free_count = 0;
};

std::optional<ParityPlan> parity_plan(const BlockContext& ctx, int s, int t) {
  const auto chain = segment_chain(ctx, s, t);
  if (!chain) return std::nullopt;
  ParityPlan plan;
  plan.chain = *chain;
  for (const Segment& seg : plan.chain) {
    const auto coloring =
        block_coloring(ctx.mg, ctx.blocks.edge_ids[seg.block]);
    if (!coloring) {
      plan.forced.emplace_back(std::nullopt);
      ++plan.free_count;
    } else {
      const bool odd = coloring->at(seg.entry) != coloring->at(seg.exit);
      plan.forced.emplace_back(odd);
      plan.forced_sum ^= odd ? 1 : 0;
    }
  }
  return plan;
}

std::optional<IdPath> find_parity_path_ids(const UnlabeledGraph& g, int s,
                                           int t, bool odd) {
  if (s == t) throw std::invalid_argument("parity path: endpoints equal");
  const BlockContext ctx = make_block_context(g);
  const auto plan = parity_plan(ctx, s, t);
  if (!plan) return std::nullopt;
  const int want = odd ? 1 : 0;
  if (plan->free_count == 0 && plan->forced_sum != want) return std::nullopt;

  std::vector<int> targets;
  int total = plan->forced_sum + plan->free_count;  // free segments start odd
  bool flipped_one = false;
  for (std::size_t i = 0; i < plan->chain.size(); ++i) {
    if (plan->forced[i]) {
      targets.push_back(*plan->forced[i] ? 1 : 0);
    } else if (!flipped_one && total % 2 != want) {
      targets.push_back(0);
      flipped_one = true;
      total -= 1;
    } else {
      targets.push_back(1);
    }
  }
  if (total % 2 != want) return std::nullopt;  // unreachable by construction

  IdPath result;
  result.vertices.push_back(s);
  for (std::size_t i = 0; i < plan->chain.size(); ++i) {
    const Segment& seg = plan->chain[i];
    const EdgeList& eids = ctx.blocks.edge_ids[seg.block];
    IdPath piece;
    if (plan->forced[i]) {
      core::Multigraph block_mg{ctx.mg.n, {}};
      std::vector<int> orig_edge;
      for (int e : eids) {
        block_mg.edges.push_back(ctx.mg.edges[e]);
        orig_edge.push_back(e);
      }
      std::vector<bool> allowed(ctx.mg.n, false);
      for (const auto& [a, b] : block_mg.edges) allowed[a] = allowed[b] = true;
      const auto walk = core::bfs_path(block_mg, seg.entry, seg.exit, allowed);
      if (!walk) throw std::logic_error("parity path: block disconnected");
      piece = walk_to_path(*walk);
      for (int& e : piece.edges) e = orig_edge[e];
    } else {
      piece = parity_path_in_nonbipartite_block(ctx, eids, seg.entry,
                                                seg.exit, targets[i]);
    }
    result = concat_paths(result, piece);
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

CycleEnumeration enumerate_directed_cycles(const SignedDepGraph& g,
                                           const CycleLimits& limits) {
  CycleEnumeration out;
  for_each_directed_cycle(
      g, limits,
      [&](const CycleWitness& w) {
        out.cycles.push_back(w);
        return true;
      },
      &out.truncated);
  return out;
}

DirectedCycleQuery has_directed_cycle(const SignedDepGraph& g,
                                      bool require_bad, bool require_even,
                                      const CycleLimits& limits) {
  DirectedCycleQuery q;
  bool truncated = false;
  for_each_directed_cycle(
      g, limits,
      [&](const CycleWitness& w) {
        if (require_bad && !w.bad()) return true;
        if (require_even && !w.even()) return true;
        q.witness = w;
        return false;
      },
      &truncated);
  q.truncated = q.witness ? false : truncated;
  return q;
}

BlockDecomposition blocks(const UnlabeledGraph& g) {
  const core::Multigraph mg = to_multigraph(g);
  const core::Blocks raw = core::biconnected_blocks(mg);
  BlockDecomposition out;
  for (std::size_t b = 0; b < raw.edge_ids.size(); ++b) {
    BlockDecomposition::Block block;
    for (int v : raw.vertex_ids[b]) block.vertices.push_back(g.vertices[v]);
    for (int e : raw.edge_ids[b])
      block.edge_indices.push_back(static_cast<std::size_t>(e));
    std::sort(block.edge_indices.begin(), block.edge_indices.end());
    const auto [u, v] = mg.edges[raw.edge_ids[b].front()];
    block.is_loop = (raw.edge_ids[b].size() == 1 && u == v);
    out.blocks.push_back(std::move(block));
  }
  for (int v = 0; v < mg.n; ++v)
    if (raw.is_cut[v]) out.cut_vertices.push_back(g.vertices[v]);
  return out;
}

std::optional<CycleWitness> has_any_cycle_undirected(const UnlabeledGraph& g) {
  const core::Multigraph mg = to_multigraph(g);
  const core::Blocks raw = core::biconnected_blocks(mg);
  for (const auto& eids : raw.edge_ids) {
    const auto [u, v] = mg.edges[eids.front()];
    if (eids.size() >= 2 || u == v)
      return witness_from_id_cycle(g, any_cycle_in_edges(mg, eids));
  }
  return std::nullopt;
}

std::optional<CycleWitness> has_even_cycle_undirected(const UnlabeledGraph& g) {
  const core::Multigraph mg = to_multigraph(g);
  if (const auto c = even_cycle_ids(mg)) return witness_from_id_cycle(g, *c);
  return std::nullopt;
}

std::optional<CycleWitness> has_any_cycle_undirected(
    const ExpandedUndirectedGraph& u) {
  const UnlabeledGraph view = raw_view(u);
  auto w = has_any_cycle_undirected(view);
  if (w) w->negative_count = count_expanded_negatives(u, w->vertices);
  return w;
}

std::optional<CycleWitness> has_even_cycle_undirected(
    const ExpandedUndirectedGraph& u) {
  const UnlabeledGraph gr = unlabel(u);
  const core::Multigraph mg = to_multigraph(gr);
  if (const auto c = even_cycle_ids(mg))
    return expanded_witness_from_unlabel(u, gr, *c);
  return std::nullopt;
}

std::optional<CycleWitness> has_bad_cycle_undirected(
    const ExpandedUndirectedGraph& u) {
  const UnlabeledGraph view = raw_view(u);
  const core::Multigraph mg = to_multigraph(view);
  const core::Blocks raw = core::biconnected_blocks(mg);
  for (std::size_t b = 0; b < raw.edge_ids.size(); ++b) {
    const std::vector<int>& eids = raw.edge_ids[b];
    if (eids.size() < 2) continue;
    for (int z : raw.vertex_ids[b]) {
      if (!u.negative_vertex_origin.count(view.vertices[z])) continue;
      // z is a degree-2 negative vertex; both its edges lie in this block
      std::vector<int> incident;
      for (int e : eids) {
        const auto [a, c] = mg.edges[e];
        if (a == z || c == z) incident.push_back(e);
      }
      if (incident.size() != 2)
        throw std::logic_error("negative vertex degree is not 2");
      const auto other = [&](int e) {
        const auto [a, c] = mg.edges[e];
        return a == z ? c : a;
      };
      const int x = other(incident[0]);
      const int y = other(incident[1]);
      CycleWitness w;
      w.directed = false;
      w.vertices.push_back(view.vertices[z]);
      if (x == y) {
        w.vertices.push_back(view.vertices[x]);
      } else {
        core::Multigraph rest{mg.n, {}};
        for (int e : eids)
          if (e != incident[0] && e != incident[1])
            rest.edges.push_back(mg.edges[e]);
        std::vector<bool> allowed(mg.n, false);
        for (int v : raw.vertex_ids[b]) allowed[v] = true;
        allowed[z] = false;
        const auto path = core::bfs_path(rest, x, y, allowed);
        if (!path)
          throw std::logic_error("negative vertex block fell apart");
        for (int v : path->vertices) w.vertices.push_back(view.vertices[v]);
      }
      w.negative_count = count_expanded_negatives(u, w.vertices);
      return w;
    }
  }
  return std::nullopt;
}

bool odd_path_exists(const UnlabeledGraph& g, const std::string& s,
                     const std::string& t) {
  const int si = g.vertex_index(s), ti = g.vertex_index(t);
  if (si < 0 || ti < 0)
    throw std::invalid_argument("odd_path_exists: unknown vertex");
  if (si == ti) throw std::invalid_argument("odd_path_exists: s == t");
  const BlockContext ctx = make_block_context(g);
  const auto plan = parity_plan(ctx, si, ti);
  if (!plan) return false;
  return plan->free_count > 0 || plan->forced_sum == 1;
}

std::optional<std::vector<std::string>> find_parity_path(
    const UnlabeledGraph& g, const std::string& s, const std::string& t,
    bool odd) {
  const int si = g.vertex_index(s), ti = g.vertex_index(t);
  if (si < 0 || ti < 0)
    throw std::invalid_argument("find_parity_path: unknown vertex");
  const auto path = find_parity_path_ids(g, si, ti, odd);
  if (!path) return std::nullopt;
  std::vector<std::string> names;
  for (int v : path->vertices) names.push_back(g.vertices[v]);
  return names;
}

std::optional<CycleWitness> has_bad_even_cycle_undirected(
    const ExpandedUndirectedGraph& u) {
  for (std::size_t i = 0; i < u.signed_edges.size(); ++i) {
    const UndirectedSignedEdge& e = u.signed_edges[i];
    if (e.sign != EdgeSign::negative || e.u == e.v) continue;

    std::vector<UndirectedSignedEdge> rest;
    for (std::size_t j = 0; j < u.signed_edges.size(); ++j)
      if (j != i) rest.push_back(u.signed_edges[j]);
    const ExpandedUndirectedGraph reduced = expand_signed(u.atoms, rest);
    const UnlabeledGraph gr = unlabel(reduced);

    const int si = gr.vertex_index(e.u), ti = gr.vertex_index(e.v);
    const auto path = find_parity_path_ids(gr, si, ti, /*odd=*/true);
    if (!path) continue;

    // provenance ids, merging the two halves of each positive edge
    std::vector<int> signed_ids;
    for (int eid : path->edges) {
      const int sid = gr.provenance[eid];
      if (signed_ids.empty() || signed_ids.back() != sid)
        signed_ids.push_back(sid);
    }

    CycleWitness w;
    w.directed = false;
    w.vertices.push_back(e.u);
    std::string cur = e.u;
    for (int sid : signed_ids) {
      const UndirectedSignedEdge& se = reduced.signed_edges[sid];
      const std::string next = (se.u == cur) ? se.v : se.u;
      if (se.sign == EdgeSign::negative) {
        w.vertices.push_back(
            negative_vertex_name(se.origin->first, se.origin->second));
        ++w.negative_count;
      }
      w.vertices.push_back(next);
      cur = next;
    }
    if (cur != e.v) throw std::logic_error("bad even cycle: path mismatch");
    w.vertices.push_back(
        negative_vertex_name(e.origin->first, e.origin->second));
    ++w.negative_count;
    if (w.negative_count % 2 != 0)
      throw std::logic_error("bad even cycle: odd witness");
    return w;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Witness validation
// ---------------------------------------------------------------------------

bool validate_witness(const SignedDepGraph& g, const CycleWitness& w) {
  if (!w.directed || w.vertices.empty()) return false;
  if (w.step_signs.size() != w.vertices.size()) return false;
  const std::set<std::string> distinct(w.vertices.begin(), w.vertices.end());
  if (distinct.size() != w.vertices.size()) return false;
  int negatives = 0;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    const SignedDepGraph::Edge edge{
        w.vertices[i], w.vertices[(i + 1) % w.vertices.size()],
        w.step_signs[i]};
    if (!std::binary_search(g.edges.begin(), g.edges.end(), edge))
      return false;
    if (edge.sign == EdgeSign::negative) ++negatives;
  }
  return negatives == w.negative_count;
}

namespace {

bool validate_undirected_sequence(
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::vector<std::string>& cycle) {
  if (cycle.empty()) return false;
  const std::set<std::string> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size()) return false;
  std::map<std::pair<std::string, std::string>, int> available;
  for (const auto& [u, v] : edges) ++available[std::minmax(u, v)];
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto key = std::minmax(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (cycle.size() == 2 && i == 1) {
      // a two-vertex cycle needs two parallel edges
      if (available[key] < 2) return false;
      continue;
    }
    if (available[key] < 1) return false;
  }
  return true;
}

}  // namespace

bool validate_witness(const ExpandedUndirectedGraph& u, const CycleWitness& w) {
  if (w.directed) return false;
  if (!validate_undirected_sequence(u.edges, w.vertices)) return false;
  int negatives = 0;
  for (const std::string& v : w.vertices)
    if (u.negative_vertex_origin.count(v)) ++negatives;
  return negatives == w.negative_count;
}

bool validate_witness(const UnlabeledGraph& g, const CycleWitness& w) {
  if (w.directed != g.directed) return false;
  if (g.directed) return false;  // directed unlabeled witnesses unsupported
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : g.edges)
    edges.emplace_back(g.vertices[a], g.vertices[b]);
  return validate_undirected_sequence(edges, w.vertices);
}

}  // namespace aspbd
