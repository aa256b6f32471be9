#include "graph_core.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <stdexcept>

namespace aspbd::core {

Blocks biconnected_blocks(const Multigraph& g) {
  const int n = g.n;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  std::vector<int> loop_edges;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    const auto [u, v] = g.edges[i];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("biconnected_blocks: bad edge");
    if (u == v) {
      loop_edges.push_back(i);
      continue;
    }
    adj[u].emplace_back(v, i);
    adj[v].emplace_back(u, i);
  }

  Blocks out;
  out.is_cut.assign(n, false);
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  int timer = 0;

  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1 || adj[root].empty()) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const auto [w, eid] = adj[f.v][f.next++];
        if (eid == f.parent_edge) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(eid);
          disc[w] = low[w] = timer++;
          stack.push_back({w, eid, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(eid);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const int v = f.v;
        const int pe = f.parent_edge;
        stack.pop_back();
        if (stack.empty()) continue;
        Frame& pf = stack.back();
        low[pf.v] = std::min(low[pf.v], low[v]);
        if (pf.v == root) ++root_children;
        if (low[v] >= disc[pf.v]) {
          std::vector<int> block;
          while (true) {
            const int e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == pe) break;
          }
          out.edge_ids.push_back(std::move(block));
          if (pf.v != root) out.is_cut[pf.v] = true;
        }
      }
    }
    if (root_children >= 2) out.is_cut[root] = true;
  }

  for (int e : loop_edges) out.edge_ids.push_back({e});

  for (const std::vector<int>& block : out.edge_ids) {
    std::set<int> vs;
    for (int e : block) {
      vs.insert(g.edges[e].first);
      vs.insert(g.edges[e].second);
    }
    out.vertex_ids.emplace_back(vs.begin(), vs.end());
  }
  return out;
}

std::vector<int> scc_ids(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> fwd(n), rev(n);
  for (const auto& [u, v] : edges) {
    fwd[u].push_back(v);
    rev[v].push_back(u);
  }

  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < fwd[v].size()) {
        const int w = fwd[v][next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<int> comp(n, -1);
  int next_comp = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != -1) continue;
    std::vector<int> stack{*it};
    comp[*it] = next_comp;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : rev[v]) {
        if (comp[w] == -1) {
          comp[w] = next_comp;
          stack.push_back(w);
        }
      }
    }
    ++next_comp;
  }
  return comp;
}

std::optional<Walk> bfs_path(const Multigraph& g, int s, int t,
                             const std::vector<bool>& allowed) {
  if (!allowed[s] || !allowed[t]) return std::nullopt;
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    const auto [u, v] = g.edges[i];
    if (u == v) continue;
    adj[u].emplace_back(v, i);
    adj[v].emplace_back(u, i);
  }
  std::vector<int> parent(g.n, -1), via(g.n, -1);
  std::deque<int> queue{s};
  std::vector<char> seen(g.n, 0);
  seen[s] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == t) break;
    for (const auto& [w, eid] : adj[v]) {
      if (seen[w] || !allowed[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      via[w] = eid;
      queue.push_back(w);
    }
  }
  if (!seen[t]) return std::nullopt;
  Walk walk;
  for (int v = t; v != s; v = parent[v]) {
    walk.vertices.push_back(v);
    walk.edge_ids.push_back(via[v]);
  }
  walk.vertices.push_back(s);
  std::reverse(walk.vertices.begin(), walk.vertices.end());
  std::reverse(walk.edge_ids.begin(), walk.edge_ids.end());
  return walk;
}

namespace {

struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int edge_id;  // multigraph edge realized by this arc, -1 otherwise
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;

  explicit FlowNet(int nodes) : out(nodes) {}

  void add(int from, int to, int cap, int edge_id = -1) {
    out[from].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, cap, edge_id});
    out[to].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0, edge_id});
  }

  bool augment(int s, int t) {
    std::vector<int> via(out.size(), -1);
    std::vector<char> seen(out.size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      const int v = queue.front();
      queue.pop_front();
      for (int a : out[v]) {
        if (arcs[a].cap <= 0 || seen[arcs[a].to]) continue;
        seen[arcs[a].to] = 1;
        via[arcs[a].to] = a;
        queue.push_back(arcs[a].to);
      }
    }
    if (!seen[t]) return false;
    for (int v = t; v != s;) {
      const int a = via[v];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      v = arcs[a ^ 1].to;
    }
    return true;
  }
};

}  // namespace

std::optional<DisjointPaths> two_disjoint_paths_to_set(
    const Multigraph& g, int u, int v, const std::vector<bool>& target,
    const std::vector<bool>& allowed) {
  if (u == v || target[u] || target[v]) return std::nullopt;
  // Vertex splitting: x_in = 2x, x_out = 2x+1. Target vertices absorb flow
  // (no out node), so path interiors stay outside the target set.
  const int S = 2 * g.n, T = 2 * g.n + 1;
  FlowNet net(2 * g.n + 2);
  net.add(S, 2 * u, 1);
  net.add(S, 2 * v, 1);
  for (int x = 0; x < g.n; ++x) {
    if (!allowed[x]) continue;
    if (target[x])
      net.add(2 * x, T, 1);
    else
      net.add(2 * x, 2 * x + 1, 1);
  }
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    const auto [a, b] = g.edges[i];
    if (a == b || !allowed[a] || !allowed[b]) continue;
    if (!target[a]) net.add(2 * a + 1, 2 * b, 1, i);
    if (!target[b]) net.add(2 * b + 1, 2 * a, 1, i);
  }
  if (!net.augment(S, T) || !net.augment(S, T)) return std::nullopt;

  // Trace the two unit paths by consuming saturated arcs.
  const auto trace = [&](int start) {
    Walk walk;
    walk.vertices.push_back(start);
    int node = 2 * start;
    while (node != T) {
      int chosen = -1;
      for (int a : net.out[node]) {
        // saturated forward arc: even index, cap now 0, reverse has cap 1
        if (a % 2 == 0 && net.arcs[a].cap == 0 && net.arcs[a ^ 1].cap == 1) {
          chosen = a;
          break;
        }
      }
      if (chosen == -1) throw std::logic_error("flow trace failed");
      net.arcs[chosen].cap = 1;  // consume
      net.arcs[chosen ^ 1].cap = 0;
      const int to = net.arcs[chosen].to;
      if (net.arcs[chosen].edge_id >= 0) {
        walk.edge_ids.push_back(net.arcs[chosen].edge_id);
        walk.vertices.push_back(to / 2);
      }
      node = to;
    }
    return walk;
  };

  // Consume the S arcs first so traces start at u and v respectively.
  for (int a : net.out[S])
    if (a % 2 == 0) net.arcs[a].cap = 1;
  DisjointPaths paths{trace(u), trace(v)};
  return paths;
}

}  // namespace aspbd::core
