#include "aspbd/classes.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>

#include "graph_core.hpp"

namespace aspbd {

namespace {

constexpr std::array<std::pair<ClassId, const char*>, 9> kNames{{
    {ClassId::horn, "horn"},
    {ClassId::no_c, "no-c"},
    {ClassId::no_dc, "no-dc"},
    {ClassId::no_bc, "no-bc"},
    {ClassId::no_dbc, "no-dbc"},
    {ClassId::no_ec, "no-ec"},
    {ClassId::no_dec, "no-dec"},
    {ClassId::no_bec, "no-bec"},
    {ClassId::no_dbec, "no-dbec"},
}};

// Directed cycle detection through strongly connected components: a simple
// directed cycle exists through edge (s, d) iff s and d share a component
// (self-loops included). The witness closes the edge with a shortest
// directed path back inside the component.
std::optional<CycleWitness> directed_cycle_scc(const SignedDepGraph& g,
                                               bool require_negative) {
  const int n = static_cast<int>(g.vertices.size());
  std::map<std::string, int> vid;
  for (int i = 0; i < n; ++i) vid[g.vertices[i]] = i;

  std::vector<std::pair<int, int>> arcs;
  for (const auto& e : g.edges) arcs.emplace_back(vid.at(e.src), vid.at(e.dst));
  const std::vector<int> scc = core::scc_ids(n, arcs);

  for (const auto& e : g.edges) {
    if (require_negative && e.sign != EdgeSign::negative) continue;
    const int s = vid.at(e.src), d = vid.at(e.dst);
    if (scc[s] != scc[d]) continue;
    CycleWitness w;
    w.directed = true;
    w.vertices.push_back(e.src);
    w.step_signs.push_back(e.sign);
    if (s != d) {
      // shortest path d -> s within the component, tracking step signs
      std::vector<std::vector<std::pair<int, EdgeSign>>> adj(n);
      for (const auto& f : g.edges) {
        const int a = vid.at(f.src), b = vid.at(f.dst);
        if (scc[a] == scc[s] && scc[b] == scc[s])
          adj[a].emplace_back(b, f.sign);
      }
      std::vector<int> par_v(n, -1);
      std::vector<EdgeSign> par_s(n, EdgeSign::positive);
      std::vector<char> seen(n, 0);
      std::deque<int> queue{d};
      seen[d] = 1;
      while (!queue.empty() && !seen[s]) {
        const int x = queue.front();
        queue.pop_front();
        for (const auto& [y, sign] : adj[x]) {
          if (seen[y]) continue;
          seen[y] = 1;
          par_v[y] = x;
          par_s[y] = sign;
          queue.push_back(y);
        }
      }
      if (!seen[s])
        throw std::logic_error("directed_cycle_scc: component not closed");
      std::vector<int> back;
      std::vector<EdgeSign> back_signs;
      for (int x = s; x != d; x = par_v[x]) {
        back.push_back(x);
        back_signs.push_back(par_s[x]);
      }
      back.push_back(d);
      std::reverse(back.begin(), back.end());
      std::reverse(back_signs.begin(), back_signs.end());
      // back = d .. s; append d .. (vertex before s) and the path signs
      for (std::size_t i = 0; i + 1 < back.size(); ++i)
        w.vertices.push_back(g.vertices[back[i]]);
      for (EdgeSign sign : back_signs) w.step_signs.push_back(sign);
    }
    w.negative_count = static_cast<int>(std::count(
        w.step_signs.begin(), w.step_signs.end(), EdgeSign::negative));
    return w;
  }
  return std::nullopt;
}

MembershipVerdict cycle_verdict(MembershipVerdict v,
                                std::optional<CycleWitness> w) {
  if (w) {
    v.member = false;
    v.cycle = std::move(w);
  } else {
    v.member = true;
  }
  return v;
}

}  // namespace

const std::vector<ClassId>& all_classes() {
  static const std::vector<ClassId> classes = [] {
    std::vector<ClassId> out;
    for (const auto& [id, name] : kNames) out.push_back(id);
    return out;
  }();
  return classes;
}

std::string class_name(ClassId c) {
  for (const auto& [id, name] : kNames)
    if (id == c) return name;
  throw std::invalid_argument("class_name: bad ClassId");
}

std::optional<ClassId> class_from_name(std::string_view name) {
  for (const auto& [id, n] : kNames)
    if (name == n) return id;
  return std::nullopt;
}

MembershipVerdict is_member(const Program& p, ClassId c,
                            const CycleLimits& limits) {
  MembershipVerdict v;
  v.target = c;

  if (c == ClassId::horn) {
    for (const Rule& r : p.rules) {
      if (!r.is_horn()) {
        v.offending_rule = r;
        return v;
      }
    }
    v.member = true;
    return v;
  }

  // every remaining class requires a normal program
  for (const Rule& r : p.rules) {
    if (!r.is_normal()) {
      v.offending_rule = r;
      return v;
    }
  }

  switch (c) {
    case ClassId::no_c:
      return cycle_verdict(std::move(v),
                           has_any_cycle_undirected(build_undirected(p)));
    case ClassId::no_bc:
      return cycle_verdict(std::move(v),
                           has_bad_cycle_undirected(build_undirected(p)));
    case ClassId::no_ec:
      return cycle_verdict(std::move(v),
                           has_even_cycle_undirected(build_undirected(p)));
    case ClassId::no_bec:
      return cycle_verdict(std::move(v),
                           has_bad_even_cycle_undirected(build_undirected(p)));
    case ClassId::no_dc:
      return cycle_verdict(std::move(v),
                           directed_cycle_scc(build_directed(p), false));
    case ClassId::no_dbc:
      return cycle_verdict(std::move(v),
                           directed_cycle_scc(build_directed(p), true));
    case ClassId::no_dec:
    case ClassId::no_dbec: {
      const DirectedCycleQuery q = has_directed_cycle(
          build_directed(p), /*require_bad=*/c == ClassId::no_dbec,
          /*require_even=*/true, limits);
      if (q.witness) return cycle_verdict(std::move(v), q.witness);
      if (q.truncated) {
        v.unknown = true;
        return v;
      }
      v.member = true;
      return v;
    }
    case ClassId::horn:
      break;  // handled above
  }
  throw std::logic_error("is_member: unhandled class");
}

Classification classify(const Program& p, const CycleLimits& limits) {
  Classification out;
  for (ClassId c : all_classes()) {
    const MembershipVerdict v = is_member(p, c, limits);
    if (v.unknown)
      out.unknown.insert(c);
    else if (v.member)
      out.members.insert(c);
  }
  return out;
}

bool lattice_subset(ClassId c1, ClassId c2) {
  static const auto closure = [] {
    constexpr int k = 9;
    std::array<std::array<bool, k>, k> m{};
    const auto idx = [](ClassId c) { return static_cast<int>(c); };
    for (int i = 0; i < k; ++i) m[i][i] = true;
    const std::pair<ClassId, ClassId> arrows[] = {
        {ClassId::no_c, ClassId::no_bc},    {ClassId::no_c, ClassId::no_ec},
        {ClassId::no_bc, ClassId::no_dbc},  {ClassId::no_bc, ClassId::no_bec},
        {ClassId::no_dc, ClassId::no_dbc},  {ClassId::no_dc, ClassId::no_dec},
        {ClassId::no_ec, ClassId::no_bec},  {ClassId::no_dbc, ClassId::no_dbec},
        {ClassId::no_dec, ClassId::no_dbec}, {ClassId::no_bec, ClassId::no_dbec},
        {ClassId::horn, ClassId::no_bc},
    };
    for (const auto& [a, b] : arrows) m[idx(a)][idx(b)] = true;
    for (int via = 0; via < k; ++via)
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          if (m[a][via] && m[via][b]) m[a][b] = true;
    return m;
  }();
  return closure[static_cast<int>(c1)][static_cast<int>(c2)];
}

}  // namespace aspbd
