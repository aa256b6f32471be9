#include "aspbd/serialize.hpp"

#include <stdexcept>

namespace aspbd {

using nlohmann::json;

namespace {

const char* sign_name(EdgeSign s) {
  return s == EdgeSign::positive ? "positive" : "negative";
}

json interpretations_to_json(const std::set<Interpretation>& sets) {
  json out = json::array();
  for (const Interpretation& m : sets) out.push_back(m);
  return out;
}

}  // namespace

json witness_to_json(const CycleWitness& w) {
  json out;
  out["directed"] = w.directed;
  out["vertices"] = w.vertices;
  if (w.directed) {
    json signs = json::array();
    for (EdgeSign s : w.step_signs) signs.push_back(sign_name(s));
    out["signs"] = std::move(signs);
  }
  out["negative_count"] = w.negative_count;
  out["bad"] = w.bad();
  out["even"] = w.even();
  return out;
}

json verdict_to_json(const MembershipVerdict& v) {
  json out;
  out["class"] = class_name(v.target);
  out["member"] = v.member;
  out["unknown"] = v.unknown;
  if (v.cycle) out["cycle"] = witness_to_json(*v.cycle);
  if (v.offending_rule) out["offending_rule"] = print_rule(*v.offending_rule);
  return out;
}

json classification_to_json(const Classification& c) {
  json out;
  json classes = json::array();
  for (ClassId id : all_classes())
    if (c.members.count(id)) classes.push_back(class_name(id));
  json unknown = json::array();
  for (ClassId id : all_classes())
    if (c.unknown.count(id)) unknown.push_back(class_name(id));
  out["classes"] = std::move(classes);
  out["unknown"] = std::move(unknown);
  return out;
}

json assignment_to_json(const Assignment& tau) {
  json out = json::object();
  for (const auto& [atom, value] : tau.values) out[atom] = value;
  return out;
}

json report_to_json(const BackdoorReport& r) {
  json out;
  out["mode"] = r.mode == BackdoorMode::strong ? "strong" : "deletion";
  out["class"] = class_name(r.target);
  out["atoms"] = r.atoms;
  out["ok"] = r.ok;
  out["unknown"] = r.unknown;
  if (r.failing_assignment)
    out["failing_assignment"] = assignment_to_json(*r.failing_assignment);
  if (r.failure) out["failure"] = verdict_to_json(*r.failure);
  return out;
}

json solve_to_json(const SolveResult& r) {
  json out;
  out["backdoor"] = r.backdoor;
  out["candidates"] = interpretations_to_json(r.candidates.distinct);
  out["answer_sets"] = interpretations_to_json(r.answer_sets);
  return out;
}

json query_to_json(const QueryAnswer& a) {
  json out;
  switch (a.kind) {
    case QueryKind::consistency:
      out["consistent"] = a.truth;
      return out;
    case QueryKind::credulous:
      out["credulous"] = a.truth;
      return out;
    case QueryKind::skeptical:
      out["skeptical"] = a.truth;
      return out;
    case QueryKind::count:
      out["count"] = a.count;
      return out;
    case QueryKind::enumerate:
      out["answer_sets"] = interpretations_to_json(a.sets);
      return out;
  }
  throw std::logic_error("query_to_json: unhandled kind");
}

json graph_to_json(const SignedDepGraph& g) {
  json out;
  out["type"] = "directed";
  out["vertices"] = g.vertices;
  json edges = json::array();
  for (const auto& e : g.edges) {
    json edge;
    edge["src"] = e.src;
    edge["dst"] = e.dst;
    edge["sign"] = sign_name(e.sign);
    edges.push_back(std::move(edge));
  }
  out["edges"] = std::move(edges);
  return out;
}

json graph_to_json(const ExpandedUndirectedGraph& g) {
  json out;
  out["type"] = "undirected";
  out["atoms"] = g.atoms;
  out["vertices"] = g.vertices;
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
  out["edges"] = std::move(edges);
  json negatives = json::object();
  for (const auto& [name, origin] : g.negative_vertex_origin) {
    json o;
    o["src"] = origin.first;
    o["dst"] = origin.second;
    negatives[name] = std::move(o);
  }
  out["negative_vertices"] = std::move(negatives);
  return out;
}

json graph_to_json(const UnlabeledGraph& g) {
  json out;
  out["type"] = "unlabeled";
  out["directed"] = g.directed;
  out["vertices"] = g.vertices;
  json edges = json::array();
  for (const auto& [a, b] : g.edges)
    edges.push_back(json::array({g.vertices[a], g.vertices[b]}));
  out["edges"] = std::move(edges);
  return out;
}

json instance_to_json(const HittingSetInstance& inst) {
  json out;
  json sets = json::array();
  for (const auto& s : inst.sets) sets.push_back(s);
  out["sets"] = std::move(sets);
  out["k"] = inst.k;
  return out;
}

HittingSetInstance instance_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("sets") || !doc.contains("k") ||
      !doc["sets"].is_array() || !doc["k"].is_number_integer())
    throw std::invalid_argument(
        "hitting set instance: expected {\"sets\": [[...]...], \"k\": n}");
  HittingSetInstance inst;
  inst.k = doc["k"].get<int>();
  for (const json& s : doc["sets"]) {
    if (!s.is_array())
      throw std::invalid_argument("hitting set instance: sets must be arrays");
    std::set<std::string> member;
    for (const json& e : s) {
      if (!e.is_string())
        throw std::invalid_argument(
            "hitting set instance: elements must be strings");
      member.insert(e.get<std::string>());
    }
    inst.sets.push_back(std::move(member));
  }
  return inst;
}

}  // namespace aspbd
