// JSON views of the library types as emitted by the CLI. Objects use
// lexicographically sorted keys and sets serialize as sorted arrays, so
// payloads are byte-stable.
#pragma once

#include "json.hpp"

#include "aspbd/backdoor.hpp"
#include "aspbd/classes.hpp"
#include "aspbd/cycles.hpp"
#include "aspbd/depgraph.hpp"
#include "aspbd/evaluator.hpp"
#include "aspbd/generators.hpp"
#include "aspbd/program.hpp"

namespace aspbd {

nlohmann::json witness_to_json(const CycleWitness& w);
nlohmann::json verdict_to_json(const MembershipVerdict& v);
nlohmann::json classification_to_json(const Classification& c);

nlohmann::json assignment_to_json(const Assignment& tau);
nlohmann::json report_to_json(const BackdoorReport& r);

nlohmann::json solve_to_json(const SolveResult& r);
nlohmann::json query_to_json(const QueryAnswer& a);

nlohmann::json graph_to_json(const SignedDepGraph& g);
nlohmann::json graph_to_json(const ExpandedUndirectedGraph& g);
nlohmann::json graph_to_json(const UnlabeledGraph& g);

nlohmann::json instance_to_json(const HittingSetInstance& inst);
// Throws std::invalid_argument when the document is not
// {"sets": [[elements...]...], "k": integer}.
HittingSetInstance instance_from_json(const nlohmann::json& doc);

}  // namespace aspbd
