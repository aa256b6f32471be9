// Well-founded models, answer sets of enumerable-class programs, backdoor
// candidate sets, and the full solve / query pipeline.
#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "aspbd/backdoor.hpp"
#include "aspbd/classes.hpp"
#include "aspbd/program.hpp"

namespace aspbd {

struct ThreeValuedModel {
  AtomSet true_atoms;
  AtomSet false_atoms;
  AtomSet undefined;  // at(P) minus the other two

  bool total() const { return undefined.empty(); }
};

// Alternating fixpoint over the non-constraint rules: with
// step(I) = least model of the reduct of P under I, true_atoms is the least
// fixed point of step∘step from the empty set and false_atoms is at(P)
// minus its greatest fixed point from at(P). Constraints are ignored here
// and enforced by the callers' final answer-set checks. Throws
// std::invalid_argument on disjunctive rules.
ThreeValuedModel well_founded_model(const Program& p);

// Answer sets of a program in one of the nine classes (all of which admit
// at most one answer set): {T} when the well-founded true set T is an
// answer set of p, constraints included, else the empty set. When
// check_membership is set, membership of p in c is verified first and
// std::invalid_argument is thrown on failure or an unknown verdict.
std::set<Interpretation> answer_sets_enumerable(
    const Program& p, ClassId c, bool check_membership = false,
    const CycleLimits& limits = {});

// One entry of AS(P, X): the assignment, the answer set of its reduct, and
// their union.
struct Candidate {
  Assignment tau;
  Interpretation reduct_answer_set;
  Interpretation combined;  // reduct_answer_set plus tau's true atoms
};

struct CandidateSet {
  std::vector<Candidate> candidates;  // in assignment order
  std::set<Interpretation> distinct;  // deduplicated combined view
};

// AS(P, X) over all assignments of X cap at(P). With verify_backdoor set,
// X is first verified as a strong backdoor for c and std::runtime_error is
// thrown when verification fails.
CandidateSet candidate_answer_sets(const Program& p, const AtomSet& x,
                                   ClassId c, bool verify_backdoor = true,
                                   const CycleLimits& limits = {});

struct SolveResult {
  AtomSet backdoor;  // the X that generated the candidates
  std::optional<BackdoorReport> verification;
  CandidateSet candidates;
  std::set<Interpretation> answer_sets;  // candidates that verify
};

// Candidate generation followed by the answer-set filter; the result is
// exactly AS(P) whenever X is a strong backdoor for c.
SolveResult solve_with_backdoor(const Program& p, ClassId c, const AtomSet& x,
                                bool verify = true,
                                const CycleLimits& limits = {});

// Detects a strong backdoor of size at most k first; throws
// std::runtime_error when none exists.
SolveResult solve_auto(const Program& p, ClassId c, int k,
                       const CycleLimits& limits = {});

enum class QueryKind { consistency, credulous, skeptical, count, enumerate };

struct QueryAnswer {
  QueryKind kind = QueryKind::consistency;
  bool truth = false;            // consistency / credulous / skeptical
  std::size_t count = 0;         // count
  std::set<Interpretation> sets;  // enumerate
};

// Derives the query answer from a computed answer-set collection.
// Credulous and skeptical queries need an atom of at(P); skeptical
// quantification over zero answer sets is true.
QueryAnswer query(const Program& p, const std::set<Interpretation>& answer_sets,
                  QueryKind kind, const std::optional<Atom>& atom);

}  // namespace aspbd
