#include "aspbd/evaluator.hpp"

#include <algorithm>
#include <stdexcept>

namespace aspbd {

namespace {

// Least model of the reduct under I; total on normal programs because
// constraints have been removed from `rules` by the caller.
Interpretation wfm_step(const Program& rules, const Interpretation& i) {
  const auto lm = least_model(gl_reduct(rules, i));
  if (!lm)
    throw std::logic_error("wfm_step: constraint survived in rule subset");
  return *lm;
}

}  // namespace

ThreeValuedModel well_founded_model(const Program& p) {
  for (const Rule& r : p.rules)
    if (!r.is_normal())
      throw std::invalid_argument(
          "well_founded_model: disjunctive rule present");
  const Program rules = Program::from_rules(p.non_constraints());
  const AtomSet all = p.atoms();

  // step is antitone, so step∘step is monotone from both ends
  Interpretation lo;          // least fixed point iterate
  Interpretation hi = all;    // greatest fixed point iterate
  while (true) {
    Interpretation next_lo = wfm_step(rules, wfm_step(rules, lo));
    Interpretation next_hi = wfm_step(rules, wfm_step(rules, hi));
    if (next_lo == lo && next_hi == hi) break;
    lo = std::move(next_lo);
    hi = std::move(next_hi);
  }

  ThreeValuedModel m;
  m.true_atoms = lo;
  for (const Atom& a : all) {
    if (m.true_atoms.count(a)) continue;
    if (hi.count(a))
      m.undefined.insert(a);
    else
      m.false_atoms.insert(a);
  }
  return m;
}

std::set<Interpretation> answer_sets_enumerable(const Program& p, ClassId c,
                                                bool check_membership,
                                                const CycleLimits& limits) {
  if (check_membership) {
    const MembershipVerdict v = is_member(p, c, limits);
    if (v.unknown)
      throw std::invalid_argument(
          "answer_sets_enumerable: membership verdict unknown for class " +
          class_name(c));
    if (!v.member)
      throw std::invalid_argument(
          "answer_sets_enumerable: program is not in class " + class_name(c));
  }
  const ThreeValuedModel wfm = well_founded_model(p);
  if (is_answer_set(p, wfm.true_atoms)) return {wfm.true_atoms};
  return {};
}

CandidateSet candidate_answer_sets(const Program& p, const AtomSet& x,
                                   ClassId c, bool verify_backdoor,
                                   const CycleLimits& limits) {
  if (verify_backdoor) {
    const BackdoorReport report = is_strong_backdoor(p, x, c, limits);
    if (!report.ok)
      throw std::runtime_error(
          report.unknown
              ? "candidate_answer_sets: backdoor verification inconclusive"
              : "candidate_answer_sets: X is not a strong backdoor for " +
                    class_name(c));
  }

  const AtomSet in_program = p.atoms();
  AtomSet domain;
  for (const Atom& a : x)
    if (in_program.count(a)) domain.insert(a);

  CandidateSet out;
  for_each_assignment(domain, [&](const Assignment& tau) {
    const Program reduct = truth_assignment_reduct(p, tau);
    for (const Interpretation& m :
         answer_sets_enumerable(reduct, c, false, limits)) {
      Candidate cand;
      cand.tau = tau;
      cand.reduct_answer_set = m;
      cand.combined = m;
      for (const Atom& a : tau.true_atoms()) cand.combined.insert(a);
      out.distinct.insert(cand.combined);
      out.candidates.push_back(std::move(cand));
    }
    return true;
  });
  return out;
}

SolveResult solve_with_backdoor(const Program& p, ClassId c, const AtomSet& x,
                                bool verify, const CycleLimits& limits) {
  SolveResult result;
  result.backdoor = x;
  if (verify) {
    BackdoorReport report = is_strong_backdoor(p, x, c, limits);
    if (!report.ok)
      throw std::runtime_error(
          report.unknown ? "solve: backdoor verification inconclusive"
                         : "solve: X is not a strong backdoor for " +
                               class_name(c));
    result.verification = std::move(report);
  }
  result.candidates = candidate_answer_sets(p, x, c, false, limits);
  for (const Interpretation& m : result.candidates.distinct)
    if (is_answer_set(p, m)) result.answer_sets.insert(m);
  return result;
}

SolveResult solve_auto(const Program& p, ClassId c, int k,
                       const CycleLimits& limits) {
  auto found = detect_backdoor(p, c, k, BackdoorMode::strong, limits);
  if (!found)
    throw std::runtime_error("solve: no strong " + class_name(c) +
                             " backdoor of size at most " + std::to_string(k));
  SolveResult result = solve_with_backdoor(p, c, found->atoms,
                                           /*verify=*/false, limits);
  result.verification = std::move(*found);
  return result;
}

QueryAnswer query(const Program& p, const std::set<Interpretation>& answer_sets,
                  QueryKind kind, const std::optional<Atom>& atom) {
  QueryAnswer answer;
  answer.kind = kind;
  switch (kind) {
    case QueryKind::consistency:
      answer.truth = !answer_sets.empty();
      return answer;
    case QueryKind::credulous:
    case QueryKind::skeptical: {
      if (!atom) throw std::invalid_argument("query: atom required");
      if (!p.atoms().count(*atom))
        throw std::invalid_argument("query: atom not in the program: " +
                                    *atom);
      const auto contains = [&](const Interpretation& m) {
        return m.count(*atom) > 0;
      };
      answer.truth = kind == QueryKind::credulous
                         ? std::any_of(answer_sets.begin(), answer_sets.end(),
                                       contains)
                         : std::all_of(answer_sets.begin(), answer_sets.end(),
                                       contains);
      return answer;
    }
    case QueryKind::count:
      answer.count = answer_sets.size();
      return answer;
    case QueryKind::enumerate:
      answer.sets = answer_sets;
      return answer;
  }
  throw std::logic_error("query: unhandled kind");
}

}  // namespace aspbd
