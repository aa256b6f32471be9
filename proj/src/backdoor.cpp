#include "aspbd/backdoor.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace aspbd {

namespace {

bool intersects(const AtomSet& a, const AtomSet& b) {
  const AtomSet& small = a.size() <= b.size() ? a : b;
  const AtomSet& large = a.size() <= b.size() ? b : a;
  return std::any_of(small.begin(), small.end(),
                     [&](const Atom& x) { return large.count(x) > 0; });
}

AtomSet without(const AtomSet& s, const AtomSet& drop) {
  AtomSet out;
  for (const Atom& a : s)
    if (!drop.count(a)) out.insert(a);
  return out;
}

AtomSet effective_domain(const Program& p, const AtomSet& x) {
  const AtomSet in_program = p.atoms();
  AtomSet domain;
  for (const Atom& a : x)
    if (in_program.count(a)) domain.insert(a);
  return domain;
}

}  // namespace

Program truth_assignment_reduct(const Program& p, const Assignment& tau) {
  const AtomSet x = tau.domain();
  const AtomSet set_true = tau.true_atoms();
  const AtomSet set_false = tau.false_atoms();
  std::vector<Rule> kept;
  for (const Rule& r : p.rules) {
    if (intersects(r.head, set_true)) continue;
    if (!r.head.empty() && std::includes(x.begin(), x.end(), r.head.begin(),
                                         r.head.end()))
      continue;
    if (intersects(r.pos_body, set_false)) continue;
    if (intersects(r.neg_body, set_true)) continue;
    Rule s;
    s.head = without(r.head, x);
    s.pos_body = without(r.pos_body, x);
    s.neg_body = without(r.neg_body, x);
    kept.push_back(std::move(s));
  }
  return Program::from_rules(std::move(kept));
}

Program delete_atoms(const Program& p, const AtomSet& x) {
  std::vector<Rule> kept;
  for (const Rule& r : p.rules) {
    Rule s;
    s.head = without(r.head, x);
    s.pos_body = without(r.pos_body, x);
    s.neg_body = without(r.neg_body, x);
    kept.push_back(std::move(s));
  }
  return Program::from_rules(std::move(kept));
}

BackdoorReport is_strong_backdoor(const Program& p, const AtomSet& x,
                                  ClassId c, const CycleLimits& limits) {
  BackdoorReport report;
  report.mode = BackdoorMode::strong;
  report.target = c;
  report.atoms = x;
  report.ok = true;

  const AtomSet domain = effective_domain(p, x);
  for_each_assignment(domain, [&](const Assignment& tau) {
    const MembershipVerdict verdict =
        is_member(truth_assignment_reduct(p, tau), c, limits);
    if (verdict.unknown || !verdict.member) {
      report.ok = false;
      report.unknown = verdict.unknown;
      report.failing_assignment = tau;
      report.failure = verdict;
      return false;
    }
    return true;
  });
  return report;
}

BackdoorReport is_deletion_backdoor(const Program& p, const AtomSet& x,
                                    ClassId c, const CycleLimits& limits) {
  BackdoorReport report;
  report.mode = BackdoorMode::deletion;
  report.target = c;
  report.atoms = x;
  const MembershipVerdict verdict = is_member(delete_atoms(p, x), c, limits);
  report.ok = !verdict.unknown && verdict.member;
  report.unknown = verdict.unknown;
  if (!report.ok) report.failure = verdict;
  return report;
}

std::optional<BackdoorReport> detect_backdoor(const Program& p, ClassId c,
                                              int k, BackdoorMode mode,
                                              const CycleLimits& limits) {
  if (k < 0) throw std::invalid_argument("detect_backdoor: negative size");
  const AtomSet atom_set = p.atoms();
  const std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
  const int n = static_cast<int>(atoms.size());

  for (int size = 0; size <= std::min(k, n); ++size) {
    // subsets of the sorted atom list in lexicographic index order
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      AtomSet x;
      for (int i : pick) x.insert(atoms[i]);
      const BackdoorReport report =
          mode == BackdoorMode::strong
              ? is_strong_backdoor(p, x, c, limits)
              : is_deletion_backdoor(p, x, c, limits);
      if (report.unknown)
        throw std::runtime_error(
            "backdoor detection: membership search budget exhausted for "
            "candidate set; result would be unreliable");
      if (report.ok) return report;

      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace aspbd
