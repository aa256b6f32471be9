// Truth-assignment reducts, atom deletion, and verification / detection of
// strong and deletion backdoors into a target class.
#pragma once

#include <optional>

#include "aspbd/classes.hpp"
#include "aspbd/program.hpp"

namespace aspbd {

enum class BackdoorMode { strong, deletion };

struct BackdoorReport {
  BackdoorMode mode = BackdoorMode::strong;
  ClassId target = ClassId::horn;
  AtomSet atoms;  // the candidate X as given
  bool ok = false;
  bool unknown = false;  // a membership check hit its search budget
  // present when ok is false: the first failing assignment (strong mode
  // only) and the membership verdict that rejected the reduct
  std::optional<Assignment> failing_assignment;
  std::optional<MembershipVerdict> failure;
};

// Reduct of p under tau, domain X = tau's atoms: drop rules whose head
// meets tau^-1(1) or whose non-empty head lies inside X; drop rules with a
// positive body atom set false or a negative body atom set true; then erase
// every occurrence of an X atom. Empty heads survive the head-containment
// clause so that the empty assignment leaves p unchanged.
Program truth_assignment_reduct(const Program& p, const Assignment& tau);

// P - X: erase every occurrence of an X atom from every rule; rules that
// become completely empty are kept as the unsatisfiable empty rule.
Program delete_atoms(const Program& p, const AtomSet& x);

// X is a strong backdoor iff every truth assignment over X cap at(P) gives
// a reduct inside the target class; assignments are visited in binary
// counting order over the sorted effective domain and the first failure is
// reported.
BackdoorReport is_strong_backdoor(const Program& p, const AtomSet& x,
                                  ClassId c, const CycleLimits& limits = {});

// X is a deletion backdoor iff P - X is inside the target class.
BackdoorReport is_deletion_backdoor(const Program& p, const AtomSet& x,
                                    ClassId c, const CycleLimits& limits = {});

// Smallest backdoor of size <= k, scanning subsets of at(P) by size and
// then lexicographically; returns the first verified subset, or nullopt.
// Throws std::runtime_error when a membership check comes back unknown, so
// an exhausted search budget can never masquerade as "none exists".
std::optional<BackdoorReport> detect_backdoor(const Program& p, ClassId c,
                                              int k, BackdoorMode mode,
                                              const CycleLimits& limits = {});

}  // namespace aspbd
