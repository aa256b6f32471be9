// The nine target classes: membership tests with checkable witnesses, full
// classification, and the class inclusion lattice.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aspbd/cycles.hpp"
#include "aspbd/program.hpp"

namespace aspbd {

enum class ClassId {
  horn,
  no_c,     // no cycle in U_P
  no_dc,    // no directed cycle in D_P
  no_bc,    // no bad cycle in U_P
  no_dbc,   // no directed bad cycle in D_P
  no_ec,    // no even cycle in U_P
  no_dec,   // no directed even cycle in D_P
  no_bec,   // no bad even cycle in U_P
  no_dbec,  // no directed bad even cycle in D_P
};

const std::vector<ClassId>& all_classes();

// Lowercase hyphenated names: "horn", "no-c", ..., "no-dbec".
std::string class_name(ClassId c);
std::optional<ClassId> class_from_name(std::string_view name);

// member=false comes with a witness: a forbidden cycle, or a rule breaking
// the structural requirement (non-normal, or non-Horn for class horn).
// unknown=true means the exhaustive directed parity search hit its budget
// before finding a cycle; member is then meaningless.
struct MembershipVerdict {
  ClassId target = ClassId::horn;
  bool member = false;
  bool unknown = false;
  std::optional<CycleWitness> cycle;
  std::optional<Rule> offending_rule;
};

MembershipVerdict is_member(const Program& p, ClassId c,
                            const CycleLimits& limits = {});

struct Classification {
  std::set<ClassId> members;
  std::set<ClassId> unknown;
};
Classification classify(const Program& p, const CycleLimits& limits = {});

// Reflexive-transitive closure of the static inclusion arrows; true when
// every program in c1 belongs to c2.
bool lattice_subset(ClassId c1, ClassId c2);

}  // namespace aspbd
