// Command-line frontend. Exit codes: 0 = success, 1 = definitive semantic
// negative (no backdoor exists, verification failed, inconsistent program,
// false query answer), 2 = usage errors, unreadable or unparsable input,
// and aborted computations whose outcome would be unreliable.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aspbd {

// args excludes the program name; payloads go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace aspbd
