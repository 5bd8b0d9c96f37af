#ifndef MFK_COMMANDS_HPP
#define MFK_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mfk/ring.hpp"

namespace mfk {

// Exit codes: 0 success, 1 input error, 2 validation failure, 3 resource cap.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;

// Runs one CLI invocation.  `args` is argv without the program name; global
// flags (--json, --field-char, --order, --max-steps, --max-resolution) may
// appear anywhere.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

} // namespace mfk

#endif
