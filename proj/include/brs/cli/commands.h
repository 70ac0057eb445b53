//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BRS_CLI_COMMANDS_H_
#define BRS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace brs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// args excludes the program name. Results go to out as JSON lines,
// diagnostics to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace brs

#endif  // BRS_CLI_COMMANDS_H_
