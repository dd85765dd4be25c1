#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace char2forms {

/// Runs one CLI request. Returns the process exit status: 0 on success,
/// 1 on I/O or parse errors, 2 on domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace char2forms
