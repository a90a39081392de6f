#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdg {

/// Entry point behind the `codegree` binary. Returns the process exit status:
/// 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdg
