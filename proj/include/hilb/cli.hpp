#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilb {

// Entry point shared by the binary and the in-process golden tests.
// args excludes the program name. Returns the process exit status:
// 0 success (and "member" for membership queries), 1 negative result
// (non-member, failed oracle trial), 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilb
