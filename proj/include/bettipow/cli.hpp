#ifndef BETTIPOW_CLI_HPP
#define BETTIPOW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bettipow {

/// Full command-line front end. `args` excludes the program name. Returns
/// 0 on success, 1 on domain errors, 2 on usage errors.
int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace bettipow

#endif
