#ifndef RAUSZER_CLI_HPP
#define RAUSZER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rauszer {

// Exit contract: 0 success / property holds, 1 property fails (witness
// printed), 2 malformed input or structural error. args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rauszer

#endif
