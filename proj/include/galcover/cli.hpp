#ifndef GALCOVER_CLI_HPP
#define GALCOVER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace galcover {

// Runs one CLI invocation. `args` excludes the program name. Exit status:
// 0 success, 1 computation error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace galcover

#endif // GALCOVER_CLI_HPP
