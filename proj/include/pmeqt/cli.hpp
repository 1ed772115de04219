#ifndef PMEQT_CLI_HPP
#define PMEQT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pmeqt::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kSolverError = 2,
  kInternalError = 3,
};

// `args` excludes the program name. Results go to `out`; failures write a
// message line plus a JSON error document to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmeqt::cli

#endif
