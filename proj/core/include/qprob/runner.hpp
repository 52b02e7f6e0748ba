#ifndef QPROB_RUNNER_HPP
#define QPROB_RUNNER_HPP

#include <iosfwd>
#include <string>

namespace qprob {

// One batch command over a parsed document. Everything the command prints
// goes to the given stream, byte-stable for golden tests.
struct Invocation {
  std::string command;  // check | classify | induce | represent | decide | pca
  std::string suite;    // check: family | definetti | structure | kolmogorov | inflated
  std::string method;   // represent: deflate | elementary | lp
  std::string scaling = "standard";  // represent elementary: standard | doubled
  bool porcelain = false;
};

// Exit status: 0 every check passed / construction succeeded, 1 a check
// failed or the verdict was not-representable, 2 usage, parse or
// precondition error.
int run_command(const Invocation& inv, std::string_view input, std::ostream& out);

// Convenience for the CLI: reads the file (or stdin when path is "-").
int run_command_on_file(const Invocation& inv, const std::string& path, std::ostream& out);

}  // namespace qprob

#endif  // QPROB_RUNNER_HPP
