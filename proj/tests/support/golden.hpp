#ifndef QPROB_TESTS_GOLDEN_HPP
#define QPROB_TESTS_GOLDEN_HPP

#include <string>
#include <vector>

namespace qprob::testing {

struct GoldenCase {
  std::string name;
  std::string args;  // CLI arguments; "{input}" expands to the fixture path
  int expected_exit = 0;
};

struct GoldenOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Reads <dir>/manifest.tsv (name, args, exit). Fixtures live at
// <dir>/fixtures/<name>.txt, expected stdout at <dir>/golden/<name>.out.
std::vector<GoldenCase> load_manifest(const std::string& dir);

// Runs every case against the CLI binary. update=true rewrites the golden
// outputs instead of comparing.
std::vector<GoldenOutcome> run_golden_cases(const std::string& cli_path, const std::string& dir,
                                            bool update);

// parse -> serialize -> parse must reproduce the same document for every
// fixture; returns the names of fixtures where it does not.
std::vector<std::string> roundtrip_failures(const std::string& dir);

}  // namespace qprob::testing

#endif  // QPROB_TESTS_GOLDEN_HPP
