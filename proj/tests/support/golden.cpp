#include "golden.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "qprob/document.hpp"
#include "qprob/errors.hpp"

namespace qprob::testing {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

// Runs the command through the shell, capturing stdout; stderr is dropped.
std::pair<std::string, int> capture(const std::string& command) {
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {out, code};
}

}  // namespace

std::vector<GoldenCase> load_manifest(const std::string& dir) {
  std::ifstream in(dir + "/manifest.tsv");
  if (!in) throw std::runtime_error("cannot open manifest in " + dir);
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    GoldenCase c;
    std::string exit_text;
    if (!std::getline(ss, c.name, '\t') || !std::getline(ss, c.args, '\t') ||
        !std::getline(ss, exit_text, '\t')) {
      throw std::runtime_error("malformed manifest line: " + line);
    }
    c.expected_exit = std::stoi(exit_text);
    cases.push_back(std::move(c));
  }
  return cases;
}

std::vector<GoldenOutcome> run_golden_cases(const std::string& cli_path, const std::string& dir,
                                            bool update) {
  std::vector<GoldenOutcome> outcomes;
  for (const auto& c : load_manifest(dir)) {
    GoldenOutcome o;
    o.name = c.name;
    const std::string fixture = dir + "/fixtures/" + c.name + ".txt";
    const std::string golden = dir + "/golden/" + c.name + ".out";
    std::string args = c.args;
    if (args.find("{stdin}") != std::string::npos) {
      args = replace_all(args, "{stdin}", "-");
      args += " < " + fixture;
    } else {
      args = replace_all(args, "{input}", fixture);
    }
    const auto [stdout_text, exit_code] = capture(cli_path + " " + args);
    if (update) {
      std::ofstream out(golden, std::ios::binary);
      out << stdout_text;
      o.passed = true;
      o.detail = "updated (exit " + std::to_string(exit_code) + ")";
      if (exit_code != c.expected_exit) {
        o.passed = false;
        o.detail = "exit " + std::to_string(exit_code) + " != manifest " +
                   std::to_string(c.expected_exit);
      }
      outcomes.push_back(std::move(o));
      continue;
    }
    if (exit_code != c.expected_exit) {
      o.detail = "exit " + std::to_string(exit_code) + " != " + std::to_string(c.expected_exit);
    } else if (read_file(golden) != stdout_text) {
      o.detail = "stdout differs from golden";
    } else {
      o.passed = true;
    }
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

std::vector<std::string> roundtrip_failures(const std::string& dir) {
  std::vector<std::string> failures;
  for (const auto& c : load_manifest(dir)) {
    const std::string fixture = dir + "/fixtures/" + c.name + ".txt";
    const std::string text = read_file(fixture);
    try {
      const Document d = parse_document(text);
      const std::string canon = serialize_document(d);
      if (!(parse_document(canon) == d)) failures.push_back(c.name);
      if (serialize_document(parse_document(canon)) != canon) failures.push_back(c.name + " (idempotence)");
    } catch (const ParseError&) {
      // fixtures that exist to exercise parse errors are skipped here
      continue;
    }
  }
  return failures;
}

}  // namespace qprob::testing
