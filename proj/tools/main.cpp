#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qprob/runner.hpp"

// Batch front end: every subcommand reads one document (file path or "-"
// for stdin) and prints a plain-text report. Exit 0 = all checks passed /
// construction succeeded, 1 = a check failed or not representable, 2 =
// usage, parse or precondition error.
int main(int argc, char** argv) {
  CLI::App app{"qualitative probability toolkit"};
  app.require_subcommand(1);

  qprob::Invocation inv;
  std::string input_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input_path, "input document path, or - for stdin")->required();
    cmd->add_flag("--porcelain", inv.porcelain, "tab-separated machine-readable output");
  };

  CLI::App* check = app.add_subcommand("check", "run an axiom suite");
  check->add_option("--suite", inv.suite, "family | definetti | structure | kolmogorov | inflated")
      ->required()
      ->check(CLI::IsMember({"family", "definetti", "structure", "kolmogorov", "inflated"}));
  add_common(check);

  CLI::App* classify = app.add_subcommand("classify", "rigid/complete/total/elementary flags");
  add_common(classify);

  CLI::App* induce = app.add_subcommand("induce", "print the induced comparative relation");
  add_common(induce);

  CLI::App* represent = app.add_subcommand("represent", "construct a representation");
  represent->add_option("--method", inv.method, "deflate | elementary | lp")
      ->required()
      ->check(CLI::IsMember({"deflate", "elementary", "lp"}));
  represent->add_option("--scaling", inv.scaling, "standard | doubled (elementary only)")
      ->check(CLI::IsMember({"standard", "doubled"}));
  add_common(represent);

  CLI::App* decide = app.add_subcommand("decide", "decide additive representability");
  add_common(decide);

  CLI::App* pca = app.add_subcommand("pca", "positive complementarity experiment");
  add_common(pca);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << '\n';
    return 2;
  }

  for (auto* cmd : {check, classify, induce, represent, decide, pca}) {
    if (cmd->parsed()) {
      inv.command = cmd->get_name();
      break;
    }
  }
  return qprob::run_command_on_file(inv, input_path, std::cout);
}
