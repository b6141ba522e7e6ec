#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "regcat/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of generalized inverses, regular cocycles and their algebraic structures"};
  app.set_version_flag("--version", "regcat 0.1.0");

  std::string command, path, report = "text";
  bool stop = false;
  app.add_option("command", command, "One of: ginverse, check-chain, verify-cocycle, "
                                     "obstruction-degree, lift, cocycle-morphism, tensor, dual, "
                                     "pairing, functor-check, algebra-check, hopf-check, "
                                     "module-check, tqft-check")
      ->required()
      ->check(CLI::IsMember(regcat::cli::command_names()));
  app.add_option("scenario", path, "Scenario file (JSON)")->required();
  app.add_option("--report", report, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--stop-on-first-failure", stop, "Stop reporting after the first failed check");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  regcat::cli::Options options;
  options.report = report == "json" ? regcat::cli::ReportFormat::json : regcat::cli::ReportFormat::text;
  options.stop_on_first_failure = stop;
  return regcat::cli::run(command, path, options, std::cout, std::cerr);
}
