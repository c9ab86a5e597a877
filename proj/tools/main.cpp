// umlsem: check, enumerate and transform static class diagrams at a finite
// scope.

#include <iostream>

#include "CLI11.hpp"
#include "umlsem/cli.h"

int main(int argc, char ** argv)
{
  using namespace umlsem;

  CLI::App app{"Bounded semantics and transformation checker for class diagrams"};
  std::string command;
  cli::RunConfig config;
  std::string mode = "strict-paper";
  std::string format = "text";
  std::string strategy = "meta";

  app.add_option("command", command,
                 "check | enumerate | satisfy | deduce | refine | prove | "
                 "verify-rule | apply")
      ->required();
  app.add_option("inputs", config.inputs, "input files (.smdl, .snap, .prf)");
  app.add_option("--objects", config.scope.objects, "object identity pool size")
      ->capture_default_str();
  app.add_option("--data", config.scope.data, "number of distinct data values")
      ->capture_default_str();
  app.add_option("--mode", mode, "link-target semantics")
      ->check(CLI::IsMember({"strict-paper", "typed"}))
      ->capture_default_str();
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--strategy", strategy, "proof step justification (prove only)")
      ->check(CLI::IsMember({"meta", "bounded"}))
      ->capture_default_str();
  app.add_option("--max-candidates", config.enumeration.max_candidates,
                 "refuse scopes with more raw candidate snapshots")
      ->capture_default_str();
  app.add_option("--workers", config.enumeration.workers,
                 "enumeration threads (output is identical for any count)")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e);
  } catch (const CLI::ParseError & e) {
    app.exit(e);
    return cli::kExitInputError;
  }

  const auto cmd = cli::parse_command(command);
  if (!cmd) {
    std::cerr << "unknown command '" << command << "'\n" << app.help();
    return cli::kExitInputError;
  }
  config.command = *cmd;
  config.mode = mode == "typed" ? Mode::kTyped : Mode::kStrictPaper;
  config.format = format == "json" ? cli::Format::kJson : cli::Format::kText;
  config.strategy = strategy == "bounded" ? Strategy::kBounded : Strategy::kMeta;
  return cli::run(config, std::cout, std::cerr);
}
