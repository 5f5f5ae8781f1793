// Command-line front end: rank, analyze, fit, extend, selfcheck.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "qhankel/cli.hpp"
#include "qhankel/error.hpp"

namespace cli = qhankel::cli;

int main(int argc, char** argv) {
  CLI::App app{"Left/right ranks of quaternion matrices, Hankel rank analysis and quaternion recurrences"};
  app.require_subcommand(1);

  std::string file, spec_file, side = "both", regime, output = "text", methods;
  std::size_t order = 1, count = 2;
  cli::Config config;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    auto* opt = sub->add_option("--file,file", file, "input JSON file");
    if (needs_file) opt->required();
    sub->add_option("--regime", regime, "exact|float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--output", output, "text|json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--side", side, "left|right|both")->check(CLI::IsMember({"left", "right", "both"}));
  };

  auto* rank = app.add_subcommand("rank", "left and right rank of a matrix file");
  add_common(rank, true);
  rank->add_option("--tol", config.tol, "numeric rank threshold relative to the largest singular value");
  rank->add_option("--methods", methods, "comma list of elimination,adjoint,real_adjoint,numeric");

  auto* analyze = app.add_subcommand("analyze", "Hankel rank table of a sequence file");
  add_common(analyze, true);

  auto* fit = app.add_subcommand("fit", "fit a one-sided recurrence of a given order");
  add_common(fit, true);
  fit->add_option("--order", order, "recurrence order S")->check(CLI::PositiveNumber);

  auto* extend = app.add_subcommand("extend", "extend a sequence");
  add_common(extend, true);
  extend->add_option("--spec", spec_file, "recurrence JSON; minimal extension when omitted");
  extend->add_option("--count", count, "number of new terms");

  auto* selfcheck = app.add_subcommand("selfcheck", "run the randomized property suites");
  selfcheck->add_option("--regime", regime, "exact|float")->check(CLI::IsMember({"exact", "float"}));
  selfcheck->add_option("--output", output, "text|json")->check(CLI::IsMember({"text", "json"}));
  selfcheck->add_option("--seed", config.seed, "seed for the random sweeps");
  selfcheck->add_option("--scale", config.scale, "multiplier on every sweep size");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!regime.empty()) config.regime = qhankel::parse_regime(regime);
    config.output = output == "json" ? cli::Output::Json : cli::Output::Text;
    config.side = side == "left"    ? cli::SideSelection::Left
                  : side == "right" ? cli::SideSelection::Right
                                    : cli::SideSelection::Both;
    std::size_t pos = 0;
    while (pos < methods.size()) {
      std::size_t comma = methods.find(',', pos);
      if (comma == std::string::npos) comma = methods.size();
      config.methods.push_back(qhankel::parse_rank_method(methods.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  } catch (const qhankel::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInputError;
  }

  if (rank->parsed()) return cli::cmd_rank(file, config, std::cout, std::cerr);
  if (analyze->parsed()) return cli::cmd_analyze(file, config, std::cout, std::cerr);
  if (fit->parsed()) return cli::cmd_fit(file, order, config, std::cout, std::cerr);
  if (extend->parsed()) {
    std::optional<std::filesystem::path> spec;
    if (!spec_file.empty()) spec = spec_file;
    return cli::cmd_extend(file, spec, count, config, std::cout, std::cerr);
  }
  return cli::cmd_selfcheck(config, std::cout, std::cerr);
}
