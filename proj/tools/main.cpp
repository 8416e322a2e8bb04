#include "fewroots/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_system_options(CLI::App* cmd, fewroots::RunConfig& cfg, std::string& path) {
  cmd->add_option("input", path, "System file (JSON or text); standard input when omitted");
  cmd->add_option("--prime", cfg.prime, "Prime p");
}

}  // namespace

int main(int argc, char** argv) {
  using fewroots::Command;
  CLI::App app{"Root bounds for sparse polynomial systems over p-adic and number fields"};
  app.require_subcommand(1);

  fewroots::RunConfig cfg;
  std::string path;
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--precision", cfg.precision, "Working precision in decimal digits");
  app.add_option("--seed", cfg.seed, "Seed for randomized runs");

  auto* bound = app.add_subcommand("bound", "Closed-form root bounds for a system");
  add_system_options(bound, cfg, path);
  bound->add_option("--d", cfg.d, "Field degree");
  bound->add_option("--e", cfg.e, "Ramification degree (local)");
  bound->add_option("--f", cfg.f, "Residue degree, q = p^f (local)");
  bound->add_option("--delta", cfg.delta, "Root degree bound (global)");
  bound->add_flag("--global", cfg.global, "Number-field bounds instead of p-adic");
  bound->add_flag("--affine", cfg.affine, "Also report roots with zero coordinates");

  auto* facets = app.add_subcommand("facets", "Lower facets and per-valuation Smirnov bounds");
  add_system_options(facets, cfg, path);

  auto* verify = app.add_subcommand("verify", "Compare exact oracle counts with the bounds");
  add_system_options(verify, cfg, path);
  verify->add_option("--height-cap", cfg.height_cap, "Height cap for the rational search");
  verify->add_option("--random", cfg.random_instances, "Run this many seeded random trinomials instead");

  auto* lenstra = app.add_subcommand("lenstra", "d_m(t) and binomial interpolation coefficients");
  lenstra->require_subcommand(1);
  auto* dm = lenstra->add_subcommand("dm", "d_m(t)");
  dm->add_option("--m", cfg.lenstra_m)->required();
  dm->add_option("--t", cfg.lenstra_t)->required();
  auto* gam = lenstra->add_subcommand("gamma", "coefficients of (a choose t) in the basis (a choose j)");
  gam->add_option("--set", cfg.lenstra_set, "Distinct integers A")->required()->delimiter(',');
  gam->add_option("--t", cfg.lenstra_t)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : fewroots::kExitInvalid;
  }

  if (bound->parsed()) cfg.command = Command::kBound;
  if (facets->parsed()) cfg.command = Command::kFacets;
  if (verify->parsed()) cfg.command = Command::kVerify;
  if (dm->parsed()) cfg.command = Command::kLenstraDm;
  if (gam->parsed()) cfg.command = Command::kLenstraGamma;
  cfg.format = format == "text" ? fewroots::OutputFormat::kText : fewroots::OutputFormat::kJson;

  bool needs_input = cfg.command == Command::kBound || cfg.command == Command::kFacets ||
                     (cfg.command == Command::kVerify && cfg.random_instances == 0);
  if (needs_input) {
    try {
      cfg.input = read_input(path);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return fewroots::kExitInvalid;
    }
  }

  fewroots::CommandResult result = fewroots::run(cfg);
  std::cout << fewroots::render(result, cfg.format);
  return result.exit_code;
}
