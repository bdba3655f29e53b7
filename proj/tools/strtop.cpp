#include <CLI11.hpp>

#include <iostream>

#include "strtop/render.hpp"

namespace {

void add_common(CLI::App* cmd, strtop::RunConfig& cfg) {
  cmd->add_option("--sphere", cfg.sphere, "sphere dimension n (>= 1)")->required();
  cmd->add_option("--max-degree", cfg.max_degree, "largest equivariant degree to compute")
      ->required();
  cmd->add_option("--winding", cfg.winding, "winding cutoff W (required when n = 1)");
  cmd->add_option("--format", cfg.format, "output format: text | json");
  cmd->add_flag("--ascii", cfg.ascii, "ASCII generator labels (gamma_2, a(x)u^2)");
  cmd->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
  cmd->add_flag("-v,--verbose", cfg.verbosity, "more diagnostics");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact string homology and string brackets of spheres"};
  app.require_subcommand(1);

  strtop::RunConfig gcfg, bcfg, vcfg;
  CLI::App* groups = app.add_subcommand("groups", "per-degree equivariant homology table");
  add_common(groups, gcfg);
  CLI::App* bracket = app.add_subcommand("bracket", "string bracket table");
  add_common(bracket, bcfg);
  bracket->add_flag("--all", bcfg.all, "include vanishing pairs with their divisibility witness");
  CLI::App* verify = app.add_subcommand("verify", "cross-check the solver against the closed form");
  add_common(verify, vcfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (groups->parsed()) return strtop::cmd_groups(gcfg, std::cout, std::cerr);
    if (bracket->parsed()) return strtop::cmd_bracket(bcfg, std::cout, std::cerr);
    if (verify->parsed()) return strtop::cmd_verify(vcfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
