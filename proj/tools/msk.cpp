// msk: command-line front end for model-surface automorphism computations.

#include <iostream>

#include "CLI11.hpp"
#include "msk/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Automorphisms of CR model surfaces"};
  app.set_version_flag("--version", std::string(msk::version()));
  app.require_subcommand(1);

  msk::RunConfig cfg;
  std::size_t budget = 0;
  bool json = true;
  app.add_option("--budget", budget, "Monomial cap per graded component (overrides MSK_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "JSON output (default and only mode)");
  app.add_flag("-v,--verbose", cfg.verbosity, "Print timing to stderr");

  auto surface_arg = [&](CLI::App* sub) {
    sub->add_option("surface", cfg.inputs, "Surface JSON file or @name of a bundled example")->required();
  };

  auto* validate = app.add_subcommand("validate", "Check the surface invariants");
  surface_arg(validate);

  auto* aut = app.add_subcommand("aut", "Graded algebra of infinitesimal automorphisms");
  surface_arg(aut);
  aut->add_option("--max-weight", cfg.max_weight, "Highest weight to compute");
  aut->add_flag("--basis", cfg.show_basis, "Print basis fields");

  auto* homogeneous = app.add_subcommand("homogeneous", "Exit 0 iff dim g_- equals dim Q");
  surface_arg(homogeneous);

  auto* exp = app.add_subcommand("exp", "Exponentiate a negative-weight field");
  exp->add_option("files", cfg.inputs, "Surface file and field file")->required()->expected(2);

  auto* verify = app.add_subcommand("verify", "Check that a map is an automorphism");
  verify->add_option("files", cfg.inputs, "Surface file and map file")->required()->expected(2);

  auto* decompose = app.add_subcommand("decompose", "Split an automorphism as shift, quasi-linear, higher");
  decompose->add_option("files", cfg.inputs, "Surface file and map file")->required()->expected(2);

  auto* certify = app.add_subcommand("certify", "Check the matrix identities for an automorphism");
  certify->add_option("files", cfg.inputs, "Surface file and map file")->required()->expected(2);
  certify->add_option("--report", cfg.output, "Also write the report to this file");

  auto* bounds = app.add_subcommand("bounds", "Degree bounds for a Blum-Graham type");
  bounds->add_option("--n", cfg.n, "CR dimension")->required();
  bounds->add_option("--k", cfg.k, "Codimension at weight 2");
  bounds->add_option("--K", cfg.K, "Codimension at weight 3");
  bounds->add_option("--blocks", cfg.blocks, "General type as weight:count,...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (budget > 0) cfg.budget = budget;
  cfg.command = app.get_subcommands().front()->get_name();

  const msk::Report report = msk::run(cfg);
  std::cout << report.to_json().dump(2) << "\n";
  if (report.error) std::cerr << "msk: " << *report.error << "\n";
  if (cfg.verbosity > 0) std::cerr << "msk: " << cfg.command << " took " << report.timing_ms << " ms\n";
  return report.exit_code;
}
