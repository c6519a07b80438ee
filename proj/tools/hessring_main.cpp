#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hessring/cli_commands.hpp"
#include "hessring/errors.hpp"

using namespace hessring;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for Hessenberg-variety cohomology presentations"};
  app.set_help_flag("--help", "print help");  // frees --h for Hessenberg functions
  app.require_subcommand(1);

  int n = 0;
  std::string h_csv, suite = "all", format = "text", out_path, table_kind;
  int max_degree = -1, jobs = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--n", n, "size n (derived from --h when omitted)");
    cmd->add_option("--h", h_csv, "Hessenberg function, e.g. 3,3,4,5,6,6");
    cmd->add_option("--format", format, "text | json | csv");
    cmd->add_option("--max-degree", max_degree, "cap the graded sweeps at this even degree");
    cmd->add_option("--jobs", jobs, "worker threads (default: hardware)");
    cmd->add_option("--out", out_path, "write output to this file instead of stdout");
  };

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  verify->add_option("--suite", suite,
                     "all | fixed-points | presentation | hilbert | gkm | symfunc | appendix");

  CLI::App* table = app.add_subcommand("table", "emit deterministic tables");
  add_common(table);
  table->add_option("kind", table_kind, "hilbert | betti | fixed-points | schur | generators")
      ->required();

  CLI::App* xg = app.add_subcommand("xg", "chromatic quasisymmetric Schur expansion");
  add_common(xg);

  CLI::App* gkm = app.add_subcommand("gkm-export", "GKM moment graph as JSON");
  add_common(gkm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage/help
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  CliConfig cfg;
  if (n > 0) cfg.n = n;
  cfg.suite = suite;
  cfg.format = format;
  if (max_degree >= 0) cfg.max_degree = max_degree;
  cfg.jobs = jobs;

  try {
    if (!h_csv.empty()) cfg.h = HessFn::parse(h_csv);
  } catch (const std::exception& e) {
    std::cerr << "invalid --h: " << e.what() << "\n";
    return 2;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open " << out_path << "\n";
      return 2;
    }
    out = &file;
  }

  try {
    int code = 2;
    if (verify->parsed()) code = cmd_verify(cfg, *out);
    else if (table->parsed()) code = cmd_table(cfg, table_kind, *out);
    else if (xg->parsed()) code = cmd_xg(cfg, *out);
    else if (gkm->parsed()) code = cmd_gkm_export(cfg, *out);
    if (code == 2) std::cerr << "usage error (see --help)\n";
    return code;
  } catch (const guard_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
