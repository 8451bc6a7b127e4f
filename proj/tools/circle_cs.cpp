// circle-cs: command-line front end of the circle coherent-state library.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "circlecs/cli.hpp"

namespace {

int dispatch(const circlecs::RunConfig& cfg) {
  try {
    if (cfg.output_path == "-") return circlecs::run_command(cfg, std::cout);
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
      std::cerr << "circle-cs: cannot open output file '" << cfg.output_path
                << "'\n";
      return 1;
    }
    const int rc = circlecs::run_command(cfg, file);
    file.flush();
    if (!file) {
      std::cerr << "circle-cs: write failure on '" << cfg.output_path << "'\n";
      return 1;
    }
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "circle-cs: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent states on the circle: figures, constants, verification"};
  app.require_subcommand(1);

  double theta = 0.0;
  int grid_steps = 61;
  int k_cutoff = 50;
  int quad_order = 512;
  int m_minus_n = 0;
  std::string out_path = "-";

  app.add_option("--theta", theta, "flux parameter in [0,1)")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--grid-steps", grid_steps, "samples per grid axis (>= 2)");
  app.add_option("--k-cutoff", k_cutoff, "channel cutoff of the completeness sum");
  app.add_option("--quad-order", quad_order, "Gauss-Legendre order (>= 64)");
  app.add_option("--m-minus-n", m_minus_n, "momentum difference of the overlap grid");
  app.add_option("--out", out_path, "output path, '-' for stdout");

  using Cmd = circlecs::RunConfig::Command;
  std::map<std::string, std::pair<Cmd, const char*>> names{
      {"constants", {Cmd::constants, "golden values with reference digits"}},
      {"overlap-grid",
       {Cmd::overlap_grid, "CSV overlap surface over [0,pi)^2 at fixed m-n"}},
      {"uncertainty-curve",
       {Cmd::uncertainty_curve, "CSV dispersions and uncertainty product"}},
      {"expectations",
       {Cmd::expectations, "CSV expectation report sweep over alpha"}},
      {"verify-rou",
       {Cmd::verify_rou, "completeness residual report at one flux"}},
      {"verify-all",
       {Cmd::verify_all, "all verification suites; exit 0 iff green"}},
  };
  for (auto& [name, cmd_desc] : names) {
    const auto cmd = cmd_desc.first;
    auto* sub = app.add_subcommand(name, cmd_desc.second);
    sub->fallthrough();  // shared flags may follow the subcommand
    sub->callback([&, cmd] {
      circlecs::RunConfig cfg;
      cfg.command = cmd;
      cfg.theta = circlecs::FluxParameter{theta};
      cfg.grid_steps = grid_steps;
      cfg.k_cutoff = k_cutoff;
      cfg.quad_order = quad_order;
      cfg.m_minus_n = m_minus_n;
      cfg.output_path = out_path;
      std::exit(dispatch(cfg));
    });
  }

  CLI11_PARSE(app, argc, argv);
  return 0;
}
