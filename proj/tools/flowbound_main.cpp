#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "flowbound/cli.hpp"

namespace fb = flowbound;

int main(int argc, char** argv) {
  CLI::App app{"flowbound: certified a-priori bounds for steady channel flow past "
               "an obstacle"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::string grad_bound = "rough";

  auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* opt = sub->add_option("--config", config_path, "path to the run config");
    if (config_required) opt->required();
    sub->add_option("--out", out_path, "also write the report to this file");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--grad-bound", grad_bound,
                    "gradient bound feeding the force estimates")
        ->check(CLI::IsMember({"rough", "sharp"}));
  };

  auto* certify = app.add_subcommand("certify", "evaluate the well-posedness certificate");
  add_common(certify, true);
  auto* forces = app.add_subcommand("forces", "drag/lift upper bounds (cubic box)");
  add_common(forces, true);
  auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  add_common(sweep, true);
  auto* verify = app.add_subcommand("verify", "run the numerical oracle suite");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // Usage problems map onto the input-error exit code; --help stays 0.
    return code == 0 ? 0 : fb::cli::kExitInputError;
  }

  try {
    fb::cli::OutputOptions opts;
    opts.out_path = out_path;
    opts.grad_bound = grad_bound == "sharp" ? fb::forces::GradBoundKind::Sharp
                                            : fb::forces::GradBoundKind::Rough;
    if (verify->parsed()) return fb::cli::cmd_verify(std::cout);

    const fb::config::RunConfig cfg = fb::config::parse_config_file(config_path);
    if (certify->parsed()) return fb::cli::cmd_certify(cfg, opts, std::cout);
    if (forces->parsed()) return fb::cli::cmd_forces(cfg, opts, std::cout);
    if (sweep->parsed()) return fb::cli::cmd_sweep(cfg, opts, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fb::cli::kExitInputError;
  }
  return fb::cli::kExitInputError;
}
