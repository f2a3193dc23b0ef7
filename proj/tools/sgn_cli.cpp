// sgn: batch driver for the dispersive shallow-water solvers.
//
//   sgn run <config>       scenario x solver x parameter sweep, CSV outputs
//   sgn converge <config>  soliton convergence table
//   sgn timing <config>    wall-time comparison (median of repetitions)
//   sgn accept [ids...]    acceptance suite
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "sgn/core.hpp"
#include "sgn/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"1-D dispersive shallow-water solver suite"};
  app.require_subcommand(1);

  std::string config;
  auto* run = app.add_subcommand("run", "run the cases described by a config file");
  run->add_option("config", config, "config file")->required()->check(CLI::ExistingFile);
  auto* converge = app.add_subcommand("converge", "soliton grid-convergence table");
  converge->add_option("config", config, "config file")->required()->check(CLI::ExistingFile);
  auto* timing = app.add_subcommand("timing", "wall-time comparison of the solvers");
  timing->add_option("config", config, "config file")->required()->check(CLI::ExistingFile);
  std::vector<int> only;
  auto* accept = app.add_subcommand("accept", "run the acceptance suite");
  accept->add_option("criteria", only, "criterion numbers (default: all)")
      ->check(CLI::Range(1, 10));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return sgn::io::command_run(config, std::cout);
    if (*converge) return sgn::io::command_converge(config, std::cout);
    if (*timing) return sgn::io::command_timing(config, std::cout);
    if (*accept) {
      const auto outcomes = sgn::acceptance::run(std::cout, only);
      std::cout << "\n";
      return sgn::acceptance::summarize(outcomes, std::cout) == 0 ? 0 : 1;
    }
  } catch (const sgn::Error& e) {
    std::cerr << "error [" << sgn::to_string(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
