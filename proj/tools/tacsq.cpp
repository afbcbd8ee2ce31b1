#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tac/cli.hpp"
#include "tac/errors.hpp"

int main(int argc, char** argv) {
  using namespace tac::cli;
  CLI::App app{"Spectra, propagators and spin squeezing of the two-axis twisting Hamiltonian"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  std::string command;
  std::string j_text;
  std::string format_text;
  RunConfig cfg;
  app.add_option("command", command, "charpoly, spectrum, classify, verify, evolve or table1")->required();
  app.add_option("--j", j_text, "Spin quantum number, integer or half-integer (e.g. 2 or 7/2)");
  app.add_option("--chi", cfg.chi, "Coupling strength chi (nonzero)");
  app.add_option("--omega", cfg.omega, "Field strength for H_f (verify only)");
  app.add_option("--t-max", cfg.t_max, "Final time t for evolve; rows report chi*t");
  app.add_option("--steps", cfg.steps, "Number of grid points for evolve (>= 2)");
  app.add_option("--precision", cfg.digits, "Working precision in decimal digits");
  app.add_option("--format", format_text, "json, csv or text");
  app.add_option("--output", cfg.output_path, "Write results to a file instead of stdout");
  app.add_flag("--inject-fault", cfg.inject_fault, "verify: corrupt one chain to exercise failure reporting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    cfg.command = parse_command(command);
    if (!j_text.empty()) cfg.j = tac::HalfInt::parse(j_text);
    if (!format_text.empty()) cfg.format = parse_format(format_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return run(cfg, std::cout, std::cerr);
}
