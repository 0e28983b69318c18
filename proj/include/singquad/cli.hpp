#pragma once

#include <optional>
#include <string>
#include <vector>

namespace singquad {

// Parsed command line.  Defaults mirror the documented flag defaults so a
// config constructed here and one parsed from no extra flags agree.
struct RunConfig {
  std::string command;
  std::optional<std::string> fixture;
  std::optional<std::string> integrand_file;
  long n_min = 64;
  long n_max = 65536;
  double grid_factor = 2.0;
  long N = 64;
  std::string format = "text";
  std::optional<std::string> out_path;
  double cmax_factor = 1.25;
  double cmin_frac = 0.5;
  double tol = 1e-9;
  std::optional<double> p;  // unset means the scheme's claimed rate
  long n = 256;
};

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// In-process driver: parses args (without argv[0]), runs the command, and
// captures both streams.  Exit codes: 0 verified, 1 a bound failed to hold,
// 2 unknown fixture or bad input, 3 hypothesis violation, 4 numeric failure.
CliResult run_cli(const std::vector<std::string>& args);

// Thin process-level wrapper around run_cli.
int cli_main(int argc, char** argv);

}  // namespace singquad
