// Copyright 2026 The kpath Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KPATH_TOOLS_KPATH_CLI_HPP
#define KPATH_TOOLS_KPATH_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kpath/evolution.hpp"
#include "kpath/transform.hpp"

namespace kpath::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitNumerical = 4;
inline constexpr int kExitIo = 5;

/// Everything one subcommand needs. Every computation is deterministic, so
/// there is no seed; equal configs give byte-identical output.
struct ExperimentConfig {
  std::string command;  // operator | multiplier | evolve | stable | analyze | compare-fractional
  std::optional<TransformSpec> transform;
  std::vector<double> times;
  std::optional<Site> window;  // nullopt: chosen from the limit law
  std::optional<Site> stride;
  InitialCondition initial{{0, 1.0}};
  double tol = 1e-9;       // absolute, per kernel entry or density value
  double rel_tol = 1e-10;  // relative to the predicted peak (analyze, compare-fractional)
  double truncation_tol = 1e-10;

  // operator
  std::string graph = "path";
  std::size_t n = 21;
  std::size_t width = 5;
  std::size_t height = 5;
  std::size_t depth = 3;
  std::string edges_path;

  // multiplier
  int grid = 512;

  // stable
  double alpha = 2.0;
  double gamma = 1.0;
  double xi_min = 0.0;
  double xi_max = 10.0;
  int points = 101;

  // compare-fractional
  double s = 1.5;

  // analyze
  std::string input_path;  // evolve CSV to analyze instead of evolving
  bool force_msd = false;
  bool sup_errors = true;
  std::string csv_prefix;  // writes <prefix>_peak.csv, _fwhm.csv, _sup_error.csv

  std::string output = "-";         // "-" is the out stream
  std::string kernel_output;        // evolve: optional (t, m, value) CSV
  std::size_t threads = 0;          // 0 keeps the default
};

/// Runs a validated config, writing primary output to `out` when
/// config.output is "-". Returns an exit code; errors go to `err` as
/// "kpath: error[<category>]: <message>".
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kpath::cli

#endif  // KPATH_TOOLS_KPATH_CLI_HPP
