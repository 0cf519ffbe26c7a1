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

#include "kpath_cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kpath/analysis.hpp"
#include "kpath/error.hpp"
#include "kpath/graph.hpp"
#include "kpath/io.hpp"
#include "kpath/multiplier.hpp"
#include "kpath/operators.hpp"
#include "kpath/parallel.hpp"
#include "kpath/stable.hpp"

namespace kpath::cli {

namespace {

// Transform flags as typed; resolved into a TransformSpec after parsing.
struct TransformFlags {
  std::string name;
  std::optional<int> k;
  std::optional<double> lambda;
  std::optional<double> z;
  std::optional<double> s;
  std::optional<double> c;
  std::optional<double> a;
};

template <class T>
T require(const std::optional<T>& v, const char* flag, const std::string& family) {
  if (!v) throw ValidationError(std::string(flag) + " is required for --transform " + family);
  return *v;
}

std::optional<TransformSpec> resolve_transform(const TransformFlags& f) {
  if (f.name.empty()) return std::nullopt;
  if (f.name == "k") return TransformSpec::pure_k(require(f.k, "--k", f.name));
  if (f.name == "laplace") return TransformSpec::laplace(require(f.lambda, "--lambda", f.name));
  if (f.name == "factorial") return TransformSpec::factorial(require(f.z, "--z", f.name));
  if (f.name == "mellin") return TransformSpec::mellin(require(f.s, "--s", f.name));
  if (f.name == "fractional") {
    if (f.s && !f.c && !f.a) return TransformSpec::fractional_matching_mellin(*f.s);
    return TransformSpec::fractional_power(require(f.c, "--c", f.name), require(f.a, "--a", f.name));
  }
  throw ValidationError("--transform: unknown family '" + f.name +
                        "' (expected k, laplace, factorial, mellin or fractional)");
}

void add_transform_flags(CLI::App* sub, TransformFlags& f) {
  sub->add_option("--transform", f.name, "Operator family: k, laplace, factorial, mellin, fractional");
  sub->add_option("--k", f.k, "Hop distance for --transform k");
  sub->add_option("--lambda", f.lambda, "Laplace parameter (> 0)");
  sub->add_option("--z", f.z, "Factorial parameter (>= 0)");
  sub->add_option("--s", f.s, "Mellin exponent (> 1, not an odd integer >= 3); for fractional, match Mellin(s)");
  sub->add_option("--c", f.c, "Fractional prefactor (> 0)");
  sub->add_option("--a", f.a, "Fractional power in (0, 1)");
}

Site parse_site(std::string_view text, const char* flag) {
  Site v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ValidationError(std::string(flag) + ": expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

InitialCondition parse_initial(const std::string& text) {
  InitialCondition w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ValidationError("--initial: expected site:weight, got '" + item + "'");
    const Site site = parse_site(std::string_view(item).substr(0, colon), "--initial");
    double weight = 0.0;
    const std::string_view wt = std::string_view(item).substr(colon + 1);
    const auto res = std::from_chars(wt.data(), wt.data() + wt.size(), weight);
    if (res.ec != std::errc() || res.ptr != wt.data() + wt.size()) {
      throw ValidationError("--initial: bad weight '" + std::string(wt) + "'");
    }
    w.emplace_back(site, weight);
  }
  if (w.empty()) throw ValidationError("--initial: no sites given");
  return w;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing to standard output");
  } else {
    write_text_file(path, text);
  }
}

const TransformSpec& need_transform(const ExperimentConfig& c) {
  if (!c.transform) throw ValidationError("--transform is required for '" + c.command + "'");
  return *c.transform;
}

void need_times(const ExperimentConfig& c, bool allow_zero) {
  if (c.times.empty()) throw ValidationError("--times must list at least one time");
  for (double t : c.times) {
    if (!std::isfinite(t) || t < 0.0 || (!allow_zero && t == 0.0)) {
      throw ValidationError(std::string("--times: every time must be ") + (allow_zero ? ">= 0" : "> 0"));
    }
  }
}

Graph build_graph(const ExperimentConfig& c) {
  if (c.graph == "path") return path_graph(c.n);
  if (c.graph == "cycle") return cycle_graph(c.n);
  if (c.graph == "ladder") return ladder_graph(c.n);
  if (c.graph == "square") return square_lattice(c.width, c.height);
  if (c.graph == "triangular") return triangular_lattice(c.width, c.height);
  if (c.graph == "hexagonal") return hexagonal_lattice(c.width, c.height);
  if (c.graph == "tree") return generation_tree(c.depth);
  if (c.graph == "file") {
    if (c.edges_path.empty()) throw ValidationError("--edges is required for --graph file");
    std::ifstream in(c.edges_path);
    if (!in) throw IoError("cannot open '" + c.edges_path + "'");
    return read_edge_list(in).graph;
  }
  throw ValidationError("--graph: unknown kind '" + c.graph + "'");
}

void run_operator(const ExperimentConfig& c, std::ostream& out) {
  const Graph g = build_graph(c);
  const TransformSpec spec = c.transform.value_or(TransformSpec::pure_k(1));
  std::ostringstream text;
  if (spec.is<PureK>()) {
    write_coo(text, k_path_laplacian_matrix(g, spec.as<PureK>().k));
  } else {
    write_coo(text, transformed_laplacian_matrix(g, spec, c.truncation_tol).matrix);
  }
  emit(c.output, text.str(), out);
}

void run_multiplier(const ExperimentConfig& c, std::ostream& out) {
  std::ostringstream text;
  write_multiplier_csv(text, Multiplier(need_transform(c)), c.grid);
  emit(c.output, text.str(), out);
}

void run_evolve(const ExperimentConfig& c, std::ostream& out) {
  const TransformSpec& spec = need_transform(c);
  need_times(c, true);
  const Multiplier ell(spec);
  Site reach = 0;
  for (const auto& entry : c.initial) reach = std::max(reach, entry.first < 0 ? -entry.first : entry.first);

  std::vector<DensityProfile> profiles;
  std::vector<DensityProfile> kernels;
  const bool delta = c.initial.size() == 1 && c.initial[0] == std::pair<Site, double>{0, 1.0};
  for (double t : c.times) {
    Window w{c.window.value_or(0), c.stride.value_or(1)};
    if (!c.window) {
      w = t > 0.0 ? choose_window(asymptotic_params(spec), t) : Window{10, 1};
      if (c.stride) w.stride = *c.stride;
      w.half_width = ((w.half_width + reach + w.stride - 1) / w.stride) * w.stride;
    }
    profiles.push_back(evolve_profile(ell, t, w.half_width, c.initial, c.tol, w.stride));
    if (!c.kernel_output.empty()) {
      kernels.push_back(delta ? profiles.back()
                              : evolve_profile(ell, t, w.half_width, {{0, 1.0}}, c.tol, w.stride));
    }
  }
  std::ostringstream text;
  write_evolve_csv(text, profiles);
  emit(c.output, text.str(), out);

  if (!c.kernel_output.empty()) {
    std::ostringstream k;
    k << "t,m,value\n";
    for (const auto& p : kernels) {
      for (std::size_t i = static_cast<std::size_t>(p.half_width / p.stride); i < p.size(); ++i) {
        k << format_double(p.time) << ',' << p.site(i) << ',' << format_double(p.values[i]) << '\n';
      }
    }
    write_text_file(c.kernel_output, k.str());
  }
}

void run_stable(const ExperimentConfig& c, std::ostream& out) {
  if (c.points < 1) throw ValidationError("--points must be >= 1");
  if (!(c.xi_max >= c.xi_min)) throw ValidationError("--xi-max must be >= --xi-min");
  const StableParams p{c.alpha, c.gamma};
  std::vector<double> xs(static_cast<std::size_t>(c.points));
  for (int i = 0; i < c.points; ++i) {
    xs[static_cast<std::size_t>(i)] =
        c.points == 1 ? c.xi_min : c.xi_min + (c.xi_max - c.xi_min) * i / (c.points - 1);
  }
  std::ostringstream text;
  write_stable_csv(text, stable_table(p, xs, c.tol));
  emit(c.output, text.str(), out);
}

void run_analyze(const ExperimentConfig& c, std::ostream& out) {
  const TransformSpec& spec = need_transform(c);
  AnalysisOptions opts;
  opts.rel_tol = c.rel_tol;
  opts.force_msd = c.force_msd;
  opts.sup_errors = c.sup_errors;
  DiffusionReport report;
  if (!c.input_path.empty()) {
    std::istringstream in(read_text_file(c.input_path));
    const auto profiles = read_evolve_csv(in);
    report = analyze_profiles(spec, profiles, opts);
  } else {
    need_times(c, false);
    report = analyze_diffusion(spec, c.times, opts);
  }
  emit(c.output, report_to_json(report), out);
  if (!c.csv_prefix.empty()) {
    auto series = [&](const std::string& suffix, const std::vector<double>& values) {
      std::ostringstream text;
      write_series_csv(text, report.times, values);
      write_text_file(c.csv_prefix + suffix, text.str());
    };
    series("_peak.csv", report.peaks);
    series("_fwhm.csv", report.fwhm);
    if (!report.sup_errors.empty()) series("_sup_error.csv", report.sup_errors);
    if (!report.msd.empty()) series("_msd.csv", report.msd);
  }
}

void run_compare_fractional(const ExperimentConfig& c, std::ostream& out) {
  need_times(c, false);
  std::ostringstream text;
  text << "t,sup_difference,rescaled_sup_difference\n";
  for (const auto& r : compare_fractional(c.s, c.times, c.rel_tol)) {
    text << format_double(r.time) << ',' << format_double(r.sup_difference) << ','
         << format_double(r.rescaled_sup_difference) << '\n';
  }
  emit(c.output, text.str(), out);
}

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kValidation:
      return kExitValidation;
    case ErrorCategory::kNumerical:
      return kExitNumerical;
    case ErrorCategory::kIo:
      return kExitIo;
  }
  return kExitInternal;
}

}  // namespace

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!(config.tol > 0.0)) throw ValidationError("--tol must be > 0");
    if (!(config.rel_tol > 0.0)) throw ValidationError("--rel-tol must be > 0");
    if (config.window && *config.window < 0) throw ValidationError("--window must be >= 0 or 'auto'");
    if (config.stride && *config.stride < 1) throw ValidationError("--stride must be >= 1");
    if (config.threads > 0) set_thread_count(config.threads);

    if (config.command == "operator") {
      run_operator(config, out);
    } else if (config.command == "multiplier") {
      run_multiplier(config, out);
    } else if (config.command == "evolve") {
      run_evolve(config, out);
    } else if (config.command == "stable") {
      run_stable(config, out);
    } else if (config.command == "analyze") {
      run_analyze(config, out);
    } else if (config.command == "compare-fractional") {
      run_compare_fractional(config, out);
    } else {
      throw ValidationError("unknown command '" + config.command + "'");
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "kpath: error[" << category_name(e.category()) << "]: " << e.what() << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    err << "kpath: error[internal]: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-path Laplacians, chain multipliers and generalized diffusion", "kpath"};
  app.set_config("--config", "", "TOML/INI file with options; command-line flags take precedence");
  app.require_subcommand(1);

  ExperimentConfig c;
  TransformFlags tf;
  std::string window = "auto";
  std::optional<Site> stride;
  std::string initial;
  app.add_option("--threads", c.threads, "Worker threads (default: KPATH_THREADS or all cores)");

  auto* op = app.add_subcommand("operator", "Export L_k or a transformed operator as COO text");
  auto* mult = app.add_subcommand("multiplier", "Sample the chain symbol l(q) on [-pi, pi]");
  auto* evo = app.add_subcommand("evolve", "Evolve an initial condition on the infinite chain");
  auto* stab = app.add_subcommand("stable", "Tabulate a symmetric stable density");
  auto* ana = app.add_subcommand("analyze", "Peak, FWHM, fits and limit-law distance as JSON");
  auto* frac = app.add_subcommand("compare-fractional", "Mellin(s) against the matching fractional Laplacian");

  for (auto* sub : {op, mult, evo, ana}) add_transform_flags(sub, tf);
  for (auto* sub : {op, mult, evo, stab, ana, frac}) {
    sub->add_option("-o,--output", c.output, "Output file, '-' for standard output");
  }

  op->add_option("--graph", c.graph, "path, cycle, ladder, square, triangular, hexagonal, tree or file");
  op->add_option("--n", c.n, "Vertex count (path, cycle) or rung count (ladder)");
  op->add_option("--width", c.width, "Lattice width");
  op->add_option("--height", c.height, "Lattice height");
  op->add_option("--depth", c.depth, "Tree depth");
  op->add_option("--edges", c.edges_path, "Edge-list file for --graph file");
  op->add_option("--truncation-tol", c.truncation_tol, "Operator-norm bound on the dropped k-sum");

  mult->add_option("--grid", c.grid, "Number of q samples");

  for (auto* sub : {evo, ana, frac}) {
    sub->add_option("--times", c.times, "Comma-separated times")->delimiter(',');
  }
  evo->add_option("--window", window, "Half-width X or 'auto'");
  evo->add_option("--stride", stride, "Sample every stride-th site");
  evo->add_option("--initial", initial, "Initial condition as site:weight,... (default 0:1)");
  evo->add_option("--kernel-output", c.kernel_output, "Also write kernel entries (t, m, value)");
  for (auto* sub : {evo, stab}) sub->add_option("--tol", c.tol, "Absolute tolerance per value");

  stab->add_option("--alpha", c.alpha, "Stability index in (0, 2]");
  stab->add_option("--gamma", c.gamma, "Scale (> 0)");
  stab->add_option("--xi-min", c.xi_min, "First xi");
  stab->add_option("--xi-max", c.xi_max, "Last xi");
  stab->add_option("--points", c.points, "Number of xi values");

  for (auto* sub : {ana, frac}) sub->add_option("--rel-tol", c.rel_tol, "Tolerance relative to the predicted peak");
  ana->add_option("--input", c.input_path, "Analyze an evolve CSV instead of evolving");
  ana->add_flag("--msd", c.force_msd, "Report the windowed MSD even when it diverges with the window");
  bool no_sup = false;
  ana->add_flag("--no-sup-error", no_sup, "Skip the distance to the limit law");
  ana->add_option("--csv-prefix", c.csv_prefix, "Also write <prefix>_peak.csv, _fwhm.csv, _sup_error.csv");
  frac->add_option("--s", c.s, "Mellin exponent in (1, 3)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "kpath: error[usage]: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    c.transform = resolve_transform(tf);
    if (window != "auto") c.window = parse_site(window, "--window");
    c.stride = stride;
    if (!initial.empty()) c.initial = parse_initial(initial);
    c.sup_errors = !no_sup;
  } catch (const Error& e) {
    err << "kpath: error[" << category_name(e.category()) << "]: " << e.what() << '\n';
    return exit_code(e.category());
  }
  return run(c, out, err);
}

}  // namespace kpath::cli
