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

#include "kpath/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "kpath/error.hpp"
#include "kpath/parallel.hpp"

namespace kpath {

std::string_view category_name(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kValidation:
      return "validation";
    case ErrorCategory::kNumerical:
      return "numerical";
    case ErrorCategory::kIo:
      return "io";
  }
  return "unknown";
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

void check_stream(const std::ostream& out) {
  if (!out) throw IoError("write failed");
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

template <class T>
T parse_number(std::string_view text, std::size_t line_no) {
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw IoError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

void write_evolve_csv(std::ostream& out, std::span<const DensityProfile> profiles) {
  std::vector<const DensityProfile*> order;
  for (const auto& p : profiles) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->time < b->time; });
  out << "t,x,u\n";
  for (const auto* p : order) {
    const std::string t = format_double(p->time);
    for (std::size_t i = 0; i < p->values.size(); ++i) {
      out << t << ',' << p->site(i) << ',' << format_double(p->values[i]) << '\n';
    }
  }
  check_stream(out);
}

std::vector<DensityProfile> read_evolve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "t,x,u") throw IoError("evolve CSV must start with the header 't,x,u'");
  std::vector<DensityProfile> profiles;
  std::vector<Site> sites;
  auto finish = [&]() {
    if (profiles.empty()) return;
    auto& p = profiles.back();
    const Site lo = sites.front();
    const Site hi = sites.back();
    if (lo != -hi) throw IoError("profile at t = " + format_double(p.time) + " is not centred on the origin");
    p.half_width = hi;
    p.stride = sites.size() > 1 ? sites[1] - sites[0] : 1;
    for (std::size_t i = 0; i < sites.size(); ++i) {
      if (p.stride < 1 || sites[i] != lo + static_cast<Site>(i) * p.stride) {
        throw IoError("profile at t = " + format_double(p.time) + " is not evenly spaced");
      }
    }
    sites.clear();
  };
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto parts = split(line, ',');
    if (parts.size() != 3) throw IoError("line " + std::to_string(line_no) + ": expected 3 columns");
    const auto t = parse_number<double>(parts[0], line_no);
    const auto x = parse_number<Site>(parts[1], line_no);
    const auto u = parse_number<double>(parts[2], line_no);
    if (profiles.empty() || profiles.back().time != t) {
      finish();
      if (!profiles.empty() && !(t > profiles.back().time)) {
        throw IoError("line " + std::to_string(line_no) + ": times must increase");
      }
      profiles.push_back(DensityProfile{t, 0, 1, {}});
    }
    sites.push_back(x);
    profiles.back().values.push_back(u);
  }
  finish();
  return profiles;
}

void write_multiplier_csv(std::ostream& out, const Multiplier& ell, int n) {
  if (n < 2) throw ValidationError("multiplier grid needs at least 2 points");
  constexpr double pi = std::numbers::pi;
  out << "q,ell\n";
  for (int i = 0; i < n; ++i) {
    // Symmetric construction keeps the grid exactly even about q = 0.
    const int j = n - 1 - i;
    const double q = i < j ? -pi + 2.0 * pi * i / (n - 1) : pi - 2.0 * pi * j / (n - 1);
    out << format_double(q) << ',' << format_double(ell(q)) << '\n';
  }
  check_stream(out);
}

std::vector<StableRow> stable_table(const StableParams& p, std::span<const double> xs, double tol) {
  p.validate();
  std::vector<StableRow> rows(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const double xi = xs[i];
    const double tail = (p.alpha < 2.0 && xi > 0.0) ? stable_tail_asymptote(xi, p)
                                                    : std::numeric_limits<double>::quiet_NaN();
    rows[i] = {xi, stable_density(xi, p, tol), tail};
  });
  return rows;
}

void write_stable_csv(std::ostream& out, std::span<const StableRow> rows) {
  out << "xi,f,tail\n";
  for (const auto& r : rows) {
    out << format_double(r.xi) << ',' << format_double(r.f) << ',' << format_double(r.tail) << '\n';
  }
  check_stream(out);
}

void write_series_csv(std::ostream& out, std::span<const double> t, std::span<const double> values) {
  if (t.size() != values.size()) throw ValidationError("series needs as many values as times");
  out << "t,value\n";
  for (std::size_t i = 0; i < t.size(); ++i) out << format_double(t[i]) << ',' << format_double(values[i]) << '\n';
  check_stream(out);
}

void write_coo(std::ostream& out, const SparseSymMatrix& m) {
  out << "# symmetric dimension " << m.dimension() << ", upper triangle (row <= col)\n";
  for (const auto& e : m.entries()) out << e.row << ' ' << e.col << ' ' << format_double(e.value) << '\n';
  check_stream(out);
}

namespace {

nlohmann::json fit_to_json(const std::optional<PowerLawFit>& fit) {
  if (!fit) return nullptr;
  return {{"exponent", fit->exponent}, {"prefactor", fit->prefactor}, {"max_residual", fit->max_residual}};
}

std::optional<PowerLawFit> fit_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return PowerLawFit{j.at("exponent").get<double>(), j.at("prefactor").get<double>(),
                     j.at("max_residual").get<double>()};
}

}  // namespace

std::string report_to_json(const DiffusionReport& r) {
  nlohmann::json j;
  j["schema_version"] = r.schema_version;
  j["transform"] = r.transform;
  j["predicted"] = {{"alpha", r.predicted.alpha},
                    {"gamma", r.predicted.gamma},
                    {"kappa", r.predicted.kappa},
                    {"regime", regime_name(r.predicted.regime)}};
  j["times"] = r.times;
  j["half_widths"] = r.half_widths;
  j["strides"] = r.strides;
  j["peaks"] = r.peaks;
  j["fwhm"] = r.fwhm;
  j["msd"] = r.msd;
  j["msd_window_dependent"] = r.msd_window_dependent;
  j["sup_errors"] = r.sup_errors;
  j["fits"] = {{"peak", fit_to_json(r.peak_fit)}, {"fwhm", fit_to_json(r.fwhm_fit)}};
  return j.dump(2) + "\n";
}

DiffusionReport report_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    DiffusionReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != DiffusionReport::kSchemaVersion) {
      throw IoError("unsupported report schema_version " + std::to_string(r.schema_version));
    }
    r.transform = j.at("transform").get<std::string>();
    const auto& pred = j.at("predicted");
    r.predicted.alpha = pred.at("alpha").get<double>();
    r.predicted.gamma = pred.at("gamma").get<double>();
    r.predicted.kappa = pred.at("kappa").get<double>();
    r.predicted.regime = parse_regime(pred.at("regime").get<std::string>());
    r.times = j.at("times").get<std::vector<double>>();
    r.half_widths = j.at("half_widths").get<std::vector<Site>>();
    r.strides = j.at("strides").get<std::vector<Site>>();
    r.peaks = j.at("peaks").get<std::vector<double>>();
    r.fwhm = j.at("fwhm").get<std::vector<double>>();
    r.msd = j.at("msd").get<std::vector<double>>();
    r.msd_window_dependent = j.at("msd_window_dependent").get<bool>();
    r.sup_errors = j.at("sup_errors").get<std::vector<double>>();
    r.peak_fit = fit_from_json(j.at("fits").at("peak"));
    r.fwhm_fit = fit_from_json(j.at("fits").at("fwhm"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed report: ") + e.what());
  } catch (const ValidationError& e) {
    throw IoError(std::string("malformed report: ") + e.what());
  }
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return ss.str();
}

}  // namespace kpath
