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

#ifndef KPATH_IO_HPP
#define KPATH_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpath/analysis.hpp"
#include "kpath/evolution.hpp"
#include "kpath/multiplier.hpp"
#include "kpath/operators.hpp"
#include "kpath/stable.hpp"

namespace kpath {

// Every writer prints floating-point values with 17 significant digits, so
// output is exact and reproducible byte for byte.

/// v in general notation with 17 significant digits.
std::string format_double(double v);

/// Header "t,x,u"; rows sorted by t, then x.
void write_evolve_csv(std::ostream& out, std::span<const DensityProfile> profiles);

/// Parses the output of write_evolve_csv back into one profile per time. Each
/// profile must be evenly spaced and centred on the origin.
std::vector<DensityProfile> read_evolve_csv(std::istream& in);

/// Header "q,ell"; n points evenly spaced on [-pi, pi], both ends included.
void write_multiplier_csv(std::ostream& out, const Multiplier& ell, int n);

struct StableRow {
  double xi;
  double f;
  double tail;  // NaN where the tail asymptote is undefined (alpha = 2, xi = 0)
};

std::vector<StableRow> stable_table(const StableParams& p, std::span<const double> xs, double tol);

/// Header "xi,f,tail".
void write_stable_csv(std::ostream& out, std::span<const StableRow> rows);

/// Header "t,value".
void write_series_csv(std::ostream& out, std::span<const double> t, std::span<const double> values);

/// One "row col value" line per stored entry (row <= col), after a '#' line
/// giving the dimension.
void write_coo(std::ostream& out, const SparseSymMatrix& m);

std::string report_to_json(const DiffusionReport& report);
/// Throws IoError on malformed input or a schema_version other than the current one.
DiffusionReport report_from_json(std::string_view text);

/// Whole-file write and read; failures throw IoError.
void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

}  // namespace kpath

#endif  // KPATH_IO_HPP
