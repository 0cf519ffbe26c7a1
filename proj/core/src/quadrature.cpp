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

#include "kpath/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "kpath/error.hpp"

namespace kpath {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss = boost::math::quadrature::gauss<double, 10>;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double magnitude;  // integral of |f| over the panel, by the same rule
  bool final;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  // Node tables hold the non-negative half; index 0 is the centre. The Gauss
  // nodes are the odd Kronrod nodes: Kronrod node 2j + 1 is Gauss node j.
  static const auto& nodes = Kronrod::abscissa();
  static const auto& kronrod = Kronrod::weights();
  static const auto& gauss = Gauss::weights();

  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const double fc = f(mid);
  double k21 = kronrod[0] * fc;
  double g10 = 0.0;
  double abs_sum = kronrod[0] * std::abs(fc);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double dx = half * nodes[i];
    const double f1 = f(mid - dx);
    const double f2 = f(mid + dx);
    k21 += kronrod[i] * (f1 + f2);
    abs_sum += kronrod[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) g10 += gauss[i / 2] * (f1 + f2);
  }
  Panel p{a, b, k21 * half, std::abs((k21 - g10) * half), abs_sum * half, false};
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * half;
  const double width_floor = 1e-13 * std::max(std::abs(a), std::abs(b));
  p.final = p.error <= floor || (b - a) <= width_floor;
  return p;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> breakpoints, double abs_tol,
                                    int max_panels) {
  if (breakpoints.size() < 2) throw ValidationError("integration needs at least two breakpoints");
  if (!(abs_tol > 0.0)) throw ValidationError("integration tolerance must be > 0");

  std::vector<Panel> panels;
  panels.reserve(breakpoints.size() * 4);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i + 1] > breakpoints[i])) {
      throw ValidationError("breakpoints must be strictly increasing");
    }
    panels.push_back(evaluate_panel(f, breakpoints[i], breakpoints[i + 1]));
  }

  auto worse = [&panels](std::size_t i, std::size_t j) {
    if (panels[i].error != panels[j].error) return panels[i].error < panels[j].error;
    return panels[i].a > panels[j].a;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> open(worse);
  double total_error = 0.0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    total_error += panels[i].error;
    if (!panels[i].final) open.push(i);
  }

  // The running total is updated by differences, which drifts once it has
  // shrunk by many orders of magnitude; resum it exactly every so often.
  auto exact_total = [&panels] {
    double sum = 0.0;
    for (const auto& p : panels) sum += p.error;
    return sum;
  };
  int since_resum = 0;
  while (!open.empty()) {
    if (total_error <= abs_tol || ++since_resum == 128) {
      total_error = exact_total();
      since_resum = 0;
      if (total_error <= abs_tol) break;
    }
    if (static_cast<int>(panels.size()) >= max_panels) {
      std::ostringstream msg;
      msg << "adaptive quadrature exceeded " << max_panels << " panels (error estimate "
          << total_error << ", tolerance " << abs_tol << ")";
      throw NumericalError(msg.str());
    }
    const std::size_t worst = open.top();
    open.pop();
    const Panel parent = panels[worst];
    const double mid = 0.5 * (parent.a + parent.b);
    panels[worst] = evaluate_panel(f, parent.a, mid);
    panels.push_back(evaluate_panel(f, mid, parent.b));
    // Round-off detection: an already accurate panel whose halves are no
    // better is limited by noise in f itself (phase error of cos(m q) at large
    // m q, for instance). Splitting further cannot help.
    const double children = panels[worst].error + panels.back().error;
    if (parent.error <= 1e-10 * parent.magnitude && children >= 0.7 * parent.error) {
      panels[worst].final = true;
      panels.back().final = true;
    }
    total_error += panels[worst].error + panels.back().error - parent.error;
    if (!panels[worst].final) open.push(worst);
    if (!panels.back().final) open.push(panels.size() - 1);
  }

  // Sum in position order with compensation so the result is independent of
  // the refinement history.
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double sum = 0.0;
  double comp = 0.0;
  double err = 0.0;
  for (const auto& p : panels) {
    const double t = sum + p.value;
    comp += std::abs(sum) >= std::abs(p.value) ? (sum - t) + p.value : (p.value - t) + sum;
    sum = t;
    err += p.error;
  }
  return {sum + comp, err, static_cast<int>(panels.size())};
}

std::vector<double> graded_breakpoints(double lo, double hi, std::span<const double> anchors,
                                       int levels) {
  if (!(hi > lo)) throw ValidationError("empty integration interval");
  std::vector<double> pts{lo, hi};
  const double width = hi - lo;
  for (double anchor : anchors) {
    if (anchor < lo || anchor > hi) continue;
    pts.push_back(anchor);
    double step = width;
    for (int j = 1; j <= levels; ++j) {
      step *= 0.5;
      if (anchor - step > lo) pts.push_back(anchor - step);
      if (anchor + step < hi) pts.push_back(anchor + step);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace kpath
