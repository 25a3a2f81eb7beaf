// Copyright 2026 The Fairstop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairstop/numerics.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fairstop {
namespace {

constexpr int kMaxDepth = 48;

double SimpsonRecurse(const std::function<double(double)>& f, double a,
                      double b, double fa, double fm, double fb, double whole,
                      double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth >= kMaxDepth || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return SimpsonRecurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         SimpsonRecurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double AdaptiveSimpson(const std::function<double(double)>& f, double a,
                       double b, double abs_tol) {
  if (b == a) return 0.0;
  if (b < a) return -AdaptiveSimpson(f, b, a, abs_tol);
  // Endpoints are sampled one ulp inside so a jump exactly at a or b (an
  // atom of a CDF-based integrand) contributes its one-sided limit.
  const double fa = f(std::nextafter(a, b));
  const double fb = f(std::nextafter(b, a));
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return SimpsonRecurse(f, a, b, fa, fm, fb, whole, abs_tol, 0);
}

double IntegratePiecewise(const std::function<double(double)>& f, double a,
                          double b, std::span<const double> breakpoints,
                          double abs_tol) {
  if (b <= a) return 0.0;
  std::vector<double> cuts{a};
  for (double x : breakpoints) {
    if (x > a && x < b) cuts.push_back(x);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const double piece_tol = abs_tol / static_cast<double>(cuts.size() - 1);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    total += AdaptiveSimpson(f, cuts[k], cuts[k + 1], piece_tol);
  }
  return total;
}

}  // namespace fairstop
