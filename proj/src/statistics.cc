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

#include "fairstop/statistics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fairstop {

Interval MeanInterval(std::span<const double> samples) {
  const auto n = static_cast<double>(samples.size());
  if (samples.empty()) throw std::invalid_argument("no samples");
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= n;
  if (samples.size() == 1) return {mean, mean, mean};
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  const double se = std::sqrt(ss / (n - 1.0) / n);
  return {mean, mean - kZ95 * se, mean + kZ95 * se};
}

Interval WilsonInterval(std::int64_t successes, std::int64_t trials) {
  if (trials <= 0 || successes < 0 || successes > trials) {
    throw std::invalid_argument("invalid binomial counts");
  }
  const double n = static_cast<double>(trials);
  const double p = successes / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double spread =
      kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {p, std::max(0.0, center - spread), std::min(1.0, center + spread)};
}

Interval RatioInterval(std::span<const double> numerators,
                       std::span<const double> denominators) {
  if (numerators.empty() || numerators.size() != denominators.size()) {
    throw std::invalid_argument("ratio needs paired, nonempty samples");
  }
  const auto n = static_cast<double>(numerators.size());
  double my = 0.0;
  double mx = 0.0;
  for (std::size_t k = 0; k < numerators.size(); ++k) {
    my += numerators[k];
    mx += denominators[k];
  }
  my /= n;
  mx /= n;
  if (!(mx > 0.0)) throw std::invalid_argument("denominator mean must be > 0");
  const double ratio = my / mx;
  if (numerators.size() == 1) return {ratio, ratio, ratio};
  double syy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t k = 0; k < numerators.size(); ++k) {
    const double dy = numerators[k] - my;
    const double dx = denominators[k] - mx;
    syy += dy * dy;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  syy /= n - 1.0;
  sxx /= n - 1.0;
  sxy /= n - 1.0;
  const double var =
      std::max(0.0, syy - 2.0 * ratio * sxy + ratio * ratio * sxx) /
      (mx * mx * n);
  const double se = std::sqrt(var);
  return {ratio, ratio - kZ95 * se, ratio + kZ95 * se};
}

}  // namespace fairstop
