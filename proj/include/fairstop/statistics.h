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

#ifndef FAIRSTOP_STATISTICS_H_
#define FAIRSTOP_STATISTICS_H_

#include <cstdint>
#include <span>

namespace fairstop {

inline constexpr double kZ95 = 1.959963984540054;

// Point estimate with a two-sided 95% interval.
struct Interval {
  double estimate = 0.0;
  double low = 0.0;
  double high = 0.0;

  double half_width() const { return 0.5 * (high - low); }
};

// Sample mean with a normal-approximation interval.
Interval MeanInterval(std::span<const double> samples);

// Wilson score interval for a binomial proportion.
Interval WilsonInterval(std::int64_t successes, std::int64_t trials);

// mean(numerators) / mean(denominators) over paired samples, with a
// delta-method interval.
Interval RatioInterval(std::span<const double> numerators,
                       std::span<const double> denominators);

}  // namespace fairstop

#endif  // FAIRSTOP_STATISTICS_H_
