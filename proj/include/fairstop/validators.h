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

#ifndef FAIRSTOP_VALIDATORS_H_
#define FAIRSTOP_VALIDATORS_H_

#include <cstdint>
#include <span>

#include "fairstop/distribution.h"

namespace fairstop {

// E|r - h/2| for r ~ Hypergeometric(population 2s, s successes, h draws).
double HypergeometricAbsDeviation(int s, int h);
// E|r - h/2| for r ~ Binomial(h, 1/2).
double BinomialAbsDeviation(int h);

// Checks E_hyp|r - h/2| <= E_bin|r - h/2| <= h/4 by exact pmf summation.
// Requires 2 <= h <= 2s.
bool AbsDeviationBoundCheck(int s, int h);

// S(t) - (7/8)(1 - t^2) for the piecewise lower envelope S at the two-agent
// share r = (2 - sqrt(2)) / 2. t in [0, 1].
double EnvyMarginS(double t);

// True iff EnvyMarginS(k / resolution) >= -1e-12 for k = 0..resolution.
// Requires resolution >= 1000.
bool EnvyMarginSCheck(int resolution);

// Items owned differently by Pick-r and QT-s (with thresholds derived from
// the shares) on one shared draw of n x m values from `dist`.
int CouplingDivergence(std::span<const double> shares,
                       const DistributionSpec& dist, int items,
                       std::uint64_t seed);

}  // namespace fairstop

#endif  // FAIRSTOP_VALIDATORS_H_
