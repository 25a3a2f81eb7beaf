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

#include "fairstop/validators.h"

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/hypergeometric.hpp>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fairstop/mechanisms.h"
#include "fairstop/random.h"
#include "fairstop/two_agent.h"
#include "fairstop/valuation.h"

namespace fairstop {
namespace {

constexpr double kPmfSlack = 1e-12;

}  // namespace

double HypergeometricAbsDeviation(int s, int h) {
  if (s < 1 || h < 0 || h > 2 * s) {
    throw std::invalid_argument("hypergeometric needs 0 <= h <= 2s");
  }
  const boost::math::hypergeometric_distribution<double> dist(
      static_cast<unsigned>(s), static_cast<unsigned>(h),
      static_cast<unsigned>(2 * s));
  double total = 0.0;
  const unsigned lo = h > s ? static_cast<unsigned>(h - s) : 0u;
  const unsigned hi = static_cast<unsigned>(std::min(h, s));
  for (unsigned r = lo; r <= hi; ++r) {
    total += boost::math::pdf(dist, r) * std::abs(r - 0.5 * h);
  }
  return total;
}

double BinomialAbsDeviation(int h) {
  if (h < 0) throw std::invalid_argument("binomial needs h >= 0");
  const boost::math::binomial_distribution<double> dist(h, 0.5);
  double total = 0.0;
  for (int r = 0; r <= h; ++r) {
    total += boost::math::pdf(dist, r) * std::abs(r - 0.5 * h);
  }
  return total;
}

bool AbsDeviationBoundCheck(int s, int h) {
  if (h < 2 || h > 2 * s) {
    throw std::invalid_argument("deviation bound check needs 2 <= h <= 2s");
  }
  const double hyp = HypergeometricAbsDeviation(s, h);
  const double bin = BinomialAbsDeviation(h);
  return hyp <= bin + kPmfSlack && bin <= h / 4.0 + kPmfSlack;
}

double EnvyMarginS(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("t must lie in [0, 1]");
  }
  const double r = kTwoAgentShare;
  double s;
  if (t < 0.5) {
    s = (3.0 + 2.0 * r - t) / 4.0;
  } else if (t < 1.0 - r) {
    s = (5.0 + 2.0 * r - 5.0 * t) / 4.0;
  } else {
    s = (7.0 - 7.0 * t) / 4.0;
  }
  return s - 0.875 * (1.0 - t * t);
}

bool EnvyMarginSCheck(int resolution) {
  if (resolution < 1000) {
    throw std::invalid_argument("resolution must be at least 1000");
  }
  for (int k = 0; k <= resolution; ++k) {
    if (EnvyMarginS(static_cast<double>(k) / resolution) < -1e-12) {
      return false;
    }
  }
  return true;
}

int CouplingDivergence(std::span<const double> shares,
                       const DistributionSpec& dist, int items,
                       std::uint64_t seed) {
  const int n = static_cast<int>(shares.size());
  RandomStream rng(seed, 0);
  const DistributionSpec dists[] = {dist};
  const ValuationMatrix values = ValuationMatrix::Draw(n, items, dists, rng);
  const Allocation pick = RunPickR(shares, values);
  const Allocation qt = RunQtS(ThresholdsFromShares(shares), dists, values);
  int differ = 0;
  for (int j = 0; j < items; ++j) differ += pick.owner(j) != qt.owner(j);
  return differ;
}

}  // namespace fairstop
