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

#ifndef FAIRSTOP_DISTRIBUTION_H_
#define FAIRSTOP_DISTRIBUTION_H_

#include <string>
#include <string_view>
#include <vector>

#include "fairstop/random.h"

namespace fairstop {

// q in the adversarial three-point family. Fixed, not a user parameter.
inline constexpr double kAdversarialQ = 0.58578643762690485;  // 2 - sqrt(2)

enum class Family {
  kUniform,
  kBernoulliPlusNoise,
  kAdversarial,
  kPiecewiseLinearCdf,
};

std::string_view FamilyTag(Family family);
Family ParseFamily(std::string_view tag);

// A valid value distribution: nonnegative, bounded, with positive variance.
//
// Every built-in family is a finite mixture of uniform pieces [a, b] (an atom
// when a == b), so the CDF is piecewise linear between knots with jumps only
// at atoms. All exact quantities below are computed from that knot table.
// Instances are immutable and safe to share across threads.
class DistributionSpec {
 public:
  // Uniform on [lo, hi], 0 <= lo < hi.
  static DistributionSpec Uniform(double lo, double hi);
  // Bernoulli(prob) + Uniform[0, noise].
  static DistributionSpec BernoulliPlusNoise(double prob, double noise);
  // Base value (1-q)/p w.p. p, 1 w.p. q, 0 otherwise; plus Uniform[0, delta].
  // Requires 0 < p <= 1 - q and delta >= 0.
  static DistributionSpec Adversarial(double p, double delta);
  // CDF through (xs[k], cdf[k]) with linear interpolation. xs strictly
  // increasing and nonnegative, cdf nondecreasing from 0 to 1.
  static DistributionSpec PiecewiseLinearCdf(std::vector<double> xs,
                                             std::vector<double> cdf);
  // Rebuilds from a family tag and flat parameter list (the config form).
  // piecewise-linear-cdf takes interleaved x0, F0, x1, F1, ...
  static DistributionSpec FromParams(std::string_view tag,
                                     const std::vector<double>& params);

  Family family() const { return family_; }
  std::string_view tag() const { return FamilyTag(family_); }
  const std::vector<double>& params() const { return params_; }
  double lo() const { return knots_.front().x; }
  double hi() const { return knots_.back().x; }
  std::string Describe() const;

  double Sample(RandomStream& rng) const;
  // Right-continuous CDF, F(x) = P(X <= x).
  double Cdf(double x) const;
  // Left limit, P(X < x).
  double CdfLeft(double x) const;
  // inf{x : F(x) >= q}; throws std::invalid_argument for q outside [0, 1].
  double InverseCdf(double q) const;
  // Density of the continuous part (atoms excluded).
  double Density(double x) const;
  bool HasAtoms() const;

  double Mean() const;
  double Variance() const;
  // Integral of the quantile function over [a, b] within [0, 1].
  double QuantileIntegral(double a, double b) const;
  // Mean of the top (1 - tau) quantile mass, E[X | X >= F^{-1}(tau)] for
  // continuous families. tau in [0, 1).
  double TailExpectation(double tau) const;
  // Mean of the bottom tau quantile mass. tau in (0, 1].
  double LowerExpectation(double tau) const;
  // E[max of n i.i.d. draws].
  double ExpectedMax(int n) const;
  // E[max(X, c)].
  double ExpectedMaxWith(double c) const;

  // Knot locations: every point where the CDF may change slope or jump.
  std::vector<double> Breakpoints() const;

 private:
  struct Piece {
    double weight;
    double lo;
    double hi;
  };
  struct Knot {
    double x;
    double left;   // F(x-)
    double right;  // F(x)
  };

  DistributionSpec(Family family, std::vector<double> params,
                   std::vector<Piece> pieces);

  Family family_;
  std::vector<double> params_;
  std::vector<Piece> pieces_;
  std::vector<Knot> knots_;
};

}  // namespace fairstop

#endif  // FAIRSTOP_DISTRIBUTION_H_
