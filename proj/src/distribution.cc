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

#include "fairstop/distribution.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fairstop/numerics.h"

namespace fairstop {
namespace {

[[noreturn]] void Reject(const std::string& what) {
  throw std::invalid_argument("invalid distribution: " + what);
}

}  // namespace

std::string_view FamilyTag(Family family) {
  switch (family) {
    case Family::kUniform:
      return "uniform";
    case Family::kBernoulliPlusNoise:
      return "bernoulli-plus-noise";
    case Family::kAdversarial:
      return "adversarial";
    case Family::kPiecewiseLinearCdf:
      return "piecewise-linear-cdf";
  }
  return "unknown";
}

Family ParseFamily(std::string_view tag) {
  for (Family f : {Family::kUniform, Family::kBernoulliPlusNoise,
                   Family::kAdversarial, Family::kPiecewiseLinearCdf}) {
    if (FamilyTag(f) == tag) return f;
  }
  Reject("unknown family '" + std::string(tag) + "'");
}

DistributionSpec DistributionSpec::Uniform(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) Reject("non-finite bounds");
  if (lo < 0.0) Reject("uniform lower bound is negative");
  if (!(hi > lo)) Reject("uniform needs lo < hi");
  return DistributionSpec(Family::kUniform, {lo, hi}, {{1.0, lo, hi}});
}

DistributionSpec DistributionSpec::BernoulliPlusNoise(double prob,
                                                      double noise) {
  if (!(prob > 0.0 && prob < 1.0)) Reject("bernoulli prob must be in (0, 1)");
  if (!(noise >= 0.0) || !std::isfinite(noise)) Reject("noise must be >= 0");
  return DistributionSpec(Family::kBernoulliPlusNoise, {prob, noise},
                          {{1.0 - prob, 0.0, noise}, {prob, 1.0, 1.0 + noise}});
}

DistributionSpec DistributionSpec::Adversarial(double p, double delta) {
  constexpr double q = kAdversarialQ;
  if (!(p > 0.0)) Reject("adversarial p must be positive");
  if (p > 1.0 - q + 1e-15) Reject("adversarial p + q exceeds 1");
  if (!(delta >= 0.0) || !std::isfinite(delta)) Reject("delta must be >= 0");
  const double high = (1.0 - q) / p;
  std::vector<Piece> pieces;
  if (1.0 - q - p > 0.0) pieces.push_back({1.0 - q - p, 0.0, delta});
  pieces.push_back({q, 1.0, 1.0 + delta});
  pieces.push_back({p, high, high + delta});
  return DistributionSpec(Family::kAdversarial, {p, delta}, std::move(pieces));
}

DistributionSpec DistributionSpec::PiecewiseLinearCdf(std::vector<double> xs,
                                                      std::vector<double> cdf) {
  if (xs.size() != cdf.size() || xs.size() < 2) {
    Reject("piecewise CDF needs >= 2 matching breakpoints");
  }
  if (xs.front() < 0.0) Reject("piecewise CDF support is negative");
  if (cdf.front() != 0.0 || cdf.back() != 1.0) {
    Reject("piecewise CDF must run from 0 to 1");
  }
  std::vector<Piece> pieces;
  std::vector<double> params;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (!std::isfinite(xs[k]) || !std::isfinite(cdf[k])) Reject("non-finite");
    if (k > 0) {
      if (!(xs[k] > xs[k - 1])) Reject("breakpoints must increase strictly");
      if (cdf[k] < cdf[k - 1]) Reject("CDF must be nondecreasing");
      if (cdf[k] > cdf[k - 1]) {
        pieces.push_back({cdf[k] - cdf[k - 1], xs[k - 1], xs[k]});
      }
    }
    params.push_back(xs[k]);
    params.push_back(cdf[k]);
  }
  return DistributionSpec(Family::kPiecewiseLinearCdf, std::move(params),
                          std::move(pieces));
}

DistributionSpec DistributionSpec::FromParams(
    std::string_view tag, const std::vector<double>& params) {
  const Family family = ParseFamily(tag);
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      Reject(std::string(tag) + " takes " + std::to_string(count) +
             " parameters");
    }
  };
  switch (family) {
    case Family::kUniform:
      expect(2);
      return Uniform(params[0], params[1]);
    case Family::kBernoulliPlusNoise:
      expect(2);
      return BernoulliPlusNoise(params[0], params[1]);
    case Family::kAdversarial:
      expect(2);
      return Adversarial(params[0], params[1]);
    case Family::kPiecewiseLinearCdf: {
      if (params.size() % 2 != 0) Reject("piecewise params come in pairs");
      std::vector<double> xs, cdf;
      for (std::size_t k = 0; k < params.size(); k += 2) {
        xs.push_back(params[k]);
        cdf.push_back(params[k + 1]);
      }
      return PiecewiseLinearCdf(std::move(xs), std::move(cdf));
    }
  }
  Reject("unreachable");
}

DistributionSpec::DistributionSpec(Family family, std::vector<double> params,
                                   std::vector<Piece> pieces)
    : family_(family), params_(std::move(params)), pieces_(std::move(pieces)) {
  std::vector<double> xs;
  for (const Piece& p : pieces_) {
    xs.push_back(p.lo);
    xs.push_back(p.hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto mass_at_or_below = [&](double x, bool inclusive) {
    double f = 0.0;
    for (const Piece& p : pieces_) {
      if (p.lo == p.hi) {
        if (inclusive ? x >= p.lo : x > p.lo) f += p.weight;
      } else if (x >= p.hi) {
        f += p.weight;
      } else if (x > p.lo) {
        f += p.weight * (x - p.lo) / (p.hi - p.lo);
      }
    }
    return std::clamp(f, 0.0, 1.0);
  };
  for (double x : xs) {
    knots_.push_back({x, mass_at_or_below(x, false), mass_at_or_below(x, true)});
  }
  knots_.back().right = 1.0;
  if (!(Variance() > 0.0)) Reject("variance must be positive");
}

std::string DistributionSpec::Describe() const {
  std::ostringstream out;
  out << tag() << "(";
  for (std::size_t k = 0; k < params_.size(); ++k) {
    out << (k ? ", " : "") << params_[k];
  }
  out << ")";
  return out.str();
}

double DistributionSpec::Sample(RandomStream& rng) const {
  return InverseCdf(rng.NextUniform());
}

double DistributionSpec::Cdf(double x) const {
  if (x < knots_.front().x) return 0.0;
  if (x >= knots_.back().x) return 1.0;
  // First knot strictly greater than x; x lies in [prev.x, next.x).
  auto next = std::upper_bound(
      knots_.begin(), knots_.end(), x,
      [](double value, const Knot& k) { return value < k.x; });
  const Knot& prev = *(next - 1);
  if (x == prev.x) return prev.right;
  const double t = (x - prev.x) / (next->x - prev.x);
  return prev.right + t * (next->left - prev.right);
}

double DistributionSpec::CdfLeft(double x) const {
  if (x <= knots_.front().x) return 0.0;
  if (x > knots_.back().x) return 1.0;
  auto at = std::lower_bound(
      knots_.begin(), knots_.end(), x,
      [](const Knot& k, double value) { return k.x < value; });
  if (at->x == x) return at->left;
  const Knot& prev = *(at - 1);
  const double t = (x - prev.x) / (at->x - prev.x);
  return prev.right + t * (at->left - prev.right);
}

double DistributionSpec::InverseCdf(double q) const {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("quantile must lie in [0, 1]");
  }
  // First knot whose right value reaches q.
  auto at = std::lower_bound(
      knots_.begin(), knots_.end(), q,
      [](const Knot& k, double value) { return k.right < value; });
  if (at == knots_.end()) return knots_.back().x;
  if (at == knots_.begin()) return at->x;
  const Knot& prev = *(at - 1);
  if (at->left >= q && at->left > prev.right) {
    const double t = (q - prev.right) / (at->left - prev.right);
    return prev.x + t * (at->x - prev.x);
  }
  return at->x;
}

double DistributionSpec::Density(double x) const {
  double f = 0.0;
  for (const Piece& p : pieces_) {
    if (p.hi > p.lo && x > p.lo && x < p.hi) f += p.weight / (p.hi - p.lo);
  }
  return f;
}

bool DistributionSpec::HasAtoms() const {
  return std::any_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& p) { return p.lo == p.hi; });
}

double DistributionSpec::Mean() const {
  double mean = 0.0;
  for (const Piece& p : pieces_) mean += p.weight * 0.5 * (p.lo + p.hi);
  return mean;
}

double DistributionSpec::Variance() const {
  double second = 0.0;
  for (const Piece& p : pieces_) {
    second += p.weight * (p.lo * p.lo + p.lo * p.hi + p.hi * p.hi) / 3.0;
  }
  const double mean = Mean();
  return std::max(0.0, second - mean * mean);
}

double DistributionSpec::QuantileIntegral(double a, double b) const {
  a = std::clamp(a, 0.0, 1.0);
  b = std::clamp(b, 0.0, 1.0);
  if (b <= a) return 0.0;
  // The quantile function is linear on [right_k, left_{k+1}] and constant
  // (an atom) on [left_k, right_k].
  auto linear_part = [&](double u0, double u1, double x0, double x1) {
    const double lo = std::max(a, u0);
    const double hi = std::min(b, u1);
    if (hi <= lo) return 0.0;
    const double mid = 0.5 * (lo + hi);
    const double x = u1 > u0 ? x0 + (mid - u0) / (u1 - u0) * (x1 - x0) : x0;
    return (hi - lo) * x;
  };
  double total = 0.0;
  for (std::size_t k = 0; k < knots_.size(); ++k) {
    const Knot& kn = knots_[k];
    total += linear_part(kn.left, kn.right, kn.x, kn.x);
    if (k + 1 < knots_.size()) {
      const Knot& nx = knots_[k + 1];
      total += linear_part(kn.right, nx.left, kn.x, nx.x);
    }
  }
  return total;
}

double DistributionSpec::TailExpectation(double tau) const {
  if (!(tau >= 0.0 && tau < 1.0)) {
    throw std::invalid_argument("tail expectation needs tau in [0, 1)");
  }
  if (tau == 0.0) return Mean();
  return QuantileIntegral(tau, 1.0) / (1.0 - tau);
}

double DistributionSpec::LowerExpectation(double tau) const {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("lower expectation needs tau in (0, 1]");
  }
  if (tau == 1.0) return Mean();
  return QuantileIntegral(0.0, tau) / tau;
}

double DistributionSpec::ExpectedMax(int n) const {
  if (n < 1) throw std::invalid_argument("expected_max needs n >= 1");
  if (n == 1) return Mean();
  if (family_ == Family::kUniform) {
    return lo() + (hi() - lo()) * n / (n + 1.0);
  }
  // F is linear between knots, so F^n integrates in closed form per piece.
  double total = lo();
  for (std::size_t k = 0; k + 1 < knots_.size(); ++k) {
    const double width = knots_[k + 1].x - knots_[k].x;
    const double fa = knots_[k].right;
    const double fb = knots_[k + 1].left;
    double power_mean;
    if (fb - fa > 1e-12) {
      power_mean = (std::pow(fb, n + 1) - std::pow(fa, n + 1)) /
                   ((n + 1) * (fb - fa));
    } else {
      power_mean = std::pow(0.5 * (fa + fb), n);
    }
    total += width * (1.0 - power_mean);
  }
  return total;
}

double DistributionSpec::ExpectedMaxWith(double c) const {
  if (c <= lo()) return Mean();
  if (c >= hi()) return c;
  const std::vector<double> cuts = Breakpoints();
  auto survival = [&](double x) { return 1.0 - Cdf(x); };
  return c + IntegratePiecewise(survival, c, hi(), cuts);
}

std::vector<double> DistributionSpec::Breakpoints() const {
  std::vector<double> xs;
  xs.reserve(knots_.size());
  for (const Knot& k : knots_) xs.push_back(k.x);
  return xs;
}

}  // namespace fairstop
