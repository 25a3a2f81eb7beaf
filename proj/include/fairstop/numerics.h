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

#ifndef FAIRSTOP_NUMERICS_H_
#define FAIRSTOP_NUMERICS_H_

#include <functional>
#include <span>

namespace fairstop {

inline constexpr double kDefaultQuadratureTolerance = 1e-8;

// Adaptive composite Simpson on [a, b] with absolute tolerance `abs_tol`.
// The integrand must be smooth on the open interval; split at kinks and
// discontinuities with IntegratePiecewise.
double AdaptiveSimpson(const std::function<double(double)>& f, double a,
                       double b, double abs_tol = kDefaultQuadratureTolerance);

// Integrates over [a, b] after splitting at every breakpoint that falls
// strictly inside the interval. The tolerance budget is shared evenly across
// the pieces.
double IntegratePiecewise(const std::function<double(double)>& f, double a,
                          double b, std::span<const double> breakpoints,
                          double abs_tol = kDefaultQuadratureTolerance);

}  // namespace fairstop

#endif  // FAIRSTOP_NUMERICS_H_
