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

#ifndef FAIRSTOP_WELFARE_H_
#define FAIRSTOP_WELFARE_H_

#include <cstdint>
#include <vector>

#include "fairstop/valuation.h"

namespace fairstop {

double SocialWelfare(const ValuationMatrix& values, const Allocation& alloc);
// Sum over items of the highest value.
double OptimalWelfare(const ValuationMatrix& values);

struct EnvyReport {
  // margins[i][k] = u_i(A_i) - u_i(A_k); the diagonal is zero.
  std::vector<std::vector<double>> margins;
  bool envy_free = true;
};

EnvyReport EnvyCheck(const ValuationMatrix& values, const Allocation& alloc);
// Same verdict as EnvyCheck(...).envy_free without the margin table.
bool IsEnvyFree(const ValuationMatrix& values, const Allocation& alloc);

// Largest n^m the Pareto check will enumerate.
inline constexpr std::uint64_t kMaxParetoAllocations = 10'000'000;

// True iff no allocation weakly improves every agent over u_i(A_i) / alpha
// and strictly improves one. Throws std::length_error when n^m exceeds
// kMaxParetoAllocations.
bool ParetoCheck(const ValuationMatrix& values, const Allocation& alloc,
                 double alpha);

}  // namespace fairstop

#endif  // FAIRSTOP_WELFARE_H_
