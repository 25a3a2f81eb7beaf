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

#include "fairstop/welfare.h"

#include <algorithm>
#include <stdexcept>

namespace fairstop {
namespace {

constexpr double kParetoSlack = 1e-12;

void CheckShapes(const ValuationMatrix& values, const Allocation& alloc) {
  if (values.agents() != alloc.agents() || values.items() != alloc.items()) {
    throw std::invalid_argument("allocation does not match the value table");
  }
}

std::vector<double> Utilities(const ValuationMatrix& values,
                              const Allocation& alloc) {
  std::vector<double> u(values.agents(), 0.0);
  for (int j = 0; j < values.items(); ++j) {
    u[alloc.owner(j)] += values.at(alloc.owner(j), j);
  }
  return u;
}

}  // namespace

double SocialWelfare(const ValuationMatrix& values, const Allocation& alloc) {
  CheckShapes(values, alloc);
  double total = 0.0;
  for (int j = 0; j < values.items(); ++j) {
    total += values.at(alloc.owner(j), j);
  }
  return total;
}

double OptimalWelfare(const ValuationMatrix& values) {
  double total = 0.0;
  for (int j = 0; j < values.items(); ++j) {
    double best = values.at(0, j);
    for (int i = 1; i < values.agents(); ++i) {
      best = std::max(best, values.at(i, j));
    }
    total += best;
  }
  return total;
}

EnvyReport EnvyCheck(const ValuationMatrix& values, const Allocation& alloc) {
  CheckShapes(values, alloc);
  const int n = values.agents();
  // worth[i][k] = u_i(A_k).
  std::vector<std::vector<double>> worth(n, std::vector<double>(n, 0.0));
  for (int j = 0; j < values.items(); ++j) {
    for (int i = 0; i < n; ++i) worth[i][alloc.owner(j)] += values.at(i, j);
  }
  EnvyReport report;
  report.margins.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      report.margins[i][k] = worth[i][i] - worth[i][k];
      if (report.margins[i][k] < 0.0) report.envy_free = false;
    }
  }
  return report;
}

bool IsEnvyFree(const ValuationMatrix& values, const Allocation& alloc) {
  return EnvyCheck(values, alloc).envy_free;
}

bool ParetoCheck(const ValuationMatrix& values, const Allocation& alloc,
                 double alpha) {
  CheckShapes(values, alloc);
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  const int n = values.agents();
  const int m = values.items();
  std::uint64_t count = 1;
  for (int j = 0; j < m; ++j) {
    count *= static_cast<std::uint64_t>(n);
    if (count > kMaxParetoAllocations) {
      throw std::length_error("pareto check limited to n^m <= 1e7");
    }
  }
  std::vector<double> bar = Utilities(values, alloc);
  for (double& u : bar) u /= alpha;

  std::vector<int> owners(m, 0);
  std::vector<double> u(n);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::fill(u.begin(), u.end(), 0.0);
    for (int j = 0; j < m; ++j) u[owners[j]] += values.at(owners[j], j);
    bool weakly = true;
    bool strictly = false;
    for (int i = 0; i < n && weakly; ++i) {
      if (u[i] < bar[i] - kParetoSlack) weakly = false;
      if (u[i] > bar[i] + kParetoSlack) strictly = true;
    }
    if (weakly && strictly) return false;
    for (int j = 0; j < m && ++owners[j] == n; ++j) owners[j] = 0;
  }
  return true;
}

}  // namespace fairstop
