// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace apbound {

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct SimplexResult {
  LpStatus status = LpStatus::iteration_limit;
  double objective = 0.0;
  std::vector<double> x;
};

// maximize c.x  subject to  eq.x = eq_rhs,  ineq.x >= 0,  x free.
//
// Dense two-phase tableau simplex with Bland's rule; instances here are tiny
// ((p+1)/2 variables and about p rows), so determinism beats sophistication.
SimplexResult simplex_maximize(const std::vector<double>& c,
                               const std::vector<std::vector<double>>& eq,
                               const std::vector<double>& eq_rhs,
                               const std::vector<std::vector<double>>& ineq,
                               double feas_tol = 1e-9);

}  // namespace apbound
