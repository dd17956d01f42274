// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "apbound/qfield.hpp"
#include "apbound/simplex.hpp"

namespace apbound {

// The D-independent part of the degree-3 LP for one prime p.
//
// Free variables u_0..u_{(p-1)/2}. Inequality row j (j = 0..(p-1)/2) applied
// to u is the circulant eigenvalue
//   lambda_j(u) = u_0 + sum_{l=1}^{(p-3)/2} 2 u_l cos(2 pi l j/(p-1))
//               + u_{(p-1)/2} cos(pi j);
// row 0 is the all-ones weighting u_+ >= 0. Equality rows force, per orbit of
// distinct 3-subsets, the coefficient that the symmetric cubic
// sum_i X^T U' X X_i produces on that orbit: 1 on the arithmetic-progression
// orbit and 0 elsewhere.
struct LpInstance {
  int p = 0;
  int r = 0;          // smallest primitive root
  int num_vars = 0;   // (p+1)/2
  std::vector<std::vector<double>> ineq_rows;
  std::vector<std::vector<long>> eq_rows;  // exact integer coefficients
  std::vector<long> eq_rhs;
  // The literal V and v of the published formulation, under the convention: exponents i,j in
  // {1..p-2} (r^0 = 1 collapses {0,1,r^0} to a 2-set), V_{ij} counting the
  // representations {0,1,r^i} = {c, c + r^t, c + r^{t+j}} over all c and t,
  // columns folded onto the free variables, and v marking every row whose
  // triple {0,1,r^i} lies in the AP orbit. Row-space equality with the
  // orbit-derived rows is checked at build time.
  std::vector<std::vector<long>> literal_V;
  std::vector<long> literal_v;
};

LpInstance build_constraints(int p);

struct LpResult {
  double bound = 0.0;
  std::vector<double> u_opt;
  LpStatus status = LpStatus::iteration_limit;
  double max_violation = 0.0;  // constraint recheck at the solution
};

// Maximizes ((D-1)/(p-1) u_+ - u_0) * D(D-1) over the instance.
LpResult solve_lp(const LpInstance& instance, int D);
LpResult solve_lp(int p, int D);

// Smallest D with LP bound above the positivity tolerance; guaranteed to lie
// in the bracket [ceil((p+3)/4), (p+3)/2], else throws.
int threshold(int p);

struct ThresholdRow {
  int p = 0;
  int d_star = 0;
  double delta_star = 0.0;
  int lower_bracket = 0;
  int upper_bracket = 0;
};

std::vector<ThresholdRow> threshold_curve(int p_max);

}  // namespace apbound
