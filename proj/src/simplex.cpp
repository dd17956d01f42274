// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "apbound/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace apbound {

namespace {

// Tableau over nonnegative standard-form variables z:
//   x = z[0..n) - z[n..2n)   (free variable split)
//   surplus s = ineq.x       (z[2n..2n+m2))
// Rows: eq.x = rhs and ineq.x - s = 0, then artificials for phase 1.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<double>>& rows, const std::vector<double>& rhs)
      : m_(rows.size()), n_(rows.empty() ? 0 : rows[0].size()) {
    a_ = rows;
    b_ = rhs;
    // Make every right-hand side nonnegative before adding artificials.
    for (size_t r = 0; r < m_; ++r) {
      if (b_[r] < 0) {
        b_[r] = -b_[r];
        for (double& v : a_[r]) v = -v;
      }
    }
    basis_.resize(m_);
    for (size_t r = 0; r < m_; ++r) {
      for (size_t r2 = 0; r2 < m_; ++r2) a_[r2].push_back(r2 == r ? 1.0 : 0.0);
      basis_[r] = n_ + r;  // artificial
    }
    cols_ = n_ + m_;
  }

  // Minimizes the artificial sum; returns the attained value.
  double phase1(double tol) {
    std::vector<double> cost(cols_, 0.0);
    for (size_t j = n_; j < cols_; ++j) cost[j] = 1.0;
    run(cost, /*maximize=*/false, tol);
    double v = 0.0;
    for (size_t r = 0; r < m_; ++r)
      if (basis_[r] >= n_) v += b_[r];
    // Pivot remaining zero-level artificials out so phase 2 never touches them.
    for (size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      for (size_t j = 0; j < n_; ++j) {
        if (std::fabs(a_[r][j]) > tol) {
          pivot(r, j);
          break;
        }
      }
    }
    return v;
  }

  bool phase2(const std::vector<double>& obj, double tol) {
    std::vector<double> cost(cols_, 0.0);
    for (size_t j = 0; j < n_; ++j) cost[j] = obj[j];
    forbid_artificials_ = true;  // a basic artificial on a redundant row stays at level 0
    return run(cost, /*maximize=*/true, tol);
  }

  std::vector<double> solution() const {
    std::vector<double> z(n_, 0.0);
    for (size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) z[basis_[r]] = b_[r];
    return z;
  }

 private:
  void pivot(size_t row, size_t col) {
    const double piv = a_[row][col];
    for (double& v : a_[row]) v /= piv;
    b_[row] /= piv;
    for (size_t r = 0; r < m_; ++r) {
      if (r == row) continue;
      const double f = a_[r][col];
      if (f == 0.0) continue;
      for (size_t j = 0; j < cols_; ++j) a_[r][j] -= f * a_[row][j];
      b_[r] -= f * b_[row];
    }
    basis_[row] = col;
  }

  // Entering by steepest reduced cost, falling back to Bland's smallest-index
  // rule after a while so degenerate bases cannot cycle. Returns false only
  // when an unbounded direction is certain.
  bool run(const std::vector<double>& cost, bool maximize, double tol) {
    const double sgn = maximize ? 1.0 : -1.0;
    constexpr double kPivotTol = 1e-9;
    constexpr long kBlandAfter = 5000;
    for (long iter = 0; iter < 200000; ++iter) {
      std::vector<double> y(m_);
      for (size_t r = 0; r < m_; ++r) y[r] = cost[basis_[r]];
      const size_t scan = forbid_artificials_ ? n_ : cols_;
      size_t enter = cols_;
      double enter_red = 0.0;
      for (size_t j = 0; j < scan; ++j) {
        double red = cost[j];
        for (size_t r = 0; r < m_; ++r) red -= y[r] * a_[r][j];
        if (sgn * red > tol) {
          if (iter >= kBlandAfter) {
            enter = j;
            enter_red = sgn * red;
            break;
          }
          if (enter == cols_ || sgn * red > enter_red) {
            enter = j;
            enter_red = sgn * red;
          }
        }
      }
      if (enter == cols_) return true;  // optimal
      size_t leave = m_;
      double best = 0.0;
      for (size_t r = 0; r < m_; ++r) {
        if (a_[r][enter] > kPivotTol) {
          const double ratio = b_[r] / a_[r][enter];
          if (leave == m_ || ratio < best - kPivotTol ||
              (ratio < best + kPivotTol && basis_[r] < basis_[leave])) {
            leave = r;
            best = ratio;
          }
        }
      }
      if (leave == m_) {
        // No usable pivot. A marginal reduced cost is converged noise, a
        // substantial one is a real unbounded ray.
        return enter_red <= 1e-6;
      }
      pivot(leave, enter);
    }
    throw std::runtime_error("simplex: iteration limit hit");
  }

  size_t m_, n_, cols_ = 0;
  bool forbid_artificials_ = false;
  std::vector<std::vector<double>> a_;
  std::vector<double> b_;
  std::vector<size_t> basis_;
};

}  // namespace

SimplexResult simplex_maximize(const std::vector<double>& c,
                               const std::vector<std::vector<double>>& eq,
                               const std::vector<double>& eq_rhs,
                               const std::vector<std::vector<double>>& ineq, double feas_tol) {
  const size_t n = c.size();
  const size_t m2 = ineq.size();
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (size_t r = 0; r < eq.size(); ++r) {
    std::vector<double> row(2 * n + m2, 0.0);
    for (size_t j = 0; j < n; ++j) {
      row[j] = eq[r][j];
      row[n + j] = -eq[r][j];
    }
    rows.push_back(std::move(row));
    rhs.push_back(eq_rhs[r]);
  }
  for (size_t r = 0; r < m2; ++r) {
    std::vector<double> row(2 * n + m2, 0.0);
    for (size_t j = 0; j < n; ++j) {
      row[j] = ineq[r][j];
      row[n + j] = -ineq[r][j];
    }
    row[2 * n + r] = -1.0;  // surplus: ineq.x - s = 0, s >= 0
    rows.push_back(std::move(row));
    rhs.push_back(0.0);
  }

  Tableau t(rows, rhs);
  SimplexResult result;
  if (t.phase1(feas_tol) > feas_tol * 10) {
    result.status = LpStatus::infeasible;
    return result;
  }
  std::vector<double> obj(2 * n + m2, 0.0);
  for (size_t j = 0; j < n; ++j) {
    obj[j] = c[j];
    obj[n + j] = -c[j];
  }
  bool bounded;
  try {
    bounded = t.phase2(obj, feas_tol);
  } catch (const std::runtime_error&) {
    result.status = LpStatus::iteration_limit;
    return result;
  }
  if (!bounded) {
    result.status = LpStatus::unbounded;
    return result;
  }
  const std::vector<double> z = t.solution();
  result.x.resize(n);
  result.objective = 0.0;
  for (size_t j = 0; j < n; ++j) {
    result.x[j] = z[j] - z[n + j];
    result.objective += c[j] * result.x[j];
  }
  result.status = LpStatus::optimal;
  return result;
}

}  // namespace apbound
