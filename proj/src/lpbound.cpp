// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "apbound/lpbound.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "apbound/modgroup.hpp"
#include "apbound/sympoly.hpp"

namespace apbound {

namespace {

constexpr double kPositivityTol = 1e-6;
constexpr double kFeasTol = 1e-9;

// Exact reduced row echelon form; rows are over the free u variables plus the
// right-hand side in the last column.
std::vector<std::vector<Rational>> rref(std::vector<std::vector<Rational>> m) {
  const size_t cols = m.empty() ? 0 : m[0].size();
  size_t lead = 0;
  for (size_t r = 0; r < m.size() && lead < cols; ++r) {
    size_t pivot = r;
    while (pivot < m.size() && m[pivot][lead] == 0) ++pivot;
    if (pivot == m.size()) {
      --r;
      ++lead;
      continue;
    }
    std::swap(m[r], m[pivot]);
    const Rational inv = m[r][lead];
    for (auto& v : m[r]) v /= inv;
    for (size_t r2 = 0; r2 < m.size(); ++r2) {
      if (r2 == r || m[r2][lead] == 0) continue;
      const Rational f = m[r2][lead];
      for (size_t j = 0; j < cols; ++j) m[r2][j] -= f * m[r][j];
    }
    ++lead;
  }
  // Drop zero rows; the remainder is a canonical basis of the row space.
  std::vector<std::vector<Rational>> out;
  for (auto& row : m) {
    bool zero = true;
    for (const auto& v : row)
      if (v != 0) {
        zero = false;
        break;
      }
    if (!zero) out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<Rational>> augment(const std::vector<std::vector<long>>& a,
                                           const std::vector<long>& rhs) {
  std::vector<std::vector<Rational>> m;
  for (size_t r = 0; r < a.size(); ++r) {
    std::vector<Rational> row;
    row.reserve(a[r].size() + 1);
    for (long v : a[r]) row.emplace_back(v);
    row.emplace_back(rhs[r]);
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

LpInstance build_constraints(int p) {
  PrimeModulus pm(p);
  LpInstance inst;
  inst.p = p;
  inst.r = primitive_root(p);
  inst.num_vars = (p + 1) / 2;
  const int ord = p - 1;
  const int half = ord / 2;

  // Circulant eigenvalue rows lambda_j, j = 0..(p-1)/2; row 0 is u_+ >= 0.
  for (int j = 0; j <= half; ++j) {
    std::vector<double> row(inst.num_vars);
    row[0] = 1.0;
    for (int l = 1; l < half; ++l) row[l] = 2.0 * std::cos(2.0 * M_PI * l * j / ord);
    row[half] = std::cos(M_PI * j);
    inst.ineq_rows.push_back(std::move(row));
  }

  // Orbit-derived equality rows through the sympoly oracle: expand the
  // symmetric cubic sum_c Xhat^T U' Xhat X_c one free variable at a time and
  // read off each orbit's coefficient.
  const OrbitTable table = affine_orbits3(pm);
  const int d = table.orbit_count();
  std::vector<long> powers(ord);
  powers[0] = 1;
  for (int a = 1; a < ord; ++a) powers[a] = powers[a - 1] * inst.r % p;

  inst.eq_rows.assign(d, std::vector<long>(inst.num_vars, 0));
  inst.eq_rhs.assign(d, 0);
  inst.eq_rhs[table.ap_orbit()] = 1;
  for (int k = 1; k <= half; ++k) {
    SparsePoly poly(p);
    for (int c = 0; c < p; ++c) {
      const Monomial xc = Monomial::x(c);
      for (int a = 0; a < ord; ++a) {
        const int u = static_cast<int>((powers[a] + c) % p);
        const int v1 = static_cast<int>((powers[(a + k) % ord] + c) % p);
        poly.add_term(Monomial::xx(u, v1).times(xc), QuadExt(1));
        if (2 * k != ord) {
          const int v2 = static_cast<int>((powers[(a - k + ord) % ord] + c) % p);
          poly.add_term(Monomial::xx(u, v2).times(xc), QuadExt(1));
        }
      }
    }
    const OmegaVector w = omega_of(poly, table);
    if (!w.a0.is_zero() || !w.a3.is_zero() || !w.a21.is_zero())
      throw std::logic_error("build_constraints: off-diagonal column leaks outside triples");
    for (int t = 0; t < d; ++t) {
      const QuadExt& c = w.a111[t];
      if (!c.is_rational() || c.rat_part().get_den() != 1)
        throw std::logic_error("build_constraints: non-integer orbit coefficient");
      inst.eq_rows[t][k] = c.rat_part().get_num().get_si();
    }
  }

  // Paper-literal V and v: count the representations {0,1,r^i} =
  // {c, c + r^t, c + r^{t+j}} anchor by anchor, exponents 1..p-2.
  std::vector<int> dlog(p, -1);
  for (int a = 0; a < ord; ++a) dlog[powers[a]] = a;
  inst.literal_V.assign(p - 2, std::vector<long>(inst.num_vars, 0));
  inst.literal_v.assign(p - 2, 0);
  for (int i = 1; i <= p - 2; ++i) {
    const int ri = static_cast<int>(powers[i]);
    const Triple t{0, 1, ri};  // ri >= 2 here
    Triple sorted = t;
    std::sort(sorted.begin(), sorted.end());
    for (int c : sorted) {
      int rest[2];
      int n_rest = 0;
      for (int e : sorted)
        if (e != c) rest[n_rest++] = (e - c + p) % p;
      const int j = ((dlog[rest[1]] - dlog[rest[0]]) % ord + ord) % ord;
      // Both orders of the pair land on the same folded column.
      inst.literal_V[i - 1][std::min(j, ord - j)] += 2;
    }
    inst.literal_v[i - 1] = table.orbit_of(sorted) == table.ap_orbit() ? 1 : 0;
  }

  // The two systems must cut out the same affine set.
  if (rref(augment(inst.eq_rows, inst.eq_rhs)) != rref(augment(inst.literal_V, inst.literal_v)))
    throw std::logic_error("build_constraints: literal V/v disagrees with orbit-derived rows");
  return inst;
}

LpResult solve_lp(const LpInstance& inst, int D) {
  if (D < 0 || D > inst.p) throw std::invalid_argument("solve_lp: D out of range");
  const int n = inst.num_vars;
  // The factor D(D-1) is constant; solving without it keeps the tableau well
  // scaled, and the bound is rescaled afterwards.
  std::vector<double> c(n, 0.0);
  const double scale = static_cast<double>(D) * (D - 1);
  for (int i = 0; i < n; ++i) {
    const double weight = (i == 0 || i == n - 1) ? 1.0 : 2.0;  // u_+ coefficients
    c[i] = static_cast<double>(D - 1) / (inst.p - 1) * weight - (i == 0 ? 1.0 : 0.0);
  }
  std::vector<std::vector<double>> eq;
  std::vector<double> rhs;
  for (size_t r = 0; r < inst.eq_rows.size(); ++r) {
    std::vector<double> row(inst.eq_rows[r].begin(), inst.eq_rows[r].end());
    eq.push_back(std::move(row));
    rhs.push_back(static_cast<double>(inst.eq_rhs[r]));
  }

  const SimplexResult sr = simplex_maximize(c, eq, rhs, inst.ineq_rows, kFeasTol);
  LpResult result;
  result.status = sr.status;
  if (sr.status != LpStatus::optimal) return result;
  result.u_opt = sr.x;
  result.bound = sr.objective * scale;
  for (size_t r = 0; r < eq.size(); ++r) {
    double v = -rhs[r];
    for (int i = 0; i < n; ++i) v += eq[r][i] * sr.x[i];
    result.max_violation = std::max(result.max_violation, std::fabs(v));
  }
  for (const auto& row : inst.ineq_rows) {
    double v = 0;
    for (int i = 0; i < n; ++i) v += row[i] * sr.x[i];
    result.max_violation = std::max(result.max_violation, std::max(0.0, -v));
  }
  // optimal status promises a feasible point; a sloppy recheck downgrades it
  result.status = result.max_violation <= 100 * kFeasTol ? LpStatus::optimal
                                                         : LpStatus::iteration_limit;
  return result;
}

LpResult solve_lp(int p, int D) { return solve_lp(build_constraints(p), D); }

int threshold(int p) {
  const LpInstance inst = build_constraints(p);
  const int lo = (p + 6) / 4;  // ceil((p+3)/4)
  const int hi = (p + 3) / 2;
  for (int D = 0; D <= p; ++D) {
    const LpResult res = solve_lp(inst, D);
    if (res.status != LpStatus::optimal)
      throw std::runtime_error("threshold: LP failed at p=" + std::to_string(p) +
                               " D=" + std::to_string(D));
    if (res.bound > kPositivityTol) {
      if (D < lo || D > hi)
        throw std::logic_error("threshold: D*=" + std::to_string(D) +
                               " escapes the bracket [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "] at p=" + std::to_string(p));
      return D;
    }
  }
  throw std::logic_error("threshold: no positive bound up to D=p at p=" + std::to_string(p));
}

std::vector<ThresholdRow> threshold_curve(int p_max) {
  std::vector<ThresholdRow> rows;
  for (int p = 5; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    ThresholdRow row;
    row.p = p;
    row.d_star = threshold(p);
    row.delta_star = static_cast<double>(row.d_star) / p;
    row.lower_bracket = (p + 6) / 4;
    row.upper_bracket = (p + 3) / 2;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace apbound
