// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "apbound/sympoly.hpp"

#include <doctest.h>

#include <random>

#include "apbound/errors.hpp"

using namespace apbound;

namespace {

// Naive O(p^2) expansion of (sum c_i X_i)^2; the independent oracle for
// square_linear.
SparsePoly square_naive(int p, const std::map<int, QuadExt>& coeffs) {
  SparsePoly r(p);
  for (const auto& [i, ci] : coeffs)
    for (const auto& [j, cj] : coeffs) r.add_term(Monomial::xx(i, j), ci * cj);
  return r;
}

SparsePoly times_x(const SparsePoly& poly, int i) {
  SparsePoly xi(poly.p());
  xi.add_term(Monomial::x(i), QuadExt(1));
  return poly_mul(poly, xi);
}

// Average of a polynomial over the affine group; always omega-projectable.
SparsePoly group_average(const SparsePoly& poly, int p) {
  SparsePoly avg(p);
  for (int a = 1; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      for (const auto& [m, c] : poly.terms()) {
        if (m.degree == 0) {
          avg.add_term(m, c);
          continue;
        }
        int idx[3];
        for (int t = 0; t < m.degree; ++t) idx[t] = (a * m.idx[t] + b) % p;
        Monomial mapped;
        if (m.degree == 1)
          mapped = Monomial::x(idx[0]);
        else if (m.degree == 2)
          mapped = Monomial::xx(idx[0], idx[1]);
        else
          mapped = Monomial::xxx(idx[0], idx[1], idx[2]);
        avg.add_term(mapped, c);
      }
    }
  }
  return poly_scale(avg, QuadExt(make_rational(1, static_cast<long>(p) * (p - 1))));
}

}  // namespace

TEST_SUITE_BEGIN("sympoly");

TEST_CASE("square_linear basics") {
  SparsePoly sq = square_linear(5, {{0, QuadExt(1)}, {1, QuadExt(-1)}});
  CHECK(sq.coefficient(Monomial::xx(0, 0)) == QuadExt(1));
  CHECK(sq.coefficient(Monomial::xx(0, 1)) == QuadExt(-2));
  CHECK(sq.coefficient(Monomial::xx(1, 1)) == QuadExt(1));
  CHECK(sq.terms().size() == 3);
}

TEST_CASE("square_linear matches the naive oracle") {
  // (D X_0 - sum_j X_j)^2 at p = 5 with D = 2
  std::map<int, QuadExt> coeffs;
  for (int j = 0; j < 5; ++j) coeffs[j] = QuadExt(-1);
  coeffs[0] += QuadExt(2);
  const SparsePoly fast = square_linear(5, coeffs);
  const SparsePoly naive = square_naive(5, coeffs);
  CHECK(poly_sub(fast, naive).is_zero());
  CHECK(fast.coefficient(Monomial::xx(0, 0)) == QuadExt(1));  // (D-1)^2 = 1
  // 5 squares + C(5,2) cross terms
  CHECK(fast.terms().size() == 15);
}

TEST_CASE("alternating-sign square has unit diagonal") {
  // The p=17 certificate form: coefficients (-1)^j on the 16 powers of 3.
  std::map<int, QuadExt> coeffs;
  long pw = 1;
  for (int j = 0; j < 16; ++j) {
    coeffs[static_cast<int>(pw)] = QuadExt(j % 2 == 0 ? 1 : -1);
    pw = pw * 3 % 17;
  }
  const SparsePoly sq = square_linear(17, coeffs);
  for (const auto& [i, c] : coeffs) CHECK(sq.coefficient(Monomial::xx(i, i)) == QuadExt(1));
}

TEST_CASE("variable indices are bounded") {
  CHECK_THROWS_AS(SparsePoly(256), std::invalid_argument);
  SparsePoly ok(251);
  ok.add_term(Monomial::x(250), QuadExt(1));
  CHECK_THROWS_AS(ok.add_term(Monomial::x(251), QuadExt(1)), std::invalid_argument);
}

TEST_CASE("poly_mul guards the degree and the modulus") {
  SparsePoly quad(5);
  quad.add_term(Monomial::xx(0, 1), QuadExt(1));
  SparsePoly lin(5);
  lin.add_term(Monomial::x(2), QuadExt(1));
  CHECK(poly_mul(quad, lin).coefficient(Monomial::xxx(0, 1, 2)) == QuadExt(1));
  CHECK_THROWS_AS(poly_mul(quad, quad), std::domain_error);  // degree 4
  SparsePoly other(7);
  CHECK_THROWS_AS(poly_mul(quad, other), std::invalid_argument);
}

TEST_CASE("ap_polynomial monomial counts") {
  CHECK(ap_polynomial(affine_orbits3(PrimeModulus(5))).terms().size() == 10);
  CHECK(ap_polynomial(affine_orbits3(PrimeModulus(7))).terms().size() == 21);
  CHECK(ap_polynomial(affine_orbits3(PrimeModulus(17))).terms().size() == 136);
  for (int p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const OrbitTable t = affine_orbits3(PrimeModulus(p));
    CHECK(static_cast<long>(ap_polynomial(t).terms().size()) ==
          t.orbit_sizes()[t.ap_orbit()]);
  }
}

TEST_CASE("omega projection of the AP polynomial and constants") {
  const OrbitTable t7 = affine_orbits3(PrimeModulus(7));
  const OmegaVector w = omega_of(ap_polynomial(t7), t7);
  CHECK(w.a0 == QuadExt(0));
  CHECK(w.a3 == QuadExt(0));
  CHECK(w.a21 == QuadExt(0));
  CHECK(w.a111 == std::vector<QuadExt>{QuadExt(1), QuadExt(0)});

  SparsePoly c(7);
  c.add_term(Monomial::one(), QuadExt(-5));
  const OmegaVector wc = omega_of(c, t7);
  CHECK(wc.a0 == QuadExt(-5));
  CHECK(wc.a111 == std::vector<QuadExt>{QuadExt(0), QuadExt(0)});
}

TEST_CASE("omega line of the projection-square sum at p=5, D=2") {
  const int p = 5;
  const long D = 2;
  const OrbitTable table = affine_orbits3(PrimeModulus(p));
  SparsePoly total(p);
  for (int i = 0; i < p; ++i) {
    std::map<int, QuadExt> coeffs;
    for (int j = 0; j < p; ++j) coeffs[j] = QuadExt(-1);
    coeffs[i] += QuadExt(D);
    total += times_x(square_linear(p, coeffs), i);
  }
  total = poly_scale(total, QuadExt(make_rational(1, p - 1)));
  const OmegaVector w = omega_of(total, table);
  CHECK(w.a0 == QuadExt(0));
  CHECK(w.a3 == QuadExt(make_rational(1, 4)));    // (D-1)^2/(p-1)
  CHECK(w.a21 == QuadExt(make_rational(-1, 4)));  // (3-2D)/(p-1)
  CHECK(w.a111 == std::vector<QuadExt>{QuadExt(make_rational(3, 2))});  // 6/(p-1)
}

TEST_CASE("omega_of rejects non-invariant input naming the offenders") {
  const OrbitTable t7 = affine_orbits3(PrimeModulus(7));
  SparsePoly lone(7);
  lone.add_term(Monomial::xxx(0, 1, 2), QuadExt(1));
  CHECK_THROWS_AS(omega_of(lone, t7), not_invariant);
  try {
    omega_of(lone, t7);
  } catch (const not_invariant& e) {
    const std::string msg = e.what();
    CHECK(msg.find("X0*X1*X2") != std::string::npos);
  }
  SparsePoly drop = ap_polynomial(t7);
  drop.add_term(Monomial::xxx(0, 1, 2), QuadExt(-1));  // knock one member out
  CHECK_THROWS_AS(omega_of(drop, t7), not_invariant);
  SparsePoly deg1(7);
  deg1.add_term(Monomial::x(3), QuadExt(1));
  CHECK_THROWS_AS(omega_of(deg1, t7), not_invariant);
}

TEST_CASE("round trip and linearity on group-averaged random cubics") {
  std::mt19937 rng(99);
  for (int p : {5, 7, 11, 13}) {
    const OrbitTable table = affine_orbits3(PrimeModulus(p));
    std::uniform_int_distribution<int> var(0, p - 1);
    std::uniform_int_distribution<long> coef(-6, 6);
    for (int iter = 0; iter < 25; ++iter) {
      SparsePoly raw(p);
      raw.add_term(Monomial::one(), QuadExt(coef(rng)));
      for (int t = 0; t < 6; ++t)
        raw.add_term(Monomial::xxx(var(rng), var(rng), var(rng)), QuadExt(coef(rng)));
      const SparsePoly inv = group_average(raw, p);
      const OmegaVector w = omega_of(inv, table);
      CHECK(poly_sub(reconstruct(w, table), inv).is_zero());

      SparsePoly raw2(p);
      for (int t = 0; t < 4; ++t)
        raw2.add_term(Monomial::xxx(var(rng), var(rng), var(rng)), QuadExt(coef(rng)));
      const SparsePoly inv2 = group_average(raw2, p);
      const OmegaVector w2 = omega_of(inv2, table);
      const OmegaVector wsum = omega_of(poly_add(inv, inv2), table);
      CHECK(wsum.a0 == w.a0 + w2.a0);
      CHECK(wsum.a3 == w.a3 + w2.a3);
      CHECK(wsum.a21 == w.a21 + w2.a21);
      for (int t = 0; t < table.orbit_count(); ++t)
        CHECK(wsum.a111[t] == w.a111[t] + w2.a111[t]);
    }
  }
}

TEST_SUITE_END();
