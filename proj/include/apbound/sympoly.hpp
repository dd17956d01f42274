// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "apbound/modgroup.hpp"
#include "apbound/qfield.hpp"

namespace apbound {

// A monomial in X_0..X_{p-1} of total degree <= 3, stored as a sorted index
// multiset. X_i^2 X_j and X_j^2 X_i are distinct monomials.
struct Monomial {
  std::array<std::uint8_t, 3> idx{{0xff, 0xff, 0xff}};  // ascending, 0xff pads
  std::uint8_t degree = 0;

  static Monomial one() { return {}; }
  static Monomial x(int i);
  static Monomial xx(int i, int j);
  static Monomial xxx(int i, int j, int k);

  Monomial times(const Monomial& other) const;  // throws past degree 3
  std::string str() const;

  friend bool operator<(const Monomial& a, const Monomial& b) {
    return std::tie(a.degree, a.idx) < std::tie(b.degree, b.idx);
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.idx == b.idx;
  }
};

// Sparse polynomial over Q(sqrt(m)) in the variables X_0..X_{p-1}. Zero
// coefficients are never stored.
class SparsePoly {
 public:
  explicit SparsePoly(int p);

  int p() const { return p_; }
  const std::map<Monomial, QuadExt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(const Monomial& m, const QuadExt& c);
  QuadExt coefficient(const Monomial& m) const;

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);

 private:
  int p_;
  std::map<Monomial, QuadExt> terms_;
};

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_sub(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_scale(const SparsePoly& a, const QuadExt& c);
// Product, guarded: throws std::domain_error if any result monomial would
// exceed max_degree (default 3, the degree every consumer here expects).
SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b, int max_degree = 3);

// Exact expansion of (sum_i coeffs[i] X_i)^2.
SparsePoly square_linear(int p, const std::map<int, QuadExt>& coeffs);

// sum over the arithmetic-progression orbit of X_i X_j X_k, coefficient 1.
SparsePoly ap_polynomial(const OrbitTable& table);

// Coefficients of an affine-invariant cubic on the invariant classes:
// constant, sum X_i^3, sum_{i != j} X_i^2 X_j, and one slot per orbit of
// distinct triples (slot order = orbit id order; slot 0 is the AP orbit).
struct OmegaVector {
  QuadExt a0, a3, a21;
  std::vector<QuadExt> a111;

  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const OmegaVector& x, const OmegaVector& y) {
    return x.a0 == y.a0 && x.a3 == y.a3 && x.a21 == y.a21 && x.a111 == y.a111;
  }
  friend bool operator!=(const OmegaVector& x, const OmegaVector& y) { return !(x == y); }
};

// Projection onto the omega coordinates. Throws not_invariant naming the
// first offending monomial pair when coefficients disagree inside a class.
OmegaVector omega_of(const SparsePoly& poly, const OrbitTable& table);

// Inverse of omega_of on invariant polynomials.
SparsePoly reconstruct(const OmegaVector& omega, const OrbitTable& table);

}  // namespace apbound
