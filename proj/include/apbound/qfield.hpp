// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace apbound {

// Arbitrary-precision rational. GMP keeps values canonical (reduced,
// positive denominator) as long as inputs are; use make_rational for
// literals that may not be reduced.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);

// Exact element a + b*sqrt(m) of the real quadratic field Q(sqrt(m)),
// m in {1, 3, 5}. m == 1 encodes a plain rational and forces b == 0,
// so equality is componentwise on normalized values. Arithmetic never
// mixes two distinct radicals; no certificate needs sqrt(3) and sqrt(5)
// in the same expression.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), m_(1) {}
  QuadExt(long value) : a_(value), b_(0), m_(1) {}  // NOLINT: implicit by design
  QuadExt(Rational value) : a_(std::move(value)), b_(0), m_(1) {}  // NOLINT
  QuadExt(Rational a, Rational b, int m);

  const Rational& rat_part() const { return a_; }
  const Rational& rad_part() const { return b_; }
  int radicand() const { return m_; }

  bool is_rational() const { return m_ == 1; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadExt conjugate() const { return QuadExt(a_, -b_, m_); }

  // Exact sign of the real value: -1, 0 or +1.
  int sign() const;

  double to_double() const;

  // Canonical rendering: "a", "b*sqrt(m)" or "a + b*sqrt(m)" with reduced
  // fractions, e.g. "(21 - 2*sqrt(3))/286" renders as "21/286 - 1/143*sqrt(3)".
  std::string str() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_, m_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);

  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  // Order of the underlying real numbers, exact.
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

 private:
  Rational a_, b_;
  int m_;
  void normalize();
  static int common_radicand(const QuadExt& x, const QuadExt& y);
};

inline QuadExt sqrt_of(int m) { return QuadExt(Rational(0), Rational(1), m); }

// cos(2*pi*j/q) as an exact QuadExt. Supported whenever the reduced
// denominator of j/q lies in {1, 2, 3, 4, 5, 6, 10, 12}; in particular
// q in {1, 2, 3, 4, 6, 10, 12} works for every j. Anything else (e.g.
// q = 16) throws std::domain_error; callers must not fall back to
// floating point.
QuadExt exact_cos(long j, long q);

}  // namespace apbound
