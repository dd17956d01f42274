// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "apbound/qfield.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace apbound {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

QuadExt::QuadExt(Rational a, Rational b, int m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (m_ != 1 && m_ != 3 && m_ != 5)
    throw std::domain_error("QuadExt: radicand must be 1, 3 or 5");
  if (m_ == 1 && b_ != 0)
    throw std::domain_error("QuadExt: radicand 1 forces a zero radical part");
  normalize();
}

void QuadExt::normalize() {
  if (b_ == 0) m_ = 1;
}

int QuadExt::common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.m_ == y.m_) return x.m_;
  if (x.m_ == 1) return y.m_;
  if (y.m_ == 1) return x.m_;
  throw std::domain_error("QuadExt: mixed radicals sqrt(" + std::to_string(x.m_) +
                          ") and sqrt(" + std::to_string(y.m_) + ")");
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  int m = QuadExt::common_radicand(x, y);
  return QuadExt(x.a_ + y.a_, x.b_ + y.b_, m);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  int m = QuadExt::common_radicand(x, y);
  return QuadExt(x.a_ - y.a_, x.b_ - y.b_, m);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  int m = QuadExt::common_radicand(x, y);
  return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * m, x.a_ * y.b_ + x.b_ * y.a_, m);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
  int m = QuadExt::common_radicand(x, y);
  // Multiply by the conjugate; the norm a^2 - m b^2 is nonzero since
  // sqrt(m) is irrational for m in {3, 5}.
  Rational norm = y.a_ * y.a_ - Rational(m) * y.b_ * y.b_;
  return QuadExt((x.a_ * y.a_ - Rational(m) * x.b_ * y.b_) / norm,
                 (x.b_ * y.a_ - x.a_ * y.b_) / norm, m);
}

int QuadExt::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the sign is sgn(a) iff a^2 > m b^2 (equality is
  // impossible, sqrt(m) is irrational for m in {3, 5}).
  Rational lhs = a_ * a_;
  Rational rhs = Rational(m_) * b_ * b_;
  return lhs > rhs ? sa : -sa;
}

double QuadExt::to_double() const {
  double root = m_ == 5 ? 2.2360679774997896964 : (m_ == 3 ? 1.7320508075688772935 : 1.0);
  return a_.get_d() + b_.get_d() * root;
}

std::string QuadExt::str() const {
  if (b_ == 0) return to_string(a_);
  std::ostringstream os;
  std::string rad = "sqrt(" + std::to_string(m_) + ")";
  if (a_ != 0) {
    os << to_string(a_);
    os << (b_ > 0 ? " + " : " - ");
    Rational ab = abs(b_);
    if (ab != 1) os << to_string(ab) << "*";
    os << rad;
  } else {
    if (b_ == 1) {
      os << rad;
    } else if (b_ == -1) {
      os << "-" << rad;
    } else {
      os << to_string(b_) << "*" << rad;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

QuadExt exact_cos(long j, long q) {
  if (q <= 0) throw std::domain_error("exact_cos: nonpositive denominator");
  j %= q;
  if (j < 0) j += q;
  long g = std::gcd(j, q);
  long num = j / g, den = q / g;  // reduced angle num/den of a full turn
  // cos is even: fold to num <= den/2
  if (2 * num > den) num = den - num;
  const Rational half = make_rational(1, 2);
  const Rational quarter = make_rational(1, 4);
  switch (den) {
    case 1:
      return QuadExt(1);
    case 2:
      return QuadExt(-1);
    case 3:
      return QuadExt(-half);
    case 4:
      return QuadExt(0);
    case 6:
      return QuadExt(half);
    case 5:
      // cos 72 = (sqrt5 - 1)/4, cos 144 = -(sqrt5 + 1)/4
      if (num == 1) return QuadExt(-quarter, quarter, 5);
      return QuadExt(-quarter, -quarter, 5);
    case 10:
      // reduced num is odd here; cos 36 = (sqrt5 + 1)/4, cos 108 = (1 - sqrt5)/4
      if (num == 1) return QuadExt(quarter, quarter, 5);
      return QuadExt(quarter, -quarter, 5);
    case 12:
      // reduced num in {1, 5}; cos 30 = sqrt3/2, cos 150 = -sqrt3/2
      if (num == 1) return QuadExt(Rational(0), half, 3);
      return QuadExt(Rational(0), -half, 3);
    default:
      throw std::domain_error("exact_cos: cos(2*pi*" + std::to_string(num) + "/" +
                              std::to_string(den) + ") is outside Q(sqrt(3)) u Q(sqrt(5))");
  }
}

}  // namespace apbound
