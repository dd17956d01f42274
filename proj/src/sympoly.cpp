// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "apbound/sympoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "apbound/errors.hpp"

namespace apbound {

Monomial Monomial::x(int i) {
  Monomial m;
  m.degree = 1;
  m.idx[0] = static_cast<std::uint8_t>(i);
  return m;
}

Monomial Monomial::xx(int i, int j) {
  if (i > j) std::swap(i, j);
  Monomial m;
  m.degree = 2;
  m.idx[0] = static_cast<std::uint8_t>(i);
  m.idx[1] = static_cast<std::uint8_t>(j);
  return m;
}

Monomial Monomial::xxx(int i, int j, int k) {
  std::array<int, 3> v{i, j, k};
  std::sort(v.begin(), v.end());
  Monomial m;
  m.degree = 3;
  for (int t = 0; t < 3; ++t) m.idx[t] = static_cast<std::uint8_t>(v[t]);
  return m;
}

Monomial Monomial::times(const Monomial& other) const {
  if (degree + other.degree > 3)
    throw std::domain_error("Monomial: product exceeds degree 3 (" + str() + " * " +
                            other.str() + ")");
  std::array<std::uint8_t, 3> merged{{0xff, 0xff, 0xff}};
  int n = 0;
  for (int t = 0; t < degree; ++t) merged[n++] = idx[t];
  for (int t = 0; t < other.degree; ++t) merged[n++] = other.idx[t];
  std::sort(merged.begin(), merged.begin() + n);
  Monomial m;
  m.degree = static_cast<std::uint8_t>(n);
  m.idx = merged;
  return m;
}

std::string Monomial::str() const {
  if (degree == 0) return "1";
  std::ostringstream os;
  for (int t = 0; t < degree;) {
    int j = t;
    while (j < degree && idx[j] == idx[t]) ++j;
    if (t > 0) os << "*";
    os << "X" << static_cast<int>(idx[t]);
    if (j - t > 1) os << "^" << (j - t);
    t = j;
  }
  return os.str();
}

SparsePoly::SparsePoly(int p) : p_(p) {
  // monomials store variable indices in one byte
  if (p < 1 || p > 255) throw std::invalid_argument("SparsePoly: p must be in 1..255");
}

int SparsePoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree));
  return d;
}

void SparsePoly::add_term(const Monomial& m, const QuadExt& c) {
  if (c.is_zero()) return;
  for (int t = 0; t < m.degree; ++t)
    if (m.idx[t] >= p_) throw std::invalid_argument("SparsePoly: variable index out of range");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QuadExt SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QuadExt(0) : it->second;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  if (other.p_ != p_) throw std::invalid_argument("SparsePoly: mixed moduli");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  if (other.p_ != p_) throw std::invalid_argument("SparsePoly: mixed moduli");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  r += b;
  return r;
}

SparsePoly poly_sub(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  r -= b;
  return r;
}

SparsePoly poly_scale(const SparsePoly& a, const QuadExt& c) {
  SparsePoly r(a.p());
  if (c.is_zero()) return r;
  for (const auto& [m, coef] : a.terms()) r.add_term(m, coef * c);
  return r;
}

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b, int max_degree) {
  if (a.p() != b.p()) throw std::invalid_argument("poly_mul: mixed moduli");
  SparsePoly r(a.p());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree + mb.degree > max_degree)
        throw std::domain_error("poly_mul: result would exceed degree " +
                                std::to_string(max_degree));
      r.add_term(ma.times(mb), ca * cb);
    }
  }
  return r;
}

SparsePoly square_linear(int p, const std::map<int, QuadExt>& coeffs) {
  SparsePoly r(p);
  for (auto i = coeffs.begin(); i != coeffs.end(); ++i) {
    r.add_term(Monomial::xx(i->first, i->first), i->second * i->second);
    auto j = i;
    for (++j; j != coeffs.end(); ++j)
      r.add_term(Monomial::xx(i->first, j->first), QuadExt(2) * i->second * j->second);
  }
  return r;
}

SparsePoly ap_polynomial(const OrbitTable& table) {
  SparsePoly r(table.p());
  for (const Triple& t : table.members(table.ap_orbit()))
    r.add_term(Monomial::xxx(t[0], t[1], t[2]), QuadExt(1));
  return r;
}

bool OmegaVector::is_zero() const {
  if (!a0.is_zero() || !a3.is_zero() || !a21.is_zero()) return false;
  for (const QuadExt& c : a111)
    if (!c.is_zero()) return false;
  return true;
}

std::string OmegaVector::str() const {
  std::ostringstream os;
  os << "omega(" << a0.str() << ", " << a3.str() << ", " << a21.str();
  for (const QuadExt& c : a111) os << ", " << c.str();
  os << ")";
  return os.str();
}

namespace {

// One invariant class during projection: remembers the first monomial seen
// and how many class members carry the common coefficient.
struct ClassSlot {
  std::optional<QuadExt> value;
  Monomial first;
  long covered = 0;
};

void take(ClassSlot& slot, const Monomial& m, const QuadExt& c) {
  if (!slot.value) {
    slot.value = c;
    slot.first = m;
    slot.covered = 1;
    return;
  }
  if (*slot.value != c)
    throw not_invariant("omega_of: coefficient of " + m.str() + " (" + c.str() +
                        ") differs from coefficient of " + slot.first.str() + " (" +
                        slot.value->str() + ") in the same invariance class");
  ++slot.covered;
}

}  // namespace

OmegaVector omega_of(const SparsePoly& poly, const OrbitTable& table) {
  if (poly.p() != table.p()) throw std::invalid_argument("omega_of: mixed moduli");
  const long p = poly.p();
  ClassSlot constant, cubes, squares;
  std::vector<ClassSlot> orbits(table.orbit_count());

  for (const auto& [m, c] : poly.terms()) {
    switch (m.degree) {
      case 0:
        take(constant, m, c);
        break;
      case 3:
        if (m.idx[0] == m.idx[2]) {
          take(cubes, m, c);
        } else if (m.idx[0] == m.idx[1] || m.idx[1] == m.idx[2]) {
          take(squares, m, c);
        } else {
          take(orbits[table.orbit_of(m.idx[0], m.idx[1], m.idx[2])], m, c);
        }
        break;
      default:
        throw not_invariant("omega_of: monomial " + m.str() +
                            " of degree " + std::to_string(m.degree) +
                            " admits no invariant class");
    }
  }

  // A class that is only partially covered hides zero coefficients that
  // disagree with the common nonzero one.
  auto finish = [](const ClassSlot& slot, long size, const char* what) -> QuadExt {
    if (!slot.value) return QuadExt(0);
    if (slot.covered != size && !slot.value->is_zero())
      throw not_invariant(std::string("omega_of: class ") + what + " holds " +
                          std::to_string(slot.covered) + " of " + std::to_string(size) +
                          " monomials (e.g. " + slot.first.str() +
                          " has coefficient " + slot.value->str() +
                          ", an absent class member has 0)");
    return *slot.value;
  };

  OmegaVector w;
  w.a0 = finish(constant, 1, "constant");
  w.a3 = finish(cubes, p, "sum X^3");
  w.a21 = finish(squares, p * (p - 1), "sum X^2*X");
  w.a111.resize(table.orbit_count());
  for (int t = 0; t < table.orbit_count(); ++t)
    w.a111[t] = finish(orbits[t], table.orbit_sizes()[t],
                       ("orbit " + std::to_string(t)).c_str());
  return w;
}

SparsePoly reconstruct(const OmegaVector& omega, const OrbitTable& table) {
  const int p = table.p();
  if (static_cast<int>(omega.a111.size()) != table.orbit_count())
    throw std::invalid_argument("reconstruct: orbit slot count mismatch");
  SparsePoly r(p);
  r.add_term(Monomial::one(), omega.a0);
  for (int i = 0; i < p; ++i) r.add_term(Monomial::xxx(i, i, i), omega.a3);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j) r.add_term(Monomial::xx(i, i).times(Monomial::x(j)), omega.a21);
  for (int t = 0; t < table.orbit_count(); ++t) {
    if (omega.a111[t].is_zero()) continue;
    for (const Triple& u : table.members(t))
      r.add_term(Monomial::xxx(u[0], u[1], u[2]), omega.a111[t]);
  }
  return r;
}

}  // namespace apbound
