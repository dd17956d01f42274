// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "apbound/modgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace apbound {

bool is_prime(int n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (int d = 3; static_cast<long>(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

int pow_mod(long base, long exp, long mod) {
  long r = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<int>(r);
}

std::vector<int> prime_factors(int n) {
  std::vector<int> fs;
  for (int d = 2; static_cast<long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

int primitive_root(int p) {
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument("primitive_root: need an odd prime, got " + std::to_string(p));
  const auto factors = prime_factors(p - 1);
  for (int r = 2; r < p; ++r) {
    bool ok = true;
    for (int q : factors) {
      if (pow_mod(r, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
  }
  throw std::logic_error("primitive_root: none found (impossible for prime p)");
}

PrimeModulus::PrimeModulus(int p) : p_(p) {
  if (!is_prime(p) || p < 5)
    throw std::invalid_argument("PrimeModulus: need a prime >= 5, got " + std::to_string(p));
}

long OrbitTable::rank(const Triple& t) const {
  // Lex rank of 0 <= t[0] < t[1] < t[2] < p among all sorted triples.
  auto c3 = [](long x) { return x * (x - 1) * (x - 2) / 6; };
  const long p = p_;
  long r = c3(p) - c3(p - t[0]);
  if (t[1] > t[0] + 1) {
    const long lo = t[0] + 1, hi = t[1] - 1;
    r += (hi - lo + 1) * (2 * (p - 1) - lo - hi) / 2;
  }
  return r + (t[2] - t[1] - 1);
}

int OrbitTable::orbit_of(const Triple& t) const {
  if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < p_))
    throw std::invalid_argument("orbit_of: triple must be strictly increasing residues");
  return orbit_of_[rank(t)];
}

int OrbitTable::orbit_of(int a, int b, int c) const {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return orbit_of(t);
}

std::vector<Triple> OrbitTable::members(int orbit) const {
  std::vector<Triple> out;
  long idx = 0;
  for (int a = 0; a < p_; ++a)
    for (int b = a + 1; b < p_; ++b)
      for (int c = b + 1; c < p_; ++c, ++idx)
        if (orbit_of_[idx] == orbit) out.push_back({a, b, c});
  return out;
}

OrbitTable affine_orbits3(const PrimeModulus& pm) {
  const int p = pm.value();
  OrbitTable t;
  t.p_ = p;
  const long total = static_cast<long>(p) * (p - 1) * (p - 2) / 6;
  t.orbit_of_.assign(total, 0xffff);

  const int g = primitive_root(p);
  auto normalized = [p](int a, int b, int c) {
    Triple u{a % p, b % p, c % p};
    std::sort(u.begin(), u.end());
    return u;
  };

  long idx = 0;
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      for (int c = b + 1; c < p; ++c, ++idx) {
        if (t.orbit_of_[idx] != 0xffff) continue;
        const auto oid = static_cast<std::uint16_t>(t.reps_.size());
        t.reps_.push_back({a, b, c});
        // Closure under x -> x+1 and x -> g*x, which generate the affine group.
        long size = 0;
        std::vector<Triple> stack{{a, b, c}};
        t.orbit_of_[idx] = oid;
        ++size;
        while (!stack.empty()) {
          Triple cur = stack.back();
          stack.pop_back();
          const Triple next[2] = {
              normalized(cur[0] + 1, cur[1] + 1, cur[2] + 1),
              normalized(cur[0] * g, cur[1] * g, cur[2] * g),
          };
          for (const Triple& u : next) {
            long r = t.rank(u);
            if (t.orbit_of_[r] == 0xffff) {
              t.orbit_of_[r] = oid;
              ++size;
              stack.push_back(u);
            }
          }
        }
        t.sizes_.push_back(size);
      }
    }
  }
  t.ap_orbit_ = t.orbit_of_[t.rank({0, 1, 2})];
  return t;
}

std::pair<int, Triple> canonical_subset(const Triple& subset, const OrbitTable& table) {
  const int p = table.p();
  Triple u;
  for (int i = 0; i < 3; ++i) {
    int r = subset[i] % p;
    if (r < 0) r += p;
    u[i] = r;
  }
  std::sort(u.begin(), u.end());
  if (u[0] == u[1] || u[1] == u[2])
    throw std::invalid_argument("canonical_subset: residues must be distinct");
  const int oid = table.orbit_of(u);
  // Representatives are recorded at build time as the lex-least member.
  return {oid, table.representative(oid)};
}

}  // namespace apbound
