// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace apbound {

bool is_prime(int n);

// Smallest primitive root of the odd prime p (p >= 3).
int primitive_root(int p);

// An odd prime >= 5; the certificates and the LP assume (p-1)/2 >= 2.
class PrimeModulus {
 public:
  explicit PrimeModulus(int p);
  int value() const { return p_; }
  friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }

 private:
  int p_;
};

// A 3-subset of Z_p stored as strictly increasing residues.
using Triple = std::array<int, 3>;

// Partition of all C(p,3) 3-subsets of Z_p into orbits of the affine group
// x -> a*x + b (a != 0). Orbit ids are assigned in order of each orbit's
// lexicographically least member, so the orbit of {0,1,2} -- the arithmetic
// progressions -- is always orbit 0.
class OrbitTable {
 public:
  int p() const { return p_; }
  int orbit_count() const { return static_cast<int>(sizes_.size()); }
  const std::vector<long>& orbit_sizes() const { return sizes_; }
  int ap_orbit() const { return ap_orbit_; }

  int orbit_of(const Triple& t) const;
  int orbit_of(int a, int b, int c) const;
  const Triple& representative(int orbit) const { return reps_.at(orbit); }

  // All members of one orbit, in lex order (enumerates C(p,3) subsets).
  std::vector<Triple> members(int orbit) const;

  friend OrbitTable affine_orbits3(const PrimeModulus& p);

 private:
  int p_ = 0;
  int ap_orbit_ = 0;
  std::vector<std::uint16_t> orbit_of_;  // indexed by lex rank of the triple
  std::vector<long> sizes_;
  std::vector<Triple> reps_;
  long rank(const Triple& t) const;
};

OrbitTable affine_orbits3(const PrimeModulus& p);

// Orbit id plus the lexicographically least subset in the orbit. Rejects
// multisets with repeated residues.
std::pair<int, Triple> canonical_subset(const Triple& subset, const OrbitTable& table);

}  // namespace apbound
