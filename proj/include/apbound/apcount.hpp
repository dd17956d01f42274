// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "apbound/necklace.hpp"

namespace apbound {

// Exact counter for k-term arithmetic progressions in subsets of Z_n.
// An arithmetic progression is a set of k distinct elements
// {a, a+b, ..., a+(k-1)b} with b != 0; each such set counts once.
//
// For k <= 5 the counter sums ordered generators (a, b) with a
// rotate-and-mask inner loop and divides by the per-set generator
// multiplicity. Multiplicity is 2 except for two exactly-corrected families:
// full cosets of the order-k subgroup (k | n, multiplicity k*phi(k)) and,
// for k = 4 only, cosets of the order-5 subgroup with one point removed
// (5 | n, multiplicity phi(5) = 4). Larger k falls back to collecting the
// generated sets and deduplicating them outright.
class ApCounter {
 public:
  ApCounter(int n, int k);
  long count(std::uint64_t word) const;  // word: MSB-first subset indicator
  int n() const { return n_; }
  int k() const { return k_; }

 private:
  int n_, k_;
  struct Stride {
    int shifts[4];  // rotation amounts (i*b mod n) for i = 1..k-1
  };
  std::vector<Stride> strides_;           // one per valid b (k <= 5 fast path)
  std::vector<int> valid_b_;              // generic path, any k
  std::vector<std::uint64_t> coset_;      // order-k coset masks (k | n)
  std::vector<std::uint64_t> punctured_;  // order-5 coset masks (k = 4, 5 | n)
  long coset_multiplicity_ = 0;           // k * phi(k)
  long count_by_dedup(std::uint64_t word, std::uint64_t mask) const;
};

long count_aps(std::uint64_t word, int n, int k);
long count_aps(const BinaryNecklace& necklace, int k);

struct ApStatistics {
  int n = 0, k = 0, D = 0;
  long min_count = 0;
  BinaryNecklace witness;                 // first minimizer in cool-lex order
  std::map<long, long> histogram;        // count -> number of necklaces (optional)
};

struct ApOptions {
  int enumeration_cap = 24;  // brute force refuses n beyond this
  int threads = 1;
  bool histogram = false;
};

// Exact minimum over all density-D subsets of Z_n, computed over the
// fixed-density necklaces (AP counts are rotation invariant).
ApStatistics min_aps(int n, int k, int D, const ApOptions& opt = {});

// Exact histogram over all fixed-density necklaces of (n, D).
std::map<long, long> distribution(int n, int k, int D, const ApOptions& opt = {});

// W(k, Z_n, D/n) for n in [n_min, n_max], one row per n, one column per
// D in 0..n. A cell is empty when the cap refused that n.
struct WTable {
  int k = 0;
  int n_min = 0;
  std::vector<std::vector<std::optional<long>>> rows;  // rows[i][D], n = n_min + i
};

WTable w_table(int k, int n_min, int n_max, const ApOptions& opt = {});

}  // namespace apbound
