// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "apbound/necklace.hpp"

#include <stdexcept>

namespace apbound {

namespace {

std::uint64_t n_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::uint64_t ones_block(int t) { return t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1; }

void check_length(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("necklace: length must be in 1..64");
}

}  // namespace

std::string BinaryNecklace::to_string() const {
  std::string s(length, '0');
  for (int i = 0; i < length; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

std::uint64_t BinaryNecklace::residue_mask() const {
  std::uint64_t m = 0;
  for (int i = 0; i < length; ++i)
    if (bit(i)) m |= std::uint64_t{1} << i;
  return m;
}

BinaryNecklace necklace_from_string(const std::string& bits) {
  const int n = static_cast<int>(bits.size());
  check_length(n);
  BinaryNecklace v{n, 0, 0};
  for (int i = 0; i < n; ++i) {
    if (bits[i] == '1') {
      v.word |= std::uint64_t{1} << (n - 1 - i);
      ++v.ones;
    } else if (bits[i] != '0') {
      throw std::invalid_argument("necklace: string must be over {0,1}");
    }
  }
  return v;
}

bool is_necklace(std::uint64_t word, int n) {
  check_length(n);
  const std::uint64_t mask = n_mask(n);
  word &= mask;
  for (int r = 1; r < n; ++r) {
    // Rotation starting at character r, still MSB-first.
    const std::uint64_t rot = ((word << r) | (word >> (n - r))) & mask;
    if (rot < word) return false;
  }
  return true;
}

bool is_necklace(const std::string& bits) {
  const BinaryNecklace v = necklace_from_string(bits);
  return is_necklace(v.word, v.length);
}

namespace {

// The computation-tree walk behind both orders. A node (s, t, g) stands for
// the string 0^s 1^t g; its children are (s-1, t-i, 01^i g) for i = t-1 down
// to the least i whose first string 0^{s-1} 1^{t-i} 0 1^i g is a necklace.
// Validity of i is upward closed (swapping the first 10 to 01 turns the
// candidate for i into the candidate for i+1, and the necklaces form a
// bubble language), so the scan stops at the first failure.
struct Generator {
  int n;
  int ones;
  bool postorder;  // cool-lex; preorder gives co-lex
  const std::function<void(const BinaryNecklace&)>& visit;

  void run() const { node(n - ones, ones, 0, 0); }

  void node(int s, int t, std::uint64_t g, int glen) const {
    const std::uint64_t self = (ones_block(t) << glen) | g;
    if (!postorder) visit(BinaryNecklace{n, self, ones});
    if (s > 0 && t > 0) {
      for (int i = t - 1; i >= 0; --i) {
        // First string of the candidate child: 0^{s-1} 1^{t-i} 0 1^i g
        const std::uint64_t sub = (ones_block(i) << glen) | g;  // suffix 01^i g, length glen+i+1
        const int sublen = glen + i + 1;
        const std::uint64_t first = (ones_block(t - i) << sublen) | sub;
        if (!is_necklace(first, n)) break;
        node(s - 1, t - i, sub, sublen);
      }
    }
    if (postorder) visit(BinaryNecklace{n, self, ones});
  }
};

}  // namespace

void stream(int n, int ones, const std::function<void(const BinaryNecklace&)>& visit) {
  check_length(n);
  if (ones < 0 || ones > n) throw std::invalid_argument("necklace: popcount out of range");
  Generator{n, ones, /*postorder=*/true, visit}.run();
}

std::vector<BinaryNecklace> gen_colex(int n, int ones) {
  check_length(n);
  if (ones < 0 || ones > n) throw std::invalid_argument("necklace: popcount out of range");
  std::vector<BinaryNecklace> out;
  std::function<void(const BinaryNecklace&)> sink = [&out](const BinaryNecklace& v) {
    out.push_back(v);
  };
  Generator{n, ones, /*postorder=*/false, sink}.run();
  return out;
}

std::vector<BinaryNecklace> gen_coollex(int n, int ones) {
  check_length(n);
  if (ones < 0 || ones > n) throw std::invalid_argument("necklace: popcount out of range");
  std::vector<BinaryNecklace> out;
  std::function<void(const BinaryNecklace&)> sink = [&out](const BinaryNecklace& v) {
    out.push_back(v);
  };
  Generator{n, ones, /*postorder=*/true, sink}.run();
  return out;
}

std::string bubble_step(const std::string& bits) {
  for (size_t i = 0; i + 1 < bits.size(); ++i) {
    if (bits[i] == '1' && bits[i + 1] == '0') {
      std::string out = bits;
      out[i] = '0';
      out[i + 1] = '1';
      return out;
    }
  }
  throw std::invalid_argument("bubble_step: no \"10\" substring in " + bits);
}

}  // namespace apbound
