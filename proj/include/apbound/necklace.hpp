// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace apbound {

// A fixed-density binary necklace: the lexicographically least rotation of a
// binary string with prescribed length and popcount. The string is packed
// MSB-first into `word` (character i lives at bit length-1-i), so integer
// order on words equals lexicographic order on the strings.
struct BinaryNecklace {
  int length = 0;
  std::uint64_t word = 0;
  int ones = 0;

  bool bit(int i) const { return (word >> (length - 1 - i)) & 1u; }
  std::string to_string() const;

  // Membership mask indexed by residue: bit i set iff residue i is in the set.
  std::uint64_t residue_mask() const;

  friend bool operator==(const BinaryNecklace& a, const BinaryNecklace& b) {
    return a.length == b.length && a.word == b.word;
  }
};

BinaryNecklace necklace_from_string(const std::string& bits);

// True iff no rotation of the string is strictly lexicographically smaller.
bool is_necklace(std::uint64_t word, int n);
bool is_necklace(const std::string& bits);

enum class NecklaceOrder { colex, coollex };

// All fixed-density necklaces of the given length and popcount, in co-lex
// order (pre-order walk of the compact computation tree) or cool-lex order
// (post-order walk; a Gray code).
std::vector<BinaryNecklace> gen_colex(int n, int ones);
std::vector<BinaryNecklace> gen_coollex(int n, int ones);

// Constant-memory iteration in cool-lex order. Exceptions thrown by the
// visitor abort the walk and propagate to the caller.
void stream(int n, int ones, const std::function<void(const BinaryNecklace&)>& visit);

// Replace the first occurrence of "10" by "01". Throws std::invalid_argument
// when the string has the form 0^a 1^b (no "10" present).
std::string bubble_step(const std::string& bits);

}  // namespace apbound
