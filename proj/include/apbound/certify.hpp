// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apbound/apcount.hpp"
#include "apbound/qfield.hpp"
#include "apbound/sympoly.hpp"

namespace apbound {

// Closed-form lower bound of the general certificate,
// (D^3 - ((p+3)/2) D^2 + ((p+1)/2) D) / (p-1).
Rational lambda_general(int p, long D);

// Sharper closed-form bound for p in {5, 7, 11, 13, 17}; exact over Q(sqrt m).
QuadExt lambda_small(int p, long D);
bool has_small_prime_certificate(int p);

enum class TheoremTag { general, small_prime };

// Adds delta to one of the certificate's scalar weights, for mutation
// testing. Term indices follow the order of the report's term lines.
struct Mutation {
  int term = 0;
  QuadExt delta;
};

struct SigmaLine {
  std::string name;
  OmegaVector omega;
  std::optional<OmegaVector> reference_line;  // the published display, when one exists
  std::optional<bool> matches_reference;
};

struct CertificateReport {
  int p = 0;
  TheoremTag theorem = TheoremTag::general;
  bool verified = false;
  std::vector<int> checked_D;
  OmegaVector residual;       // discrepancy at the first failing D; zero when verified
  std::string residual_note;  // set when the residual cannot be projected
  std::string bound_formula;
  std::string convention;  // index/weight convention that satisfied the identity
  std::map<int, std::vector<SigmaLine>> term_lines;  // keyed by checked D
  std::vector<std::string> diagnostics;              // residuals of rejected conventions
};

struct VerifyOptions {
  std::vector<int> check_D = {0, 1, 2, 3};
  std::optional<Mutation> mutation;
};

// Exact verification of the general-p certificate. Expands the identity at
// every requested D (degree 3 in D, so 4 distinct integers suffice) and
// cross-checks each sigma-term's omega line against its published display.
CertificateReport verify_general(int p, const VerifyOptions& options = {});

// Exact verification of the small-prime certificates (p in {5,7,11,13,17}).
// Candidate index conventions for the X_{r^{i+j}+1} subscripts are tried in
// turn; the report names the one that satisfies the identity, or carries
// per-convention residuals when none does.
CertificateReport verify_smallprime(int p, const VerifyOptions& options = {});

struct BoundRow {
  int D = 0;
  Rational lambda_gen;
  std::optional<QuadExt> lambda_sm;
  std::optional<long> w_exact;
};

// Bounds side by side for D = 0..D_max; the W column is filled by exact
// enumeration when n is within the cap. Verifies lambda <= W pointwise.
std::vector<BoundRow> compare_bounds(int p, int D_max, const ApOptions& options = {});

}  // namespace apbound
