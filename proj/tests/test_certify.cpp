// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "apbound/certify.hpp"

#include <doctest.h>

#include <random>

using namespace apbound;

TEST_SUITE_BEGIN("certify");

TEST_CASE("lambda_general fixed values") {
  CHECK(lambda_general(7, 7) == Rational(21));
  CHECK(lambda_general(5, 5) == Rational(10));
  CHECK(lambda_general(7, 4) == Rational(0));  // D = (p+1)/2 is a root
  CHECK(lambda_general(17, 17) == Rational(136));
  CHECK(lambda_general(13, 6) == make_rational(2 * 216 - 16 * 36 + 14 * 6, 24));
}

TEST_CASE("lambda_small fixed values") {
  CHECK(lambda_small(11, 11) == QuadExt(55));  // the sqrt5 parts cancel
  CHECK(lambda_small(13, 13) == QuadExt(78));
  CHECK(lambda_small(17, 17) == QuadExt(136));
  CHECK(lambda_small(5, 2) == QuadExt(0));
  CHECK(lambda_small(7, 4) == QuadExt(make_rational(3, 2)));  // D(D-1)(D-3)/8
  CHECK_THROWS_AS(lambda_small(19, 3), std::invalid_argument);
}

TEST_CASE("general certificate verifies exactly for every prime 5..31") {
  for (int p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const CertificateReport r = verify_general(p);
    CAPTURE(p);
    CHECK(r.verified);
    CHECK(r.checked_D == std::vector<int>{0, 1, 2, 3});
    CHECK(r.residual.is_zero());
    // every sigma-term omega line equals its published display
    for (const auto& [D, lines] : r.term_lines)
      for (const SigmaLine& line : lines) {
        CAPTURE(line.name);
        REQUIRE(line.matches_reference.has_value());
        CHECK(*line.matches_reference);
      }
  }
}

TEST_CASE("small-prime certificates verify exactly") {
  for (int p : {5, 7, 11, 13, 17}) {
    const CertificateReport r = verify_smallprime(p);
    CAPTURE(p);
    CHECK(r.verified);
    CHECK(r.residual.is_zero());
    for (const auto& [D, lines] : r.term_lines)
      for (const SigmaLine& line : lines) {
        REQUIRE(line.matches_reference.has_value());
        CHECK(*line.matches_reference);
      }
  }
  // the resolved subscript convention is reported
  CHECK(verify_smallprime(11).convention.find("X_{r^j + i}") != std::string::npos);
  CHECK(verify_smallprime(13).convention.find("weights exchanged") != std::string::npos);
  CHECK_THROWS_AS(verify_smallprime(19), std::invalid_argument);
}

TEST_CASE("sigma4 omega lines match the published displays") {
  const CertificateReport r7 = verify_smallprime(7);
  const SigmaLine& s4 = r7.term_lines.at(0).back();
  CHECK(s4.name == "sum sigma4_i X_i");
  CHECK(s4.omega.a21 == QuadExt(make_rational(1, 8)));
  CHECK(s4.omega.a111 ==
        std::vector<QuadExt>{QuadExt(make_rational(1, 4)), QuadExt(make_rational(-3, 4))});

  const CertificateReport r17 = verify_smallprime(17);
  const SigmaLine& t4 = r17.term_lines.at(0).back();
  CHECK(t4.omega.a21 == QuadExt(make_rational(1, 8)));
  CHECK(t4.omega.a111 == std::vector<QuadExt>{QuadExt(make_rational(3, 4)),
                                              QuadExt(make_rational(-1, 4)),
                                              QuadExt(make_rational(-1, 4))});
}

TEST_CASE("perturbing sigma4 by one surfaces in the a21 slot") {
  VerifyOptions opt;
  opt.mutation = Mutation{3, QuadExt(1)};
  const CertificateReport r = verify_general(5, opt);
  CHECK_FALSE(r.verified);
  CHECK_FALSE(r.residual.a21.is_zero());
}

TEST_CASE("mutation sensitivity: any perturbed weight breaks verification") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> num(1, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::uniform_int_distribution<int> sign(0, 1);
  auto delta = [&] {
    Rational d = make_rational(num(rng), den(rng));
    return QuadExt(sign(rng) ? d : -d);
  };
  for (int p : {5, 7, 11, 13}) {
    for (int iter = 0; iter < 20; ++iter) {
      VerifyOptions opt;
      opt.mutation = Mutation{iter % 4, delta()};
      CHECK_FALSE(verify_general(p, opt).verified);
    }
  }
  const std::map<int, int> small_terms = {{5, 3}, {7, 4}, {11, 4}, {13, 5}, {17, 4}};
  for (const auto& [p, nterms] : small_terms) {
    for (int iter = 0; iter < 20; ++iter) {
      VerifyOptions opt;
      opt.mutation = Mutation{iter % nterms, delta()};
      CHECK_FALSE(verify_smallprime(p, opt).verified);
    }
  }
}

TEST_CASE("verification at extra random D values") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dval(-40, 40);
  for (int p : {5, 7, 13}) {
    VerifyOptions opt;
    opt.check_D = {0, 1, 2, 3};
    for (int i = 0; i < 10; ++i) opt.check_D.push_back(dval(rng));
    CHECK(verify_general(p, opt).verified);
    if (has_small_prime_certificate(p)) CHECK(verify_smallprime(p, opt).verified);
  }
}

TEST_CASE("soundness: lambda_general <= lambda_small <= W") {
  const ApOptions opt{24, 2, false};
  for (int p : {5, 7, 11, 13, 17, 19}) {
    for (int D = 0; D <= p; ++D) {
      const long w = min_aps(p, 3, D, opt).min_count;
      const QuadExt wq(w);
      CHECK(QuadExt(lambda_general(p, D)) <= wq);
      if (has_small_prime_certificate(p)) {
        CHECK(lambda_small(p, D) <= wq);
        CHECK(QuadExt(lambda_general(p, D)) <= lambda_small(p, D));
      }
    }
  }
  // lambda_small dominates lambda_general everywhere in 0..p
  for (int p : {5, 7, 11, 13, 17})
    for (int D = 0; D <= p; ++D)
      CHECK(QuadExt(lambda_general(p, D)) <= lambda_small(p, D));
}

TEST_CASE("compare_bounds fills columns and respects the cap") {
  const ApOptions opt{12, 1, false};
  const auto rows = compare_bounds(11, 11, opt);
  REQUIRE(rows.size() == 12);
  CHECK(rows[11].lambda_gen == Rational(55));
  REQUIRE(rows[11].lambda_sm.has_value());
  CHECK(*rows[11].lambda_sm == QuadExt(55));
  REQUIRE(rows[11].w_exact.has_value());
  CHECK(*rows[11].w_exact == 55);
  const auto rows13 = compare_bounds(13, 13, opt);  // 13 beyond cap 12: no W column
  CHECK_FALSE(rows13[5].w_exact.has_value());
}

TEST_CASE("bound formula rendering") {
  CHECK(verify_general(7).bound_formula == "(D^3 - 5*D^2 + 4*D)/6");
  CHECK(verify_smallprime(17).bound_formula == "1/24*D^3 + (-1/4)*D^2 + 5/24*D");
}

TEST_SUITE_END();
