#include <doctest.h>

#include <stdexcept>

#include "gluings/formulas.hpp"

using namespace gluings;

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(7, -1) == 0);
  CHECK(binomial(7, 8) == 0);
  CHECK(perfect_matchings(0) == 1);
  CHECK(perfect_matchings(6) == 15);
  CHECK(perfect_matchings(14) == 135135);
  CHECK(perfect_matchings(5) == 0);
  CHECK(exact_div(12, 4) == 3);
  CHECK_THROWS_AS(exact_div(5, 2), std::logic_error);
  CHECK_THROWS_AS(rat_to_int(BigRat(1, 3)), std::logic_error);
  CHECK(rat_to_int(BigRat(8, 4)) == 2);
  CHECK(pow4_rat(-2) == BigRat(1, 16));
}

TEST_CASE("one-face counts") {
  SequenceCache c;
  CHECK(c.eps_one_face(0, 0) == 1);
  CHECK(c.eps_one_face(0, 3) == 5);
  CHECK(c.eps_one_face(1, 2) == 1);
  CHECK(c.eps_one_face(1, 3) == 10);
  CHECK(c.eps_one_face(1, 4) == 70);
  // genus 0 gives the Catalan numbers
  const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) CHECK(c.eps_one_face(0, n) == catalan[n]);
  // below the vanishing bound everything is zero
  for (int g = 1; g <= 4; ++g)
    for (int n = 0; n < 2 * g; ++n) CHECK(c.eps_one_face(g, n) == 0);
  CHECK_THROWS_AS(c.eps_one_face(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(c.eps_one_face(0, -1), std::invalid_argument);
}

TEST_CASE("bicolored one-face counts") {
  SequenceCache c;
  CHECK(c.bicolored_one_face(0, 0) == 1);
  for (int n = 0; n <= 30; ++n) CHECK(c.bicolored_one_face(0, n) == c.eps_one_face(0, n));
  CHECK(c.bicolored_one_face(1, 3) == 1);
  for (int g = 1; g <= 3; ++g)
    for (int n = 0; n < 2 * g; ++n) CHECK(c.bicolored_one_face(g, n) == 0);
}

TEST_CASE("closed forms, two and three faces") {
  CHECK(closed_eps0_2(0) == 0);
  CHECK(closed_eps0_2(1) == 1);
  CHECK(closed_eps0_2(4) == 256);
  CHECK(closed_eps1_2(2) == 0);
  CHECK(closed_eps1_2(3) == 21);
  CHECK(closed_eps1_2(4) == 440);
  CHECK(closed_eps2_2(4) == 0);
  CHECK(closed_eps2_2(5) == 1485);
  CHECK(closed_eps2_2(6) == 53616);
  CHECK(closed_B0_2(1) == 0);
  CHECK(closed_B0_2(2) == 1);
  CHECK(closed_B0_2(4) == 48);
  CHECK(closed_eps0_3(1) == 0);
  CHECK(closed_eps0_3(2) == 6);
  CHECK(closed_eps0_3(3) == 116);
  CHECK(closed_eps0_3(4) == 1332);
}

TEST_CASE("falling powers") {
  CHECK(falling_power(0, 5) == 1);
  CHECK(falling_power(2, 0) == 0);
  CHECK(falling_power(2, 3) == 12);
  CHECK(falling_power(1, 0) == 1);
}

TEST_CASE("A series: sum equals closed form") {
  CHECK(A_sum(2, 3, 0) == 0);  // empty range convention
  CHECK(A_closed(2, 3, 0) == 0);
  CHECK(A_sum(0, 0, -1) == 1);
  CHECK(A_sum(3, 1, 1) == BigRat(35, 16));
  CHECK(A_closed(3, 1, 1) == BigRat(35, 16));
  CHECK_THROWS_AS(A_sum(3, 2, 3), std::invalid_argument);   // k > m
  CHECK_THROWS_AS(A_sum(-3, 0, 0), std::invalid_argument);  // M < -1 with m > M

  for (int M = -1; M <= 14; ++M)
    for (int m = 0; m <= M + 2; ++m)
      for (int k = -5; k <= m; ++k) CHECK(A_sum(M, m, k) == A_closed(M, m, k));
}

TEST_CASE("A series corollaries") {
  for (int M = 0; M <= 14; ++M) CHECK(A_catalan_prefix(M) == A_sum(M, 0, -1));
  for (int M = -1; M <= 14; ++M)
    for (int k = 0; k <= 5; ++k) CHECK(A_diagonal(M, k) == A_sum(M, k, k));
}

TEST_CASE("D series: definition, closed forms and recurrences agree") {
  CHECK(D_sum(1, 0) == 1);
  CHECK(D_closed(4, 1) == 0);
  for (int N = 0; N <= 30; ++N) CHECK(D_sum(0, N) == binomial(2 * N + 2, N));
  for (int k = 0; k <= 4; ++k)
    for (int N = 0; N <= 30; ++N) CHECK(D_sum(k, N) == D_closed(k, N));
  for (int k = 1; k <= 4; ++k)
    for (int N = 0; N <= 30; ++N) CHECK(D_rec(k, N) == D_sum(k, N));
  for (int k = 2; k <= 4; ++k)
    for (int N = 0; N <= 30; ++N) CHECK(D_rec2(k, N) == D_sum(k, N));
  CHECK_THROWS_AS(D_closed(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(D_rec(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(D_rec2(1, 1), std::invalid_argument);
}

TEST_CASE("recurrences match closed forms up to N = 30") {
  SequenceCache c;
  CHECK(c.rec_B0_2(2) == 1);
  CHECK(c.rec_eps0_3(2) == 6);
  CHECK(c.rec_eps1_2(3) == closed_eps1_2(3));
  for (int n = 0; n <= 30; ++n) {
    CHECK(c.rec_eps0_2(n) == closed_eps0_2(n));
    CHECK(c.rec_B0_2(n) == closed_B0_2(n));
    CHECK(c.rec_eps0_3(n) == closed_eps0_3(n));
    CHECK(c.rec_eps1_2(n) == closed_eps1_2(n));
  }
  CHECK_THROWS_AS(c.rec_eps0_2(-1), std::invalid_argument);
}

TEST_CASE("cross-family identity B_0(N,2) = eps_0(N-1,2)") {
  for (int n = 1; n <= 30; ++n) CHECK(closed_B0_2(n) == closed_eps0_2(n - 1));
}

TEST_CASE("one-face totals sum to (2N-1)!!") {
  SequenceCache c;
  for (int n = 0; n <= 30; ++n) {
    BigInt sum = 0;
    for (int g = 0; 2 * g <= n; ++g) sum += c.eps_one_face(g, n);
    CHECK(sum == perfect_matchings(2 * n));
  }
}

TEST_CASE("eps-tilde recurrence") {
  SequenceCache c;
  CHECK(c.rec_eps_tilde(2, 1) == 1);
  CHECK(c.rec_eps_tilde(4, 1) == 3);
  CHECK(c.rec_eps_tilde(4, 2) == 2);
  CHECK(c.rec_eps_tilde(4, 3) == 3);
  CHECK(c.rec_eps_tilde(3, 1) == 0);  // odd arc count
  CHECK(c.rec_eps_tilde(4, 4) == 0);  // no room for face 2
  CHECK(c.rec_eps_tilde(4, 0) == 0);
}

TEST_CASE("zero region below the vanishing bound") {
  SequenceCache c;
  for (int n = 0; n < 3; ++n) CHECK(c.rec_eps1_2(n) == 0);
  CHECK(closed_eps1_2(2) == 0);
  for (int n = 0; n < 5; ++n) CHECK(closed_eps2_2(n) == 0);
  CHECK(closed_eps0_3(1) == 0);
  CHECK(c.rec_B0_2(1) == 0);
}

TEST_CASE("identity suite") {
  SequenceCache c;
  const IdentityReport r = identity_suite(c, 20);
  CHECK(r.passed());
  CHECK(r.n_max == 20);

  // the N = 1 single-term instances by hand
  CHECK(c.rec_eps_tilde(2, 1) == 1);
  CHECK(closed_eps0_2(1) == 1);
  CHECK(rat_to_int(BigRat(BigInt(1) * 2 * 12) * pow4_rat(-1)) == 6);
}

TEST_CASE("a cached value equals the value recomputed from scratch") {
  SequenceCache warm;
  warm.rec_eps0_3(12);
  warm.rec_eps1_2(12);
  for (int n = 0; n <= 12; ++n) {
    SequenceCache fresh;
    CHECK(warm.rec_eps0_3(n) == fresh.rec_eps0_3(n));
    CHECK(warm.rec_eps1_2(n) == fresh.rec_eps1_2(n));
    CHECK(warm.eps_one_face(1, n) == fresh.eps_one_face(1, n));
  }
}
