#pragma once

#include <vector>

#include "gluings/bigint.hpp"

namespace gluings {

// ----- closed forms (two polygons / three polygons, low genus) -----

// eps_0(N,2) = N*4^(N-1)
BigInt closed_eps0_2(int N);
// eps_1(N,2) = (13N+3)N(N-1)(N-2)*4^(N-3)/12
BigInt closed_eps1_2(int N);
// eps_2(N,2) = (445N^2-401N-210)N(N-1)(N-2)(N-3)(N-4)*4^(N-6)/180
BigInt closed_eps2_2(int N);
// B_0(N,2) = eps_0(N-1,2) = (N-1)*4^(N-2)
BigInt closed_B0_2(int N);
// eps_0(N,3) = (8N+5)(N-1)N(N+1)/210 * C(2N+1,N)
BigInt closed_eps0_3(int N);

// ----- auxiliary sequences -----

// Falling power prod_{t=0}^{k-1}(i+1-t); the empty product for k=0.
BigInt falling_power(int k, int i);

// A(M,m,k) = sum_{j=m}^{M} (2j)!/(4^j j! (j-k)!), with A(M,m,k) = 0 whenever
// m > M >= -1. Exact rational (the terms carry 4^-j).
BigRat A_sum(int M, int m, int k);
// Telescoping closed form of the same quantity.
BigRat A_closed(int M, int m, int k);
// A(M,0,-1): partial sums of the Catalan-like series, closed form.
BigRat A_catalan_prefix(int M);
// A(M,k,k) closed form, M >= -1, k >= 0.
BigRat A_diagonal(int M, int k);

// D_k(N) = sum_{i=0}^{N} p_k(i) C(2i+1,i) C(2N-2i+1,N-i) / (2i+1)
BigInt D_sum(int k, int N);
// Closed forms, k <= 4 only.
BigInt D_closed(int k, int N);
// D_k(N) = p_k(0) C(2N+1,N) + 4 D_k(N-1) + 2(2k-3) D_{k-1}(N-1), k >= 1,
// seeded with the definitional D_0 row.
BigInt D_rec(int k, int N);
// D_k(N) = 2(2k-3) sum_{i=1}^{N} 4^{N-i} D_{k-1}(i-1), k >= 2.
BigInt D_rec2(int k, int N);

// ----- recurrences (memoized, bottom-up fill; exact divisions asserted) -----

class SequenceCache {
 public:
  // One-face genus-g gluing counts eps_g(N):
  // eps_g(N) = (2N-1)/(N+1) * (2 eps_g(N-1) + (N-1)(2N-3) eps_{g-1}(N-2))
  BigInt eps_one_face(int g, int N);
  // Bicolored one-face counts B_g(N):
  // B_g(N) = (2(2N-1) B_g(N-1) + (N-2)(N-1)^2 B_{g-1}(N-2)) / (N+1)
  BigInt bicolored_one_face(int g, int N);

  // eps_0(N,2) = 2 sum eps_0(i) eps_0(N-i-1,2) + N(2N-1) eps_0(N-1)
  BigInt rec_eps0_2(int N);
  // B_0(N,2) = 2 sum B_0(i) B_0(N-i-1,2) + N(N-1)/2 B_0(N-1)
  BigInt rec_B0_2(int N);
  // eps~_0(n,M,2) for n arcs; 0 outside the positivity conditions.
  BigInt rec_eps_tilde(int total_arcs, int face1_arcs);
  // eps_0(N,3) via the eps~ sums.
  BigInt rec_eps0_3(int N);
  // eps_1(N,2) via eps_1(N), eps_0(N,2), eps_0(N,3).
  BigInt rec_eps1_2(int N);

 private:
  BigInt one_face_at(std::vector<std::vector<BigInt>>& table, bool bicolored, int g, int N);

  std::vector<std::vector<BigInt>> eps_;  // [g][N]
  std::vector<std::vector<BigInt>> bic_;
  std::vector<BigInt> eps0_2_;
  std::vector<BigInt> b0_2_;
  std::vector<std::vector<BigInt>> eps_tilde_;  // [arcs][M], even arcs only
  std::vector<BigInt> eps0_3_;
  std::vector<BigInt> eps1_2_;
};

// ----- identity suite -----

struct IdentityMismatch {
  int N;
  int moment;  // 0: plain sum, 1: i-weighted, 2: (i+1)(i+2)-weighted
  BigInt lhs;
  BigInt rhs;
};

struct IdentityReport {
  int n_max = 0;
  std::vector<IdentityMismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

// Checks, for 1 <= N <= n_max, the three weighted sums of eps~_0(2N,i,2)
// against their closed forms: sum = N 4^(N-1), i-weighted = N^2 4^(N-1),
// (i+1)(i+2)-weighted = 4^(N-2) N(N+1)(5N+7).
IdentityReport identity_suite(SequenceCache& cache, int n_max);

}  // namespace gluings
