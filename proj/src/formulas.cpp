#include "gluings/formulas.hpp"

#include <stdexcept>

namespace gluings {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// (2j)!/(4^j j! (j-k)!) -- the A-series term; needs j >= k.
BigRat a_term(int j, int k) {
  return BigRat(factorial(2 * j)) / BigRat(pow4(j) * factorial(j) * factorial(j - k));
}

}  // namespace

BigInt closed_eps0_2(int N) {
  require(N >= 0, "closed_eps0_2: N must be >= 0");
  if (N < 1) return 0;
  return BigInt(N) * pow4(N - 1);
}

BigInt closed_eps1_2(int N) {
  require(N >= 0, "closed_eps1_2: N must be >= 0");
  if (N < 3) return 0;  // the (N-1)(N-2) factors vanish at 1,2; zero below the bound
  BigInt num = BigInt(13 * N + 3) * N * (N - 1) * (N - 2) * pow4(N - 3);
  return exact_div(num, 12);
}

BigInt closed_eps2_2(int N) {
  require(N >= 0, "closed_eps2_2: N must be >= 0");
  if (N < 5) return 0;
  BigRat r = BigRat(BigInt(445) * N * N - BigInt(401) * N - 210);
  r *= BigRat(BigInt(N) * (N - 1) * (N - 2) * (N - 3) * (N - 4));
  r *= pow4_rat(N - 6);
  r /= 180;
  return rat_to_int(r);
}

BigInt closed_B0_2(int N) {
  require(N >= 0, "closed_B0_2: N must be >= 0");
  if (N < 2) return 0;
  return BigInt(N - 1) * pow4(N - 2);
}

BigInt closed_eps0_3(int N) {
  require(N >= 0, "closed_eps0_3: N must be >= 0");
  if (N < 2) return 0;
  BigInt num = BigInt(8 * N + 5) * (N - 1) * N * (N + 1) * binomial(2 * N + 1, N);
  return exact_div(num, 210);
}

BigInt falling_power(int k, int i) {
  require(k >= 0, "falling_power: k must be >= 0");
  BigInt r = 1;
  for (int t = 0; t < k; ++t) r *= i + 1 - t;
  return r;
}

BigRat A_sum(int M, int m, int k) {
  if (m > M) {
    require(M >= -1, "A_sum: empty range needs M >= -1");
    return 0;
  }
  require(m >= 0 && k <= m, "A_sum: needs M >= m >= 0 and k <= m");
  BigRat s = 0;
  for (int j = m; j <= M; ++j) s += a_term(j, k);
  return s;
}

BigRat A_closed(int M, int m, int k) {
  if (m > M) {
    require(M >= -1, "A_closed: empty range needs M >= -1");
    return 0;
  }
  require(m >= 0 && k <= m, "A_closed: needs M >= m >= 0 and k <= m");
  BigRat upper = BigRat(BigInt(M + 1 - k) * factorial(2 * M + 2)) /
                 BigRat(pow4(M + 1) * factorial(M + 1) * factorial(M + 1 - k));
  BigRat lower = BigRat(BigInt(m - k) * factorial(2 * m)) /
                 BigRat(pow4(m) * factorial(m) * factorial(m - k));
  // divide rather than construct: the denominator is negative for k < 0
  return BigRat(2) / BigInt(2 * k + 1) * (upper - lower);
}

BigRat A_catalan_prefix(int M) {
  require(M >= 0, "A_catalan_prefix: M must be >= 0");
  BigRat tail = BigRat(BigInt(2) * (M + 2) * factorial(2 * M + 2)) /
                BigRat(pow4(M + 1) * factorial(M + 1) * factorial(M + 2));
  return BigRat(2) - tail;
}

BigRat A_diagonal(int M, int k) {
  require(M >= -1 && k >= 0, "A_diagonal: needs M >= -1 and k >= 0");
  if (M < k) return 0;
  BigRat r = BigRat(falling_power(k + 1, M) * factorial(2 * M + 2)) /
             BigRat(pow4(M + 1) * factorial(M + 1) * factorial(M + 1));
  return BigRat(2, 2 * k + 1) * r;
}

BigInt D_sum(int k, int N) {
  require(k >= 0 && N >= 0, "D_sum: needs k, N >= 0");
  BigInt s = 0;
  for (int i = 0; i <= N; ++i) {
    // C(2i+1,i)/(2i+1) is the i-th Catalan number, so every term is integral
    BigInt catalan = exact_div(binomial(2 * i + 1, i), 2 * i + 1);
    s += falling_power(k, i) * catalan * binomial(2 * (N - i) + 1, N - i);
  }
  return s;
}

BigInt D_closed(int k, int N) {
  require(k >= 0 && N >= 0, "D_closed: needs k, N >= 0");
  const BigInt half_central = exact_div(binomial(2 * N + 2, N + 1), 2);
  switch (k) {
    case 0:
      return binomial(2 * N + 2, N);
    case 1:
      return 2 * pow4(N) - half_central;
    case 2:
      return BigInt(N + 1) * (pow4(N) - half_central);
    case 3:
      if (N == 0) return 0;
      return BigInt(N) * (N + 1) * (3 * pow4(N - 1) - half_central);
    case 4:
      if (N < 2) return 0;
      return BigInt(N - 1) * N * (N + 1) * (10 * pow4(N - 2) - half_central);
    default:
      throw std::invalid_argument("D_closed: closed forms exist for k <= 4 only");
  }
}

BigInt D_rec(int k, int N) {
  require(k >= 1 && N >= 0, "D_rec: needs k >= 1 and N >= 0");
  // row 0 comes from the definition; rows 1..k from the recurrence
  std::vector<BigInt> prev(N + 1);
  for (int n = 0; n <= N; ++n) prev[n] = D_sum(0, n);
  std::vector<BigInt> cur(N + 1);
  for (int kk = 1; kk <= k; ++kk) {
    const BigInt pk0 = falling_power(kk, 0);
    cur[0] = pk0;
    for (int n = 1; n <= N; ++n)
      cur[n] = pk0 * binomial(2 * n + 1, n) + 4 * cur[n - 1] + 2 * (2 * kk - 3) * prev[n - 1];
    std::swap(prev, cur);
  }
  return prev[N];
}

BigInt D_rec2(int k, int N) {
  require(k >= 2 && N >= 0, "D_rec2: needs k >= 2 and N >= 0");
  BigInt s = 0;
  for (int i = 1; i <= N; ++i) s += pow4(N - i) * D_rec(k - 1, i - 1);
  return 2 * (2 * k - 3) * s;
}

BigInt SequenceCache::one_face_at(std::vector<std::vector<BigInt>>& table, bool bicolored, int g,
                                  int N) {
  require(g >= 0 && N >= 0, "one-face counts: needs g, N >= 0");
  if (static_cast<int>(table.size()) <= g) table.resize(g + 1);
  for (int gg = 0; gg <= g; ++gg) {
    auto& row = table[gg];
    if (row.empty()) row.push_back(gg == 0 ? 1 : 0);
    for (int n = static_cast<int>(row.size()); n <= N; ++n) {
      const BigInt& same = row[n - 1];
      const BigInt lower = (gg >= 1 && n >= 2) ? table[gg - 1][n - 2] : BigInt(0);
      BigInt num = bicolored
                       ? 2 * (2 * n - 1) * same + BigInt(n - 2) * (n - 1) * (n - 1) * lower
                       : BigInt(2 * n - 1) * (2 * same + BigInt(n - 1) * (2 * n - 3) * lower);
      row.push_back(exact_div(num, n + 1));
    }
  }
  return table[g][N];
}

BigInt SequenceCache::eps_one_face(int g, int N) { return one_face_at(eps_, false, g, N); }

BigInt SequenceCache::bicolored_one_face(int g, int N) { return one_face_at(bic_, true, g, N); }

BigInt SequenceCache::rec_eps0_2(int N) {
  require(N >= 0, "rec_eps0_2: N must be >= 0");
  if (eps0_2_.empty()) eps0_2_ = {0, 1};
  for (int n = static_cast<int>(eps0_2_.size()); n <= N; ++n) {
    BigInt v = BigInt(n) * (2 * n - 1) * eps_one_face(0, n - 1);
    for (int i = 0; i <= n - 2; ++i) v += 2 * eps_one_face(0, i) * eps0_2_[n - 1 - i];
    eps0_2_.push_back(v);
  }
  return eps0_2_[N];
}

BigInt SequenceCache::rec_B0_2(int N) {
  require(N >= 0, "rec_B0_2: N must be >= 0");
  if (b0_2_.empty()) b0_2_ = {0, 0};
  for (int n = static_cast<int>(b0_2_.size()); n <= N; ++n) {
    BigInt v = exact_div(BigInt(n) * (n - 1), 2) * bicolored_one_face(0, n - 1);
    for (int i = 0; i <= n - 3; ++i) v += 2 * bicolored_one_face(0, i) * b0_2_[n - 1 - i];
    b0_2_.push_back(v);
  }
  return b0_2_[N];
}

BigInt SequenceCache::rec_eps_tilde(int total_arcs, int face1_arcs) {
  // positivity conditions; outside them the count is zero by definition
  if (total_arcs < 2 || face1_arcs < 1 || total_arcs % 2 != 0 || total_arcs < face1_arcs + 1)
    return 0;
  if (static_cast<int>(eps_tilde_.size()) <= total_arcs) eps_tilde_.resize(total_arcs + 1);
  for (int n = 2; n <= total_arcs; n += 2) {
    auto& row = eps_tilde_[n];
    if (!row.empty()) continue;
    row.assign(n, 0);  // index by M, valid entries 1..n-1
    if (n == 2) {
      row[1] = 1;
      continue;
    }
    for (int M = 1; M <= n - 1; ++M) {
      BigInt v = BigInt(n - M) * eps_one_face(0, n / 2 - 1);
      for (int i = 0; 2 * i + 2 <= M - 1; ++i)
        v += 2 * eps_one_face(0, i) * eps_tilde_[n - 2 * i - 2][M - 2 * i - 2];
      row[M] = v;
    }
  }
  return eps_tilde_[total_arcs][face1_arcs];
}

BigInt SequenceCache::rec_eps0_3(int N) {
  require(N >= 0, "rec_eps0_3: N must be >= 0");
  if (eps0_3_.empty()) eps0_3_ = {0, 0};
  for (int n = static_cast<int>(eps0_3_.size()); n <= N; ++n) {
    BigInt v = 0;
    for (int i = 0; i <= n - 2; ++i) {
      v += 2 * eps_one_face(0, i) * eps0_3_[n - 1 - i];
      v += 2 * rec_eps0_2(i) * rec_eps0_2(n - 1 - i);
    }
    for (int i = 1; i <= 2 * n - 3; ++i)
      v += BigInt(i + 1) * (i + 2) * rec_eps_tilde(2 * n - 2, i);
    eps0_3_.push_back(v);
  }
  return eps0_3_[N];
}

BigInt SequenceCache::rec_eps1_2(int N) {
  require(N >= 0, "rec_eps1_2: N must be >= 0");
  if (eps1_2_.empty()) eps1_2_ = {0, 0, 0};
  for (int n = static_cast<int>(eps1_2_.size()); n <= N; ++n) {
    BigInt v = BigInt(n) * (2 * n - 1) * eps_one_face(1, n - 1) + rec_eps0_3(n - 1);
    for (int i = 0; i <= n - 3; ++i) {
      v += 2 * eps_one_face(0, i) * eps1_2_[n - 1 - i];
      v += 2 * rec_eps0_2(i) * eps_one_face(1, n - 1 - i);
    }
    eps1_2_.push_back(v);
  }
  return eps1_2_[N];
}

IdentityReport identity_suite(SequenceCache& cache, int n_max) {
  require(n_max >= 1, "identity_suite: n_max must be >= 1");
  IdentityReport report;
  report.n_max = n_max;
  for (int N = 1; N <= n_max; ++N) {
    BigInt s0 = 0, s1 = 0, s2 = 0;
    for (int i = 1; i <= 2 * N - 1; ++i) {
      const BigInt t = cache.rec_eps_tilde(2 * N, i);
      s0 += t;
      s1 += i * t;
      s2 += BigInt(i + 1) * (i + 2) * t;
    }
    const BigInt r0 = closed_eps0_2(N);
    const BigInt r1 = BigInt(N) * N * pow4(N - 1);
    const BigInt r2 = rat_to_int(BigRat(BigInt(N) * (N + 1) * (5 * N + 7)) * pow4_rat(N - 2));
    if (s0 != r0) report.mismatches.push_back({N, 0, s0, r0});
    if (s1 != r1) report.mismatches.push_back({N, 1, s1, r1});
    if (s2 != r2) report.mismatches.push_back({N, 2, s2, r2});
  }
  return report;
}

}  // namespace gluings
