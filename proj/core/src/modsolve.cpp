#include "gcx/cochain.hpp"

#include <numeric>

namespace gcx::detail {

namespace {

long long emod(long long a, long long M) { long long r = a % M; return r < 0 ? r + M : r; }

long long extgcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) { x = 1; y = 0; return a; }
  long long x1, y1;
  long long g = extgcd(b, a % b, x1, y1);
  x = y1; y = x1 - (a / b) * y1;
  return g;
}

long long modinv(long long a, long long M) {
  long long x, y;
  extgcd(emod(a, M), M, x, y); // caller guarantees gcd 1
  return emod(x, M);
}

// p-adic valuation of x mod q = p^e; returns e for x == 0
int valuation(long long x, long long p, int e) {
  if (x == 0) return e;
  int v = 0;
  while (v < e && x % p == 0) { x /= p; ++v; }
  return v;
}

// Solve over the local ring Z/p^e: every nonzero element is unit * p^v, and a
// minimal-valuation pivot divides the rest of its row and column, so one
// clearing pass per pivot diagonalizes the system.
std::optional<std::vector<long long>> solve_local(std::vector<std::vector<long long>> A,
                                                  std::vector<long long> b, long long p,
                                                  int e, long long q) {
  const int R = (int)A.size();
  const int C = R ? (int)A[0].size() : 0;
  for (auto& row : A)
    for (auto& v : row) v = emod(v, q);
  for (auto& v : b) v = emod(v, q);

  std::vector<std::vector<long long>> V(C, std::vector<long long>(C, 0));
  for (int i = 0; i < C; ++i) V[i][i] = 1;

  const int T = std::min(R, C);
  for (int t = 0; t < T; ++t) {
    int pi = -1, pj = -1, bestv = e;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j) {
        if (A[i][j] == 0) continue;
        int v = valuation(A[i][j], p, e);
        if (v < bestv) { bestv = v; pi = i; pj = j; }
      }
    if (pi < 0) break;
    if (pi != t) { std::swap(A[t], A[pi]); std::swap(b[t], b[pi]); }
    if (pj != t) {
      for (int i = 0; i < R; ++i) std::swap(A[i][t], A[i][pj]);
      for (int i = 0; i < C; ++i) std::swap(V[i][t], V[i][pj]);
    }
    long long a = A[t][t];
    long long pv = 1;
    for (int k = 0; k < bestv; ++k) pv *= p;
    long long uinv = modinv(a / pv, q);
    for (int i = t + 1; i < R; ++i) {
      if (A[i][t] == 0) continue;
      long long c = emod(A[i][t] / pv % q * uinv, q);
      for (int j = t; j < C; ++j) A[i][j] = emod(A[i][j] - c * A[t][j], q);
      b[i] = emod(b[i] - c * b[t], q);
    }
    for (int j = t + 1; j < C; ++j) {
      if (A[t][j] == 0) continue;
      long long c = emod(A[t][j] / pv % q * uinv, q);
      for (int i = t; i < R; ++i) A[i][j] = emod(A[i][j] - c * A[i][t], q);
      for (int i = 0; i < C; ++i) V[i][j] = emod(V[i][j] - c * V[i][t], q);
    }
  }

  std::vector<long long> y(C, 0);
  for (int t = 0; t < T; ++t) {
    long long a = A[t][t], c = b[t];
    if (a == 0) {
      if (c != 0) return std::nullopt;
      continue;
    }
    int v = valuation(a, p, e);
    long long pv = 1;
    for (int k = 0; k < v; ++k) pv *= p;
    if (c % pv != 0) return std::nullopt;
    y[t] = emod(c / pv % q * modinv(a / pv, q), q);
  }
  for (int t = T; t < R; ++t)
    if (b[t] != 0) return std::nullopt;

  std::vector<long long> x(C, 0);
  for (int i = 0; i < C; ++i) {
    long long acc = 0;
    for (int j = 0; j < C; ++j) acc = emod(acc + V[i][j] * y[j], q);
    x[i] = acc;
  }
  return x;
}

} // namespace

// Split M into prime powers, solve each local system, recombine by CRT.
std::optional<std::vector<long long>> solve_linear_mod(
    std::vector<std::vector<long long>> A, std::vector<long long> b, long long M) {
  const int C = A.empty() ? 0 : (int)A[0].size();
  std::vector<long long> x(C, 0);
  long long mod_so_far = 1;
  long long rem = M;
  for (long long p = 2; p * p <= rem || rem > 1; ++p) {
    if (p * p > rem) p = rem; // rem is prime
    if (rem % p != 0) continue;
    int e = 0;
    long long q = 1;
    while (rem % p == 0) { rem /= p; q *= p; ++e; }
    auto xq = solve_local(A, b, p, e, q);
    if (!xq) return std::nullopt;
    // CRT: combine x (mod mod_so_far) with xq (mod q)
    long long inv = modinv(mod_so_far % q, q);
    for (int i = 0; i < C; ++i) {
      long long t = emod(((*xq)[i] - x[i]) % q * inv, q);
      x[i] = x[i] + mod_so_far * t;
    }
    mod_so_far *= q;
    if (rem == 1) break;
  }
  for (auto& v : x) v = emod(v, M);
  return x;
}

} // namespace gcx::detail
