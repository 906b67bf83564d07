#include "gcx/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gcx {

const char* errc_name(errc c) {
  switch (c) {
    case errc::NotAssociative: return "NotAssociative";
    case errc::NoIdentity: return "NoIdentity";
    case errc::NoInverse: return "NoInverse";
    case errc::OrderTooLarge: return "OrderTooLarge";
    case errc::NonPositiveCodegree: return "NonPositiveCodegree";
    case errc::NotCommutative: return "NotCommutative";
    case errc::DegenerateForm: return "DegenerateForm";
    case errc::DegenerateSpectrum: return "DegenerateSpectrum";
    case errc::NotHomomorphism: return "NotHomomorphism";
    case errc::CodegreeNotPreserved: return "CodegreeNotPreserved";
    case errc::UnsupportedDegree: return "UnsupportedDegree";
    case errc::NotACocycle: return "NotACocycle";
    case errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case errc::BaseMismatch: return "BaseMismatch";
    case errc::NotOValued: return "NotOValued";
    case errc::ZeroValue: return "ZeroValue";
    case errc::StarIncompatible: return "StarIncompatible";
    case errc::OwnerMismatch: return "OwnerMismatch";
    case errc::AxiomsFail: return "AxiomsFail";
    case errc::BasisNotAligned: return "BasisNotAligned";
    case errc::NotFixed: return "NotFixed";
    case errc::ZeroDenominator: return "ZeroDenominator";
    case errc::ProductNotIdentity: return "ProductNotIdentity";
    case errc::WrongComponent: return "WrongComponent";
    case errc::NotOrthogonal: return "NotOrthogonal";
    case errc::NotSpanning: return "NotSpanning";
    case errc::DimensionMismatch: return "DimensionMismatch";
    case errc::MissingSector: return "MissingSector";
    case errc::BadInput: return "BadInput";
  }
  return "UnknownError";
}

FiniteGroup load_group(const std::vector<std::vector<int>>& table,
                       std::string* warning, int max_order) {
  const int n = (int)table.size();
  if (n == 0) fail(errc::BadInput, "empty multiplication table");
  if (n > max_order)
    fail(errc::OrderTooLarge, "order " + std::to_string(n) + " exceeds cap " +
                                  std::to_string(max_order));
  for (const auto& row : table) {
    if ((int)row.size() != n) fail(errc::BadInput, "table is not square");
    for (int v : row)
      if (v < 0 || v >= n) fail(errc::BadInput, "entry out of range: " + std::to_string(v));
  }

  // find a two-sided identity
  int e = -1;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g)
      ok = table[c][g] == g && table[g][c] == g;
    if (ok) { e = c; break; }
  }
  if (e < 0) fail(errc::NoIdentity, "no two-sided identity element");

  std::vector<std::vector<int>> t = table;
  if (e != 0) {
    if (warning) *warning = "identity was at index " + std::to_string(e) + "; re-indexed to 0";
    // swap labels 0 <-> e
    std::vector<int> relab(n);
    std::iota(relab.begin(), relab.end(), 0);
    relab[0] = e; relab[e] = 0;
    std::vector<std::vector<int>> t2(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        t2[g][h] = relab[table[relab[g]][relab[h]]];
    t = t2;
  }

  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (t[t[g][h]][k] != t[g][t[h][k]])
          fail(errc::NotAssociative,
               "(g,h,k)=(" + std::to_string(g) + "," + std::to_string(h) + "," +
                   std::to_string(k) + ")");

  FiniteGroup G;
  G.order = n;
  G.table = std::move(t);
  G.inverse.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (G.table[g][h] == 0 && G.table[h][g] == 0) { G.inverse[g] = h; break; }
    if (G.inverse[g] < 0)
      fail(errc::NoInverse, "element " + std::to_string(g) + " has no two-sided inverse");
  }
  return G;
}

std::vector<int> generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
  for (int g : gens)
    if (g < 0 || g >= G.order) fail(errc::BadInput, "generator out of range");
  std::set<int> S{0};
  for (int g : gens) S.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(S.begin(), S.end());
    for (int a : cur)
      for (int b : cur)
        if (S.insert(G.mul(a, b)).second) grew = true;
  }
  return {S.begin(), S.end()};
}

int commutator(const FiniteGroup& G, int g, int h) {
  return G.mul(G.mul(G.mul(g, h), G.inv(g)), G.inv(h));
}

int element_order(const FiniteGroup& G, int g) {
  int m = 1, x = g;
  while (x != 0) { x = G.mul(x, g); ++m; }
  return m;
}

FiniteGroup cyclic_group(int m) {
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return load_group(t);
}

FiniteGroup product_group(const FiniteGroup& A, const FiniteGroup& B) {
  const int n = A.order * B.order;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  auto idx = [&](int a, int b) { return a * B.order + b; };
  for (int a = 0; a < A.order; ++a)
    for (int b = 0; b < B.order; ++b)
      for (int c = 0; c < A.order; ++c)
        for (int d = 0; d < B.order; ++d)
          t[idx(a, b)][idx(c, d)] = idx(A.mul(a, c), B.mul(b, d));
  return load_group(t);
}

FiniteGroup klein_four() {
  // bit vectors (x1,x2) with XOR; 0=(0,0) 1=(1,0) 2=(0,1) 3=(1,1)
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return load_group(t);
}

FiniteGroup symmetric3() {
  // permutations of {0,1,2}: index by (id, (01), (02), (12), (012), (021))
  const int perms[6][3] = {{0,1,2},{1,0,2},{2,1,0},{0,2,1},{1,2,0},{2,0,1}};
  auto find = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0]==p[0] && perms[i][1]==p[1] && perms[i][2]==p[2]) return i;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int c[3];
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = find(c);
    }
  return load_group(t);
}

FiniteGroup dihedral4() {
  // r^i s^j, i in 0..3, j in 0..1; index = i + 4*j
  auto idx = [](int i, int j) { return (i & 3) + 4 * (j & 1); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i1 = 0; i1 < 4; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + i2*(-1)^j1) s^(j1+j2)
          int i = j1 ? (i1 - i2 + 8) % 4 : (i1 + i2) % 4;
          t[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2);
        }
  return load_group(t);
}

} // namespace gcx
