#include "gcx/base.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

namespace gcx {

FrobeniusBase build_base(const std::vector<double>& codegrees,
                         const std::vector<std::string>& labels) {
  FrobeniusBase B;
  for (size_t i = 0; i < codegrees.size(); ++i) {
    if (!(codegrees[i] > 0.0))
      fail(errc::NonPositiveCodegree,
           "codegree[" + std::to_string(i) + "] = " + std::to_string(codegrees[i]));
    B.codegrees.push_back(codegrees[i]);
    B.characters.push_back(i < labels.size() ? labels[i] : "chi" + std::to_string(i));
  }
  if (B.characters.empty()) fail(errc::BadInput, "base must have at least one character");
  return B;
}

FrobeniusBase diagonalize_fusion_ring(const std::vector<std::vector<std::vector<cplx>>>& N,
                                      const std::vector<int>& duality,
                                      const std::vector<std::string>& basis_labels,
                                      double tol, unsigned long long seed) {
  const int n = (int)N.size();
  if (n == 0) fail(errc::BadInput, "empty structure constants");
  for (const auto& a : N) {
    if ((int)a.size() != n) fail(errc::BadInput, "structure constants not cubical");
    for (const auto& b : a)
      if ((int)b.size() != n) fail(errc::BadInput, "structure constants not cubical");
  }
  if ((int)duality.size() != n) fail(errc::BadInput, "duality size mismatch");
  for (int i = 0; i < n; ++i)
    if (duality[i] < 0 || duality[i] >= n || duality[duality[i]] != i)
      fail(errc::BadInput, "duality is not an involution");

  using Mat = Eigen::MatrixXcd;
  std::vector<Mat> L(n, Mat::Zero(n, n)); // (L_i)_{k,j} = N[i][j][k]
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) L[i](k, j) = N[i][j][k];

  // b_0 must be the unit
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double want = (j == k) ? 1.0 : 0.0;
      if (std::abs(L[0](k, j) - want) > tol)
        fail(errc::BadInput, "b_0 is not the unit");
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (std::abs(N[i][j][k] - N[j][i][k]) > tol)
          fail(errc::NotCommutative,
               "N[" + std::to_string(i) + "][" + std::to_string(j) + "] != transpose");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat lhs = L[i] * L[j], rhs = Mat::Zero(n, n);
      for (int k = 0; k < n; ++k) rhs += N[i][j][k] * L[k];
      if ((lhs - rhs).cwiseAbs().maxCoeff() > tol)
        fail(errc::NotAssociative,
             "L_" + std::to_string(i) + " L_" + std::to_string(j) + " mismatch");
    }

  // generic real combination; one re-draw on eigenvalue collision
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  Eigen::MatrixXcd V;
  bool ok = false;
  for (int attempt = 0; attempt < 2 && !ok; ++attempt) {
    Mat M = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) M += cplx(U(rng), 0.0) * L[i];
    Eigen::ComplexEigenSolver<Mat> es(M);
    if (es.info() != Eigen::Success) continue;
    auto ev = es.eigenvalues();
    double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if (std::abs(ev(a) - ev(b)) < 1e-8 * scale) ok = false;
    if (ok) V = es.eigenvectors();
  }
  if (!ok) fail(errc::DegenerateSpectrum, "repeated eigenvalues after re-draw");

  // read off characters: common eigenvector v, chi(b_i) = (L_i v)_k / v_k
  std::vector<std::vector<cplx>> chars(n, std::vector<cplx>(n));
  for (int c = 0; c < n; ++c) {
    Eigen::VectorXcd v = V.col(c);
    int k; v.cwiseAbs().maxCoeff(&k);
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXcd w = L[i] * v;
      chars[c][i] = w(k) / v(k);
      if ((w - chars[c][i] * v).cwiseAbs().maxCoeff() > std::sqrt(tol))
        fail(errc::DegenerateSpectrum, "joint eigenvector residual too large");
    }
  }

  // deterministic order: lexicographic by (Re, Im) rounded to 1e-6
  std::vector<int> ord(n);
  for (int i = 0; i < n; ++i) ord[i] = i;
  auto key = [&](int c) {
    std::vector<long long> k;
    for (int i = 0; i < n; ++i) {
      k.push_back((long long)std::llround(chars[c][i].real() * 1e6));
      k.push_back((long long)std::llround(chars[c][i].imag() * 1e6));
    }
    return k;
  };
  std::sort(ord.begin(), ord.end(), [&](int a, int b) { return key(a) < key(b); });

  FrobeniusBase B;
  B.fusion.emplace();
  FusionData& F = *B.fusion;
  F.N = N;
  F.duality = duality;
  for (int i = 0; i < n; ++i)
    F.basis.push_back(i < (int)basis_labels.size() ? basis_labels[i] : "b" + std::to_string(i));
  F.X.assign(n, std::vector<cplx>(n));
  for (int c = 0; c < n; ++c) {
    double codeg = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx x = chars[ord[c]][i];
      F.X[i][c] = x;
      codeg += std::norm(x);
    }
    if (!(codeg > tol)) fail(errc::NonPositiveCodegree, "vanishing codegree");
    B.codegrees.push_back(codeg);
    B.characters.push_back("chi" + std::to_string(c));
  }

  // lambda(b_i b_{j*}) must be delta_{ij} (orthonormal fusion basis)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx lam = 0.0;
      for (int c = 0; c < n; ++c) lam += F.X[i][c] * F.X[duality[j]][c] / B.codegrees[c];
      double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(lam - want) > std::sqrt(tol))
        fail(errc::DegenerateForm,
             "lambda(b_" + std::to_string(i) + " b_" + std::to_string(j) + "*) = " +
                 std::to_string(lam.real()) + "+" + std::to_string(lam.imag()) + "i");
    }
  return B;
}

GAction install_action(const FrobeniusBase& base, const FiniteGroup& group,
                       const std::vector<std::vector<int>>& perm, double tol) {
  const int n = base.dim(), N = group.order;
  if ((int)perm.size() != N) fail(errc::BadInput, "need one permutation per group element");
  for (const auto& p : perm) {
    if ((int)p.size() != n) fail(errc::BadInput, "permutation size mismatch");
    std::vector<char> seen(n, 0);
    for (int v : p) {
      if (v < 0 || v >= n || seen[v]) fail(errc::BadInput, "not a permutation");
      seen[v] = 1;
    }
  }
  for (int chi = 0; chi < n; ++chi)
    if (perm[0][chi] != chi) fail(errc::NotHomomorphism, "identity does not act trivially");
  for (int g = 0; g < N; ++g)
    for (int h = 0; h < N; ++h)
      for (int chi = 0; chi < n; ++chi)
        if (perm[g][perm[h][chi]] != perm[group.mul(g, h)][chi])
          fail(errc::NotHomomorphism,
               "pi_g pi_h != pi_gh at (g,h,chi)=(" + std::to_string(g) + "," +
                   std::to_string(h) + "," + std::to_string(chi) + ")");
  for (int g = 0; g < N; ++g)
    for (int chi = 0; chi < n; ++chi)
      if (std::abs(base.codegrees[perm[g][chi]] - base.codegrees[chi]) > tol)
        fail(errc::CodegreeNotPreserved,
             "g=" + std::to_string(g) + ", chi=" + std::to_string(chi));
  return GAction{group, base, perm};
}

std::vector<int> fixed_characters(const GAction& action, const std::vector<int>& S) {
  std::vector<int> out;
  for (int chi = 0; chi < action.base.dim(); ++chi) {
    bool fixed = true;
    for (int g : S)
      if (action.perm[g][chi] != chi) { fixed = false; break; }
    if (fixed) out.push_back(chi);
  }
  return out;
}

GAction trivial_action(const FrobeniusBase& base, const FiniteGroup& group) {
  std::vector<int> id(base.dim());
  for (int i = 0; i < base.dim(); ++i) id[i] = i;
  return install_action(base, group, std::vector<std::vector<int>>(group.order, id));
}

} // namespace gcx
